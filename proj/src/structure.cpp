#include "dmf/structure.hpp"

#include <algorithm>

#include "dmf/error.hpp"

namespace dmf {
namespace {

void check_isobaric_key(const FqPtr& F, long weight, int type, long i, long j) {
    const long q = F->q();
    if (i < 0 || j < 0) throw Error("negative monomial exponent");
    if ((q - 1) * i + (q + 1) * j != weight) throw Error("monomial violates the weight");
    if ((j - type) % (q - 1) != 0) throw Error("monomial violates the type");
}

// Univariate encoding of an isobaric polynomial: monomial (i, j) maps to
// y^{(j - j_min)/(q-1)}. Weights and j-degrees add under multiplication, so
// divisibility transfers verbatim.
struct ResPoly {
    std::vector<PolyA> c;  // index = y-degree, residues mod pi

    int degree() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (!c[static_cast<std::size_t>(i)].is_zero()) return i;
        return -1;
    }
};

ResPoly encode(const ResIsobarPoly& phi, long jmin, const FqPtr& F) {
    const long q = F->q();
    ResPoly out;
    for (const auto& [key, coeff] : phi.terms()) {
        const long m = (key.second - jmin) / (q - 1);
        if (static_cast<long>(out.c.size()) <= m)
            out.c.resize(static_cast<std::size_t>(m) + 1, PolyA::zero(F));
        out.c[static_cast<std::size_t>(m)] = coeff;
    }
    return out;
}

long min_j(const ResIsobarPoly& phi) {
    long j = -1;
    for (const auto& [key, coeff] : phi.terms())
        if (j < 0 || key.second < j) j = key.second;
    return j;
}

// Exact division in (A/pi)[y]; returns false when the remainder is nonzero.
bool divide_exact(const ResPoly& num, const ResPoly& den, const ResField& R, ResPoly& quo) {
    const int dn = num.degree(), dd = den.degree();
    if (dd < 0) throw Error("division by zero polynomial over A/pi");
    if (dn < dd) return dn < 0;  // zero divides evenly
    std::vector<PolyA> rem = num.c;
    rem.resize(static_cast<std::size_t>(dn) + 1, R.zero());
    quo.c.assign(static_cast<std::size_t>(dn - dd) + 1, R.zero());
    const PolyA lead_inv = R.inv(den.c[static_cast<std::size_t>(dd)]);
    for (int k = dn - dd; k >= 0; --k) {
        const PolyA f = R.mul(rem[static_cast<std::size_t>(k + dd)], lead_inv);
        if (f.is_zero()) continue;
        quo.c[static_cast<std::size_t>(k)] = f;
        for (int t = 0; t <= dd; ++t) {
            auto& x = rem[static_cast<std::size_t>(k + t)];
            x = R.sub(x, R.mul(f, den.c[static_cast<std::size_t>(t)]));
        }
    }
    for (const PolyA& x : rem)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

IsobarPoly::IsobarPoly(FqPtr field, long weight, int type)
    : F_(std::move(field)), weight_(weight), type_(type) {
    const int qm1 = static_cast<int>(F_->q()) - 1;
    type_ = ((type_ % qm1) + qm1) % qm1;
}

void IsobarPoly::set(long i, long j, RatK c) {
    check_isobaric_key(F_, weight_, type_, i, j);
    if (c.is_zero())
        terms_.erase({i, j});
    else
        terms_[{i, j}] = std::move(c);
}

RatK IsobarPoly::coeff(long i, long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? RatK::zero(F_) : it->second;
}

IsobarPoly IsobarPoly::operator*(const IsobarPoly& o) const {
    IsobarPoly out(F_, weight_ + o.weight_, type_ + o.type_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            const Key key{ka.first + kb.first, ka.second + kb.second};
            const RatK prod = ca * cb;
            auto it = out.terms_.find(key);
            if (it == out.terms_.end()) {
                check_isobaric_key(F_, out.weight_, out.type_, key.first, key.second);
                out.terms_.emplace(key, prod);
            } else {
                it->second += prod;
            }
        }
    for (auto it = out.terms_.begin(); it != out.terms_.end();)
        it = it->second.is_zero() ? out.terms_.erase(it) : std::next(it);
    return out;
}

USeries IsobarPoly::expand(int N) const {
    const SeriesForm g1 = gd_series_of_degree(F_, 1, N);
    const SeriesForm h = h_series(F_, N);
    USeries acc(F_, N);
    for (const auto& [key, c] : terms_) {
        USeries mon = series_mul(g1.series().pow(key.first), h.series().pow(key.second));
        if (mon.prec() > N) mon = mon.truncated(N);
        acc.add_in_place(mon.scaled(c));
    }
    return acc;
}

ResIsobarPoly::ResIsobarPoly(PrimePi pi, long weight, int type)
    : pi_(std::move(pi)), weight_(weight), type_(type) {
    const int qm1 = static_cast<int>(pi_.field()->q()) - 1;
    type_ = ((type_ % qm1) + qm1) % qm1;
}

void ResIsobarPoly::set(long i, long j, PolyA c) {
    check_isobaric_key(pi_.field(), weight_, type_, i, j);
    c = c % pi_.poly();
    if (c.is_zero())
        terms_.erase({i, j});
    else
        terms_[{i, j}] = std::move(c);
}

std::vector<IsobarPoly::Key> enumerate_monomials(const FqPtr& field, long k, int l) {
    const long q = field->q();
    const int qm1 = static_cast<int>(q) - 1;
    const long lnorm = ((l % qm1) + qm1) % qm1;
    std::vector<IsobarPoly::Key> out;
    for (long j = lnorm; (q + 1) * j <= k; j += qm1) {
        const long rest = k - (q + 1) * j;
        if (rest % (q - 1) != 0) continue;
        out.push_back({rest / (q - 1), j});
    }
    return out;
}

IsobarPoly isobaric_solve(const SeriesForm& f) {
    if (f.level() != Level::one) throw InvalidForm("isobaric_solve needs a level-1 form");
    const FqPtr& F = f.field();
    const auto monomials = enumerate_monomials(F, f.weight(), f.type());
    IsobarPoly out(F, f.weight(), f.type());

    if (monomials.empty()) {
        if (!f.series().known_zero())
            throw NotInSpan("nonzero series in an empty monomial space (weight " +
                            std::to_string(f.weight()) + ", type " + std::to_string(f.type()) + ")");
        return out;
    }

    const long maxj = monomials.back().second;
    const long margin = std::max<long>(8, static_cast<long>(monomials.size()));
    if (f.prec() <= maxj + margin)
        throw PrecisionError("isobaric_solve needs precision > " + std::to_string(maxj + margin) +
                             ", got " + std::to_string(f.prec()));

    const int N = f.prec();
    const SeriesForm g1 = gd_series_of_degree(F, 1, N);
    const SeriesForm h = h_series(F, N);

    USeries residual = f.series();
    for (const auto& [i, j] : monomials) {
        const RatK r = residual.coeff(static_cast<int>(j));
        if (r.is_zero()) continue;
        USeries mon = series_mul(g1.series().pow(i), h.series().pow(j));
        if (mon.prec() > N) mon = mon.truncated(N);
        const RatK c = r / mon.coeff(static_cast<int>(j));
        out.set(i, j, c);
        residual = residual - mon.scaled(c);
    }
    if (!residual.known_zero()) {
        throw NotInSpan("residual is nonzero at u^" + std::to_string(residual.ord()) +
                        " after eliminating every monomial of weight " +
                        std::to_string(f.weight()));
    }
    return out;
}

std::pair<IsobarPoly, IsobarPoly> ad_bd(const PrimePi& pi, int N) {
    const SeriesForm gd = gd_series(pi, N);
    return {isobaric_solve(gd), isobaric_solve(partial(gd))};
}

ResIsobarPoly reduce_isobaric(const IsobarPoly& phi, const PrimePi& pi) {
    const ResField R(pi);
    ResIsobarPoly out(pi, phi.weight(), phi.type());
    for (const auto& [key, c] : phi.terms()) out.set(key.first, key.second, R.reduce(c));
    return out;
}

DividePowerResult isobaric_divide_power(const ResIsobarPoly& phi, const ResIsobarPoly& a) {
    if (a.is_zero()) throw Error("isobaric_divide_power: zero divisor");
    const FqPtr& F = phi.pi().field();
    DividePowerResult res{0, false, ResIsobarPoly(phi.pi(), phi.weight(), phi.type())};
    if (phi.is_zero()) {
        res.infinite = true;
        return res;
    }

    const ResField R(phi.pi());
    const long q = F->q();
    const long ja = min_j(a);
    const ResPoly ay = encode(a, ja, F);

    const long jphi = min_j(phi);
    ResPoly cur = encode(phi, jphi, F);
    long e = 0;
    while (true) {
        ResPoly quo;
        if (!divide_exact(cur, ay, R, quo)) break;
        // The y-encoding forgets monomial X/Y factors; a division only
        // counts if the decoded quotient keeps nonnegative exponents.
        const long enew = e + 1;
        const long jminq = jphi - enew * ja;
        if (jminq < 0) break;
        const long wq = phi.weight() - enew * a.weight();
        const long jmaxq = jminq + (q - 1) * quo.degree();
        if (wq - (q + 1) * jmaxq < 0) break;
        cur = std::move(quo);
        e = enew;
    }
    res.e = e;

    const long wq = phi.weight() - res.e * a.weight();
    const long jq = jphi - res.e * ja;
    ResIsobarPoly quotient(phi.pi(), wq, static_cast<int>(((phi.type() - e * a.type()) % (q - 1) + (q - 1)) % (q - 1)));
    for (long m = 0; m <= cur.degree(); ++m) {
        const PolyA& c = cur.c[static_cast<std::size_t>(m)];
        if (c.is_zero()) continue;
        const long j = jq + m * (q - 1);
        const long i = (wq - (q + 1) * j) / (q - 1);
        quotient.set(i, j, c);
    }
    res.quotient = std::move(quotient);
    return res;
}

bool isobaric_coprime(const ResIsobarPoly& a, const ResIsobarPoly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    const FqPtr& F = a.pi().field();
    // Monomial factors: Y divides iff j_min > 0; X divides iff the smallest
    // exponent i (attained at the largest j) is positive.
    auto min_i = [](const ResIsobarPoly& p) {
        long i = -1;
        for (const auto& [key, c] : p.terms())
            if (i < 0 || key.first < i) i = key.first;
        return i;
    };
    if (min_j(a) > 0 && min_j(b) > 0) return false;
    if (min_i(a) > 0 && min_i(b) > 0) return false;

    const ResField R(a.pi());
    ResPoly pa = encode(a, min_j(a), F);
    ResPoly pb = encode(b, min_j(b), F);
    // Euclid in (A/pi)[y].
    while (pb.degree() >= 0) {
        const int dd = pb.degree();
        const PolyA lead_inv = R.inv(pb.c[static_cast<std::size_t>(dd)]);
        while (pa.degree() >= dd) {
            const int k = pa.degree() - dd;
            const PolyA f = R.mul(pa.c[static_cast<std::size_t>(pa.degree())], lead_inv);
            for (int t = 0; t <= dd; ++t) {
                auto& x = pa.c[static_cast<std::size_t>(k + t)];
                x = R.sub(x, R.mul(f, pb.c[static_cast<std::size_t>(t)]));
            }
            pa.c.resize(static_cast<std::size_t>(std::max(pa.degree() + 1, 0)));
            if (pa.degree() < 0) break;
        }
        std::swap(pa, pb);
    }
    return pa.degree() == 0;
}

long filtration(const SeriesForm& f, const PrimePi& pi) {
    if (f.level() != Level::one) throw InvalidForm("filtration needs a level-1 form");
    const long v = series_vpi(f.series(), pi);
    if (v < 0) throw NotPiIntegral("filtration input is not pi-integral");
    if (v >= 1) return kValNegInfinity;

    const IsobarPoly phi = isobaric_solve(f);
    const ResIsobarPoly phibar = reduce_isobaric(phi, pi);
    if (phibar.is_zero()) return kValNegInfinity;

    const long qd = pi.qd();
    // A_d at just enough precision for its own solve.
    const auto admons = enumerate_monomials(pi.field(), qd - 1, 0);
    const long need = admons.back().second + std::max<long>(8, static_cast<long>(admons.size())) + 1;
    const SeriesForm gd = gd_series(pi, static_cast<int>(std::max<long>(need, 12)));
    const ResIsobarPoly adbar = reduce_isobaric(isobaric_solve(gd), pi);

    const long e = isobaric_divide_power(phibar, adbar).e;
    const long w = f.weight() - e * (qd - 1);
    if (((w - f.weight()) % (qd - 1)) != 0) throw Error("filtration congruence violated");
    return w;
}

}  // namespace dmf
