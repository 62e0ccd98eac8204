#include "dmf/useries.hpp"

#include <algorithm>
#include <cmath>

#include "dmf/error.hpp"

namespace dmf {

USeries::USeries(FqPtr field, int prec) : F_(std::move(field)) {
    if (prec < 0) throw Error("negative precision");
    c_.assign(static_cast<std::size_t>(prec), RatK::zero(F_));
}

USeries::USeries(FqPtr field, std::vector<RatK> coeffs)
    : F_(std::move(field)), c_(std::move(coeffs)) {}

USeries USeries::constant(const FqPtr& field, const RatK& c, int prec) {
    USeries r(field, prec);
    if (prec > 0) r.set_coeff(0, c);
    return r;
}

USeries USeries::unit_u(const FqPtr& field, int prec) {
    USeries r(field, prec);
    if (prec > 1) r.set_coeff(1, RatK::one(field));
    return r;
}

int USeries::ord() const {
    for (int i = 0; i < prec(); ++i)
        if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
    return prec();
}

int USeries::ord_for_prec() const {
    const int o = ord();
    return o == prec() ? 0 : o;
}

void USeries::add_in_place(const USeries& o) {
    if (o.prec() < prec()) c_.resize(static_cast<std::size_t>(o.prec()), RatK::zero(F_));
    for (int i = 0; i < prec(); ++i)
        c_[static_cast<std::size_t>(i)] += o.coeff(i);
}

USeries USeries::operator+(const USeries& o) const {
    USeries r = truncated(std::min(prec(), o.prec()));
    for (int i = 0; i < r.prec(); ++i) r.c_[static_cast<std::size_t>(i)] += o.coeff(i);
    return r;
}

USeries USeries::operator-(const USeries& o) const {
    USeries r = truncated(std::min(prec(), o.prec()));
    for (int i = 0; i < r.prec(); ++i) r.c_[static_cast<std::size_t>(i)] -= o.coeff(i);
    return r;
}

USeries USeries::operator-() const {
    USeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

USeries USeries::scaled(const RatK& s) const {
    USeries r(F_, prec());
    if (s.is_zero()) return r;
    for (int i = 0; i < prec(); ++i) r.c_[static_cast<std::size_t>(i)] = coeff(i) * s;
    return r;
}

USeries USeries::truncated(int prec_out) const {
    if (prec_out > prec()) throw PrecisionError("cannot extend a series by truncation");
    USeries r(F_, 0);
    r.c_.assign(c_.begin(), c_.begin() + prec_out);
    return r;
}

USeries USeries::shifted_up(int k) const {
    USeries r(F_, prec() + k);
    for (int i = 0; i < prec(); ++i) r.c_[static_cast<std::size_t>(i + k)] = coeff(i);
    return r;
}

USeries USeries::shifted_down(int k) const {
    if (prec() < k) throw PrecisionError("shift below available precision");
    for (int i = 0; i < k; ++i)
        if (!coeff(i).is_zero()) throw Error("shifted_down across a nonzero coefficient");
    USeries r(F_, 0);
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

USeries USeries::pow(long e) const {
    if (e < 0) throw Error("negative series power");
    if (e == 0) return constant(F_, RatK::one(F_), prec());
    USeries acc = *this;
    // Left-to-right square and multiply keeps intermediate orders small.
    int topbit = 63;
    while (!((e >> topbit) & 1)) --topbit;
    for (int b = topbit - 1; b >= 0; --b) {
        acc = series_mul(acc, acc);
        if ((e >> b) & 1) acc = series_mul(acc, *this);
    }
    return acc;
}

bool USeries::agrees_with(const USeries& o, int upto) const {
    if (prec() < upto || o.prec() < upto) return false;
    for (int i = 0; i < upto; ++i)
        if (coeff(i) != o.coeff(i)) return false;
    return true;
}

std::vector<std::string> USeries::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.to_string());
    return out;
}

namespace {

bool all_integral(const USeries& f) {
    for (int i = 0; i < f.prec(); ++i)
        if (!f.coeff(i).is_integral()) return false;
    return true;
}

// Product over A with delayed reduction: both inputs have denominator 1 and
// the field is prime.
void mul_integral_prime(const USeries& f, const USeries& g, USeries& out) {
    const std::uint64_t p = f.field()->q();
    std::vector<std::uint64_t> scratch;
    for (int n = 0; n < out.prec(); ++n) {
        const int lo = std::max(0, n - (g.prec() - 1));
        const int hi = std::min(n, f.prec() - 1);
        int maxd = -1;
        for (int i = lo; i <= hi; ++i) {
            const PolyA& a = f.coeff(i).num();
            const PolyA& b = g.coeff(n - i).num();
            if (a.is_zero() || b.is_zero()) continue;
            maxd = std::max(maxd, a.degree() + b.degree());
        }
        if (maxd < 0) continue;
        scratch.assign(static_cast<std::size_t>(maxd) + 1, 0);
        for (int i = lo; i <= hi; ++i) {
            const PolyA& a = f.coeff(i).num();
            const PolyA& b = g.coeff(n - i).num();
            if (a.is_zero() || b.is_zero()) continue;
            const auto& ac = a.coeffs();
            const auto& bc = b.coeffs();
            for (std::size_t ia = 0; ia < ac.size(); ++ia) {
                const std::uint64_t av = ac[ia];
                if (av == 0) continue;
                std::uint64_t* dst = scratch.data() + ia;
                for (std::size_t jb = 0; jb < bc.size(); ++jb) dst[jb] += av * bc[jb];
            }
        }
        std::vector<std::uint32_t> rc(static_cast<std::size_t>(maxd) + 1);
        for (std::size_t k = 0; k < rc.size(); ++k)
            rc[k] = static_cast<std::uint32_t>(scratch[k] % p);
        out.set_coeff(n, RatK(PolyA(f.field(), std::move(rc))));
    }
}

}  // namespace

USeries series_mul(const USeries& f, const USeries& g) {
    if (!f.field()->same_field(*g.field())) throw Error("field mismatch in series_mul");
    const int pout = std::min(f.prec() + g.ord_for_prec(), g.prec() + f.ord_for_prec());
    USeries out(f.field(), pout);
    if (f.known_zero() || g.known_zero()) return out;
    if (f.field()->prime_field() && all_integral(f) && all_integral(g)) {
        mul_integral_prime(f, g, out);
        return out;
    }
    for (int n = 0; n < pout; ++n) {
        RatK acc = RatK::zero(f.field());
        const int lo = std::max(0, n - (g.prec() - 1));
        const int hi = std::min(n, f.prec() - 1);
        for (int i = lo; i <= hi; ++i) {
            const RatK& a = f.coeff(i);
            const RatK& b = g.coeff(n - i);
            if (a.is_zero() || b.is_zero()) continue;
            acc += a * b;
        }
        out.set_coeff(n, std::move(acc));
    }
    return out;
}

USeries series_inv(const USeries& f) {
    if (f.prec() == 0) return f;
    if (f.coeff(0).is_zero())
        throw NonUnitSeries("series inverse requires a unit constant term");
    const RatK c0_inv = f.coeff(0).inverse();
    USeries g(f.field(), f.prec());
    g.set_coeff(0, c0_inv);
    // Which f_k are nonzero, to skip the zero taps in the recurrence.
    std::vector<int> taps;
    for (int k = 1; k < f.prec(); ++k)
        if (!f.coeff(k).is_zero()) taps.push_back(k);
    for (int n = 1; n < f.prec(); ++n) {
        RatK acc = RatK::zero(f.field());
        for (int k : taps) {
            if (k > n) break;
            acc += f.coeff(k) * g.coeff(n - k);
        }
        if (!acc.is_zero()) g.set_coeff(n, -(c0_inv * acc));
    }
    return g;
}

USeries series_compose(const USeries& f, const USeries& s) {
    if (s.prec() < 1 || !s.coeff(0).is_zero())
        throw CompositionNotSupported("composition requires s(0) = 0");
    if (f.prec() == 0) return USeries(f.field(), 0);
    if (s.known_zero()) return USeries::constant(f.field(), f.coeff(0), s.prec());
    const int m = s.ord();
    const long pout_l = static_cast<long>(f.prec()) * m;
    if (pout_l > s.prec())
        throw PrecisionError("series_compose: s carries precision " + std::to_string(s.prec()) +
                             " but " + std::to_string(pout_l) + " is required");
    const int pout = static_cast<int>(pout_l);

    // Paterson-Stockmeyer over truncations at the output precision.
    const int terms = f.prec();
    const int b = std::max(1, static_cast<int>(std::lround(std::ceil(std::sqrt(terms)))));
    std::vector<USeries> baby;
    baby.reserve(static_cast<std::size_t>(b));
    baby.push_back(USeries::constant(f.field(), RatK::one(f.field()), pout));
    if (b > 1) baby.push_back(s.truncated(pout));
    for (int i = 2; i < b; ++i)
        baby.push_back(series_mul(baby.back(), baby[1]).truncated(pout));
    const USeries giant =
        b > 1 ? series_mul(baby.back(), baby[1]).truncated(pout) : s.truncated(pout);

    const int blocks = (terms + b - 1) / b;
    USeries acc(f.field(), pout);
    for (int j = blocks - 1; j >= 0; --j) {
        if (j != blocks - 1) acc = series_mul(acc, giant).truncated(pout);
        for (int i = 0; i < b; ++i) {
            const int idx = j * b + i;
            if (idx >= terms) break;
            if (f.coeff(idx).is_zero()) continue;
            acc.add_in_place(baby[static_cast<std::size_t>(i)].scaled(f.coeff(idx)));
        }
    }
    return acc;
}

USeries series_root(const USeries& f, long n) {
    if (n <= 0) throw RootObstruction("root index must be positive");
    if (n % f.field()->p() == 0)
        throw RootObstruction("root index divisible by the characteristic");
    if (f.prec() == 0) return f;
    if (!f.coeff(0).is_one()) throw RootObstruction("series root requires constant term 1");

    const RatK n_inv = RatK::from_int(f.field(), n).inverse();
    USeries g = USeries::constant(f.field(), RatK::one(f.field()), 1);
    while (g.prec() < f.prec()) {
        const int np = std::min(2 * g.prec(), f.prec());
        USeries gx(f.field(), np);
        for (int i = 0; i < g.prec(); ++i) gx.set_coeff(i, g.coeff(i));
        // Newton step: g <- g - (g^n - f) / (n g^{n-1}).
        const USeries gpow = gx.pow(n - 1);
        const USeries err = series_mul(gpow, gx) - f.truncated(np);
        const USeries corr = series_mul(err, series_inv(gpow)).truncated(np).scaled(n_inv);
        gx = gx - corr;
        g = gx;
    }
    return g;
}

long series_vpi(const USeries& f, const PrimePi& pi) {
    long v = kValInfinity;
    for (int i = 0; i < f.prec(); ++i) {
        const RatK& c = f.coeff(i);
        if (c.is_zero()) continue;
        v = std::min(v, c.vpi(pi));
    }
    return v;
}

ResSeries series_reduce_mod_pi(const USeries& f, const PrimePi& pi) {
    ResField R(pi);
    std::vector<PolyA> out;
    out.reserve(static_cast<std::size_t>(f.prec()));
    for (int i = 0; i < f.prec(); ++i) out.push_back(R.reduce(f.coeff(i)));
    return ResSeries(pi, std::move(out));
}

bool ResSeries::known_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<std::string> ResSeries::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.to_string());
    return out;
}

}  // namespace dmf
