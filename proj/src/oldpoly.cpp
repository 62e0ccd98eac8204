#include "dmf/oldpoly.hpp"

#include <algorithm>
#include <map>

#include "dmf/error.hpp"

namespace dmf {
namespace {

long pow_long(long b, int e) {
    long v = 1;
    while (e-- > 0) v *= b;
    return v;
}

}  // namespace

Atom Atom::level1(BaseForm base, int d, bool iota) {
    Atom a;
    a.kind_ = Kind::level1;
    a.base_ = base;
    a.d_ = base == BaseForm::gd ? d : 0;
    a.iota_ = iota;
    if (base == BaseForm::gd && d < 1) throw Error("g_d atom needs d >= 1");
    return a;
}

Atom Atom::estar() {
    Atom a;
    a.kind_ = Kind::estar;
    return a;
}

Atom Atom::del(std::shared_ptr<const OldPoly> base, int alpha) {
    if (!base || base->is_zero()) throw Error("DEL atom needs a nonzero base");
    if (alpha != 1 && alpha != -1) throw Error("DEL atom eigenvalue must be +-1");
    Atom a;
    a.kind_ = Kind::del;
    a.del_base_ = std::move(base);
    a.del_alpha_ = alpha;
    return a;
}

long Atom::weight(const FqPtr& field) const {
    const long q = field->q();
    switch (kind_) {
        case Kind::level1:
            switch (base_) {
                case BaseForm::gd:
                    return pow_long(q, d_) - 1;
                case BaseForm::h:
                    return q + 1;
                case BaseForm::delta:
                    return q * q - 1;
            }
            break;
        case Kind::estar:
            return 2;
        case Kind::del:
            return del_base_->weight() + 2;
    }
    throw Error("unknown atom");
}

int Atom::type_l(const FqPtr& field) const {
    (void)field;
    switch (kind_) {
        case Kind::level1:
            return base_ == BaseForm::h ? 1 : 0;
        case Kind::estar:
            return 1;
        case Kind::del:
            return del_base_->type_l() + 1;
    }
    throw Error("unknown atom");
}

std::string Atom::name() const {
    std::string body;
    switch (kind_) {
        case Kind::level1:
            switch (base_) {
                case BaseForm::gd:
                    body = "g" + std::to_string(d_);
                    break;
                case BaseForm::h:
                    body = "h";
                    break;
                case BaseForm::delta:
                    body = "delta";
                    break;
            }
            return iota_ ? "iota(" + body + ")" : body;
        case Kind::estar:
            return "e_star";
        case Kind::del:
            return "del[" + std::to_string(del_alpha_) + "](" + del_base_->describe() + ")";
    }
    return "?";
}

int Atom::compare(const Atom& a, const Atom& b) {
    auto rank = [](const Atom& x) {
        return x.kind_ == Kind::level1 ? 0 : (x.kind_ == Kind::estar ? 1 : 2);
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
    switch (a.kind_) {
        case Kind::level1: {
            const auto ka = std::tuple(static_cast<int>(a.base_), a.d_, a.iota_);
            const auto kb = std::tuple(static_cast<int>(b.base_), b.d_, b.iota_);
            return ka < kb ? -1 : (kb < ka ? 1 : 0);
        }
        case Kind::estar:
            return 0;
        case Kind::del: {
            if (a.del_alpha_ != b.del_alpha_) return a.del_alpha_ < b.del_alpha_ ? -1 : 1;
            const std::string da = a.del_base_->describe(), db = b.del_base_->describe();
            return da < db ? -1 : (db < da ? 1 : 0);
        }
    }
    return 0;
}

namespace {

bool factors_less(const std::vector<std::pair<Atom, int>>& a,
                  const std::vector<std::pair<Atom, int>>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        const int c = Atom::compare(a[i].first, b[i].first);
        if (c != 0) return c < 0;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

bool factors_equal(const std::vector<std::pair<Atom, int>>& a,
                   const std::vector<std::pair<Atom, int>>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].second != b[i].second || Atom::compare(a[i].first, b[i].first) != 0) return false;
    return true;
}

}  // namespace

void OldPoly::canonicalize() {
    std::sort(mono_.begin(), mono_.end(),
              [](const OldMonomial& x, const OldMonomial& y) { return factors_less(x.factors, y.factors); });
    std::vector<OldMonomial> out;
    for (auto& m : mono_) {
        if (m.coeff.is_zero()) continue;
        if (!out.empty() && factors_equal(out.back().factors, m.factors)) {
            out.back().coeff += m.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else {
            out.push_back(std::move(m));
        }
    }
    mono_ = std::move(out);
}

OldPoly OldPoly::zero(const PrimePi& pi, long weight, int type) {
    return OldPoly(pi, weight, type);
}

OldPoly OldPoly::scalar(const PrimePi& pi, RatK c) {
    OldPoly r(pi, 0, 0);
    if (!c.is_zero()) r.mono_.push_back({std::move(c), {}});
    return r;
}

OldPoly OldPoly::from_atom(const PrimePi& pi, Atom a) {
    OldPoly r(pi, a.weight(pi.field()), a.type_l(pi.field()));
    const int qm1 = static_cast<int>(pi.field()->q()) - 1;
    r.type_ = ((r.type_ % qm1) + qm1) % qm1;
    r.mono_.push_back({RatK::one(pi.field()), {{std::move(a), 1}}});
    return r;
}

OldPoly OldPoly::level1_form(const PrimePi& pi, BaseForm base, int d, bool iota) {
    if (base == BaseForm::gd && d == 0) d = pi.degree();
    return from_atom(pi, Atom::level1(base, d, iota));
}

OldPoly OldPoly::estar_form(const PrimePi& pi) { return from_atom(pi, Atom::estar()); }

OldPoly OldPoly::del_form(const OldPoly& base, int alpha) {
    const auto eig = w_eigenvalue(base);
    if (!eig || *eig != alpha)
        throw Error("del_form: base is not a W-eigenvector with the claimed eigenvalue");
    return from_atom(base.pi(), Atom::del(std::make_shared<const OldPoly>(base), alpha));
}

OldPoly OldPoly::operator+(const OldPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (weight_ != o.weight_ || type_ != o.type_)
        throw Error("inhomogeneous oldform sum: weight/type mismatch");
    OldPoly r(pi_, weight_, type_);
    r.mono_ = mono_;
    r.mono_.insert(r.mono_.end(), o.mono_.begin(), o.mono_.end());
    r.canonicalize();
    return r;
}

OldPoly OldPoly::operator-(const OldPoly& o) const { return *this + (-o); }

OldPoly OldPoly::scaled(const RatK& s) const {
    OldPoly r(pi_, weight_, type_);
    if (s.is_zero()) return r;
    r.mono_ = mono_;
    for (auto& m : r.mono_) m.coeff *= s;
    return r;
}

OldPoly OldPoly::operator*(const OldPoly& o) const {
    const int qm1 = static_cast<int>(field()->q()) - 1;
    OldPoly r(pi_, weight_ + o.weight_, ((type_ + o.type_) % qm1 + qm1) % qm1);
    if (is_zero() || o.is_zero()) return r;
    for (const auto& ma : mono_)
        for (const auto& mb : o.mono_) {
            OldMonomial m;
            m.coeff = ma.coeff * mb.coeff;
            // merge the two sorted factor lists
            std::size_t i = 0, j = 0;
            while (i < ma.factors.size() || j < mb.factors.size()) {
                if (j >= mb.factors.size()) {
                    m.factors.push_back(ma.factors[i++]);
                } else if (i >= ma.factors.size()) {
                    m.factors.push_back(mb.factors[j++]);
                } else {
                    const int c = Atom::compare(ma.factors[i].first, mb.factors[j].first);
                    if (c < 0) {
                        m.factors.push_back(ma.factors[i++]);
                    } else if (c > 0) {
                        m.factors.push_back(mb.factors[j++]);
                    } else {
                        m.factors.push_back(
                            {ma.factors[i].first, ma.factors[i].second + mb.factors[j].second});
                        ++i;
                        ++j;
                    }
                }
            }
            r.mono_.push_back(std::move(m));
        }
    r.canonicalize();
    return r;
}

OldPoly OldPoly::pow(long e) const {
    if (e < 0) throw Error("negative oldform power");
    OldPoly acc = scalar(pi_, RatK::one(field()));
    OldPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

bool OldPoly::operator==(const OldPoly& o) const {
    if (mono_.size() != o.mono_.size()) return false;
    for (std::size_t i = 0; i < mono_.size(); ++i) {
        if (mono_[i].coeff != o.mono_[i].coeff) return false;
        if (!factors_equal(mono_[i].factors, o.mono_[i].factors)) return false;
    }
    return true;
}

OldPoly OldPoly::twisted() const {
    OldPoly r(pi_, weight_, type_);
    r.mono_ = mono_;
    for (auto& m : r.mono_)
        for (auto& [atom, exp] : m.factors) {
            if (atom.kind() != Atom::Kind::level1 || atom.iota())
                throw Error("twist is defined on plain level-1 monomials only");
            atom = Atom::level1(atom.base(), atom.d(), true);
        }
    r.canonicalize();
    return r;
}

std::string OldPoly::describe() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& m : mono_) {
        if (!s.empty()) s += " + ";
        s += "(" + m.coeff.to_string() + ")";
        for (const auto& [atom, exp] : m.factors) {
            s += "*" + atom.name();
            if (exp > 1) s += "^" + std::to_string(exp);
        }
    }
    return s;
}

namespace {

// W image of a single atom, as an OldPoly.
OldPoly w_atom(const PrimePi& pi, const Atom& a) {
    const FqPtr& F = pi.field();
    switch (a.kind()) {
        case Atom::Kind::level1: {
            const long k = a.weight(F);
            if (k % 2 != 0)
                throw OddWeightUnsupported("W on an odd-weight atom: " + a.name());
            const RatK pik2 = RatK(pi.poly()).pow(k / 2);
            if (!a.iota())
                return OldPoly::from_atom(pi, Atom::level1(a.base(), a.d(), true)).scaled(pik2);
            return OldPoly::from_atom(pi, Atom::level1(a.base(), a.d(), false))
                .scaled(pik2.inverse());
        }
        case Atom::Kind::estar:
            return -OldPoly::estar_form(pi);
        case Atom::Kind::del: {
            // (partial f)|W = alpha (partial f - k E* f)
            const OldPoly& base = *a.del_base();
            const RatK k = RatK::from_int(F, base.weight());
            const RatK alpha = RatK::from_int(F, a.del_alpha());
            OldPoly out = OldPoly::from_atom(pi, a);
            out = out - (OldPoly::estar_form(pi) * base).scaled(k);
            return out.scaled(alpha);
        }
    }
    throw Error("unknown atom");
}

}  // namespace

OldPoly w_action(const OldPoly& f) {
    const PrimePi& pi = f.pi();
    OldPoly acc = OldPoly::zero(pi, f.weight(), f.type_l());
    for (const auto& m : f.monomials()) {
        OldPoly term = OldPoly::scalar(pi, m.coeff);
        for (const auto& [atom, exp] : m.factors) term = term * w_atom(pi, atom).pow(exp);
        acc = acc + term;
    }
    return acc;
}

namespace {

USeries atom_series(const PrimePi& pi, const Atom& a, int N) {
    const FqPtr& F = pi.field();
    switch (a.kind()) {
        case Atom::Kind::level1:
            if (a.iota()) return iota_generator_series(pi, a.base(), a.d(), N);
            return generator_series(F, a.base(), a.d(), N).series();
        case Atom::Kind::estar:
            return e_star_series(pi, N).series();
        case Atom::Kind::del: {
            const USeries base = flatten(*a.del_base(), N);
            const RatK k = RatK::from_int(F, a.del_base()->weight());
            USeries s = theta(base);
            if (!k.is_zero()) s = s + series_mul(e_series(F, N), base).scaled(k);
            return s.prec() > N ? s.truncated(N) : s;
        }
    }
    throw Error("unknown atom");
}

}  // namespace

USeries flatten(const OldPoly& f, int N) {
    const PrimePi& pi = f.pi();
    USeries acc(f.field(), N);
    std::map<std::pair<Atom, int>, USeries> memo;
    for (const auto& m : f.monomials()) {
        USeries term = USeries::constant(f.field(), m.coeff, N);
        for (const auto& [atom, exp] : m.factors) {
            auto it = memo.find({atom, exp});
            if (it == memo.end()) {
                USeries p = atom_series(pi, atom, N).pow(exp);
                if (p.prec() > N) p = p.truncated(N);
                it = memo.emplace(std::pair<Atom, int>{atom, exp}, std::move(p)).first;
            }
            term = series_mul(term, it->second);
            if (term.prec() > N) term = term.truncated(N);
        }
        acc.add_in_place(term);
    }
    return acc;
}

USeries trace_level_one(const OldPoly& f, int N) {
    const long k = f.weight();
    if (k % 2 != 0) throw OddWeightUnsupported("trace needs even weight");
    const PrimePi& pi = f.pi();
    const USeries flat = flatten(f, N);
    const USeries flat_w = flatten(w_action(f), N);
    const USeries u = u_operator(flat_w, pi).scaled(RatK(pi.poly()).pow(1 - k / 2));
    return flat.truncated(u.prec()) + u;
}

OldPoly gk_form(int k, const PrimePi& pi) {
    if (k < 2) throw Error("g_(k) needs k >= 2");
    const long qd = pi.qd();
    const OldPoly gd = OldPoly::level1_form(pi, BaseForm::gd, pi.degree(), false);
    const OldPoly gdi = OldPoly::level1_form(pi, BaseForm::gd, pi.degree(), true);
    return (gd - gdi.scaled(RatK(pi.poly()).pow(qd - 1))).pow(k - 1);
}

OldPoly oldform_pair(const OldPoly& f, int sign) {
    if (sign != 1 && sign != -1) throw Error("oldform_pair sign must be +-1");
    if (f.weight() % 2 != 0) throw OddWeightUnsupported("oldform_pair needs even weight");
    const RatK scale = RatK(f.pi().poly()).pow(f.weight() / 2) * RatK::from_int(f.field(), sign);
    return f + f.twisted().scaled(scale);
}

std::optional<int> w_eigenvalue(const OldPoly& f) {
    if (f.is_zero()) return std::nullopt;
    const OldPoly w = w_action(f);
    if (w == f) return 1;
    if (w == -f) return -1;
    return std::nullopt;
}

int proof_trace_min_prec(long k, const PrimePi& pi) {
    const FqPtr& F = pi.field();
    const long qd = pi.qd();
    long need = 0;
    const long weights[3] = {(k - 1) * (qd - 1) + k, (k - 1) * qd + 3, k * qd + 2};
    for (const long w : weights) {
        for (int l = 0; l < static_cast<int>(F->q()) - 1; ++l) {
            const auto mons = enumerate_monomials(F, w, l);
            if (mons.empty()) continue;
            const long m = mons.back().second + std::max<long>(8, static_cast<long>(mons.size())) + 1;
            need = std::max(need, m);
        }
    }
    return static_cast<int>(qd * (need + 1));
}

ProofTraceReport proof_trace(const OldPoly& f, const OldPoly& g, int N) {
    const PrimePi& pi = f.pi();
    const FqPtr& F = f.field();
    if (!(g.pi() == pi)) throw Error("proof_trace: pi mismatch");
    ProofTraceReport rep;
    rep.k = f.weight();
    rep.l = f.type_l();
    const long qd = pi.qd();
    const int qm1 = static_cast<int>(F->q()) - 1;
    if (g.weight() != rep.k + 2 || g.type_l() != (rep.l + 1) % qm1)
        throw Error("proof_trace: g must have weight k+2, type l+1");
    rep.k_coprime_p = rep.k % F->p() != 0;

    const USeries flat_f = flatten(f, N);
    const USeries flat_g = flatten(g, N);

    rep.premise = congruent(theta(flat_f), flat_g, pi, 1, "theta(f)", "g");
    if (!rep.premise.holds)
        throw PremiseViolated("theta(f) is not congruent to g mod pi (witness u^" +
                              std::to_string(rep.premise.witness_exponent.value_or(-1)) + ")");

    const auto alpha = w_eigenvalue(f);
    const auto beta = w_eigenvalue(g);
    if (!alpha || !beta) throw Error("proof_trace: f and g must be W-eigenvectors");
    rep.alpha = *alpha;
    rep.beta = *beta;

    // g - partial f + k E* f = pi h with h pi-integral.
    const RatK kval = RatK::from_int(F, rep.k);
    USeries del_f = theta(flat_f);
    if (!kval.is_zero()) del_f = del_f + series_mul(e_series(F, N), flat_f).scaled(kval);
    if (del_f.prec() > N) del_f = del_f.truncated(N);
    const USeries estar = e_star_series(pi, N).series();
    USeries kestar_f = series_mul(estar, flat_f).scaled(kval);
    if (kestar_f.prec() > N) kestar_f = kestar_f.truncated(N);
    const USeries h = (flat_g - del_f + kestar_f).scaled(RatK(PolyA::one(F), pi.poly()));
    rep.h_integral = series_vpi(h, pi) >= 0;

    // F = Tr(k f g_(k)) realizes the class of k f at level one.
    const OldPoly gk = gk_form(static_cast<int>(rep.k), pi);
    const USeries F_ser = trace_level_one((f * gk).scaled(kval), N);
    rep.f_congruent_kf = congruent(F_ser, flat_f.scaled(kval), pi, 1, "F", "k*f");

    // H = Tr(alpha pi h|W g_(k)) with pi h|W = beta g - alpha partial f,
    // computed symbolically through the DEL rewrite.
    const OldPoly delf_sym = OldPoly::del_form(f, rep.alpha);
    const RatK ab = RatK::from_int(F, rep.alpha * rep.beta);
    const USeries H_ser = trace_level_one((g.scaled(ab) - delf_sym) * gk, N);
    rep.h_congruent_chain =
        congruent(H_ser, flat_g.scaled(ab) - del_f, pi, 1, "H", "alpha*beta*g - partial(f)");

    if (rep.alpha == rep.beta) {
        rep.h_vs_estar = congruent(H_ser, -kestar_f, pi, 1, "H", "-k*E**f");
    }

    // Filtrations on both sides of the final congruence.
    rep.w_f_hypothesis = (rep.k - 1) * (qd - 1) + rep.k;
    const SeriesForm F_form(F_ser, rep.w_f_hypothesis, rep.l, Level::one);
    rep.w_F = filtration(F_form, pi);
    rep.hypothesis_holds = rep.w_F == rep.w_f_hypothesis;

    rep.h_weight_bound = (rep.k - 1) * qd + 3;
    const SeriesForm H_form(H_ser, rep.h_weight_bound, rep.l + 1, Level::one);
    rep.w_H = filtration(H_form, pi);
    rep.w_h_within_bound = rep.w_H == kValNegInfinity || rep.w_H <= rep.h_weight_bound;

    if (rep.alpha == rep.beta) {
        const int M = H_ser.prec();
        const SeriesForm gd = gd_series(pi, std::max(M, 16));
        const USeries bdF = series_mul(partial(gd).series().truncated(M), F_ser);
        rep.h_vs_bd_f = congruent(H_ser, bdF, pi, 1, "H", "partial(g_d)*F");
        const SeriesForm bdF_form(bdF.prec() > M ? bdF.truncated(M) : bdF, rep.k * qd + 2,
                                  rep.l + 1, Level::one);
        rep.w_bd_f = filtration(bdF_form, pi);
    }

    if (!rep.k_coprime_p) {
        rep.conclusion = "degenerate: k = 0 (mod p), the k f class vanishes";
    } else if (rep.beta != rep.alpha) {
        rep.conclusion = "consistent: beta = -alpha holds outright";
    } else if (rep.hypothesis_holds) {
        rep.conclusion =
            "contradiction: w(H) <= (k-1)q^d+3 < kq^d+2 = w(partial(g_d) F) while H = "
            "partial(g_d) F (mod pi), so beta = alpha is impossible";
    } else {
        rep.conclusion = "filtration drop: w(F) < (k-1)(q^d-1)+k, the argument dissolves";
    }

    rep.all_checks_pass = rep.premise.holds && rep.h_integral && rep.f_congruent_kf.holds &&
                          rep.h_congruent_chain.holds &&
                          (!rep.h_vs_estar || rep.h_vs_estar->holds) &&
                          (!rep.h_vs_bd_f || rep.h_vs_bd_f->holds) && rep.w_h_within_bound;
    return rep;
}

}  // namespace dmf
