#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmf/structure.hpp"

namespace dmf {

class OldPoly;

/// Atom of the symbolic oldform algebra at level pi:
///  - a named level-1 generator, plain f(z) or twisted iota(f) = f(pi z);
///  - the level-pi form E* with its built-in Atkin-Lehner rule E*|W = -E*;
///  - DEL(f, alpha): stands for partial(f) where f is a W-eigenvector with
///    eigenvalue alpha, rewritten under W by
///    (partial f)|W = alpha (partial f - k E* f).
class Atom {
public:
    enum class Kind { level1, estar, del };

    static Atom level1(BaseForm base, int d, bool iota);
    static Atom estar();
    static Atom del(std::shared_ptr<const OldPoly> base, int alpha);

    Kind kind() const { return kind_; }
    BaseForm base() const { return base_; }
    int d() const { return d_; }
    bool iota() const { return iota_; }
    const std::shared_ptr<const OldPoly>& del_base() const { return del_base_; }
    int del_alpha() const { return del_alpha_; }

    long weight(const FqPtr& field) const;
    int type_l(const FqPtr& field) const;
    std::string name() const;

    static int compare(const Atom& a, const Atom& b);
    bool operator==(const Atom& o) const { return compare(*this, o) == 0; }
    bool operator<(const Atom& o) const { return compare(*this, o) < 0; }

private:
    Atom() = default;

    Kind kind_ = Kind::level1;
    BaseForm base_ = BaseForm::gd;
    int d_ = 0;
    bool iota_ = false;
    std::shared_ptr<const OldPoly> del_base_;
    int del_alpha_ = 0;
};

struct OldMonomial {
    RatK coeff;
    std::vector<std::pair<Atom, int>> factors;  // sorted, exponents >= 1
};

/// A formal K-linear combination of monomials in oldform atoms, homogeneous
/// of one (weight, type), with all atoms sharing one pi. Canonical form:
/// monomials sorted and merged, zero coefficients dropped.
class OldPoly {
public:
    static OldPoly zero(const PrimePi& pi, long weight = 0, int type = 0);
    static OldPoly scalar(const PrimePi& pi, RatK c);
    static OldPoly from_atom(const PrimePi& pi, Atom a);
    static OldPoly level1_form(const PrimePi& pi, BaseForm base, int d = 0, bool iota = false);
    static OldPoly estar_form(const PrimePi& pi);
    /// DEL(base, alpha); verifies that base has W-eigenvalue alpha.
    static OldPoly del_form(const OldPoly& base, int alpha);

    const FqPtr& field() const { return pi_.field(); }
    const PrimePi& pi() const { return pi_; }
    const std::vector<OldMonomial>& monomials() const { return mono_; }
    bool is_zero() const { return mono_.empty(); }
    long weight() const { return weight_; }
    int type_l() const { return type_; }

    OldPoly operator+(const OldPoly& o) const;
    OldPoly operator-(const OldPoly& o) const;
    OldPoly operator*(const OldPoly& o) const;
    OldPoly operator-() const { return scaled(-RatK::one(field())); }
    OldPoly scaled(const RatK& s) const;
    OldPoly pow(long e) const;
    bool operator==(const OldPoly& o) const;

    /// Replaces every plain level-1 atom by its iota twist (z -> pi z).
    OldPoly twisted() const;

    std::string describe() const;

private:
    OldPoly(PrimePi pi, long weight, int type) : pi_(std::move(pi)), weight_(weight), type_(type) {}
    void canonicalize();

    PrimePi pi_;
    long weight_ = 0;
    int type_ = 0;
    std::vector<OldMonomial> mono_;
};

/// The Atkin-Lehner involution W_pi on the oldform algebra, extended
/// multiplicatively over monomials and linearly over sums. Requires even
/// atom weights (OddWeightUnsupported otherwise).
OldPoly w_action(const OldPoly& f);

/// Substitutes u-series for every atom and expands, at precision N.
USeries flatten(const OldPoly& f, int N);

/// Tr: level pi -> level 1: flatten(f) + pi^{1-k/2} U_pi(flatten(f|W)).
/// The result precision is ceil(N / q^d).
USeries trace_level_one(const OldPoly& f, int N);

/// g_(k) = (g_d - pi^{q^d-1} iota(g_d))^{k-1} for even k >= 2.
OldPoly gk_form(int k, const PrimePi& pi);

/// f + sign pi^{k/2} iota(f) for a level-1 OldPoly f: the explicit
/// W-eigenvector with eigenvalue sign.
OldPoly oldform_pair(const OldPoly& f, int sign);

/// +1 or -1 when f is an exact symbolic W-eigenvector; nullopt otherwise.
std::optional<int> w_eigenvalue(const OldPoly& f);

struct ProofTraceReport {
    long k = 0;
    int l = 0;
    int alpha = 0;
    int beta = 0;
    bool k_coprime_p = true;
    CongruenceReport premise;                     // Theta f = g (mod pi)
    bool h_integral = false;                      // (g - del f + k E* f)/pi is integral
    CongruenceReport f_congruent_kf;              // F = k f (mod pi)
    CongruenceReport h_congruent_chain;           // H = alpha beta g - del f (mod pi)
    std::optional<CongruenceReport> h_vs_estar;   // H = -k E* f (mod pi), when beta = alpha
    std::optional<CongruenceReport> h_vs_bd_f;    // H = partial(g_d) F (mod pi), when beta = alpha
    long w_f_hypothesis = 0;                      // (k-1)(q^d-1) + k
    long w_F = 0;
    bool hypothesis_holds = false;
    long h_weight_bound = 0;  // (k-1) q^d + 3
    long w_H = 0;
    bool w_h_within_bound = false;
    std::optional<long> w_bd_f;                   // w(partial(g_d) F), when beta = alpha
    std::string conclusion;
    bool all_checks_pass = false;
};

/// Replays the weight-filtration argument for a congruence Theta f = g
/// (mod pi) between W-eigenvectors: either the filtration hypothesis holds
/// (forcing beta = -alpha) or the replay exhibits the filtration drop.
ProofTraceReport proof_trace(const OldPoly& f, const OldPoly& g, int N);

/// Smallest flatten precision N at which every filtration solve inside
/// proof_trace at weight k has enough trace-level coefficients.
int proof_trace_min_prec(long k, const PrimePi& pi);

}  // namespace dmf
