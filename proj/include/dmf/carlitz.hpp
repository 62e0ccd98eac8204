#pragma once

#include <vector>

#include "dmf/useries.hpp"

namespace dmf {

/// [i] = T^{q^i} - T; D_i = [i] D_{i-1}^q (the product of all monic
/// polynomials of degree i); L_i = [1][2]...[i] (their lcm).
struct Brackets {
    PolyA bracket;
    PolyA D;
    PolyA L;
};
Brackets bracket_D_L(const FqPtr& field, int i);

/// F_q-linear polynomial sum_i c_i X^{q^i} with coefficients in A.
class AdditivePoly {
public:
    AdditivePoly(FqPtr field, std::vector<PolyA> coeffs);

    const FqPtr& field() const { return F_; }
    /// Highest tau-power n (coefficient of X^{q^n}); -1 for zero.
    int tau_degree() const { return static_cast<int>(c_.size()) - 1; }
    const PolyA& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<PolyA>& coeffs() const { return c_; }

    bool operator==(const AdditivePoly& o) const { return c_ == o.c_; }

private:
    FqPtr F_;
    std::vector<PolyA> c_;
};

/// Coefficients of rho_a for the Carlitz module rho_T = TX + X^q, extended
/// F_q-linearly and by composition rho_{T^{i+1}} = rho_T o rho_{T^i}.
AdditivePoly carlitz_coeffs(const PolyA& a);

/// t_a = u(az): the series in u with 1/t_a = rho_a(1/u). Requires a monic;
/// ord(t_a) = q^{deg a}; coefficients lie in A; precision N.
USeries t_series(const PolyA& a, int N);

/// Coefficients c_j (j < M) of 1/e_C(z) - 1/z, where e_C = sum z^{q^i}/D_i
/// is the exponential whose inverse generates the zeta ratios below.
std::vector<RatK> inv_exp_coeffs(const FqPtr& field, int M);

/// zeta_A(k) / pitilde^k in K, for (q-1) | k, k >= 1: equals c_{k-1} of
/// inv_exp_coeffs (the sign (-1)^k is +1 since k is even for odd q).
RatK zeta_ratio(const FqPtr& field, int k);

/// Goss polynomial G_k(t) for the lattice with exponential e_C:
/// G_0 = 0, G_1 = t, G_k = t (G_{k-1} + sum_{i>=1} D_i^{-1} G_{k-q^i}).
class GossPoly {
public:
    GossPoly(int k, std::vector<RatK> coeffs) : k_(k), c_(std::move(coeffs)) {}

    int k() const { return k_; }
    /// Coefficient of t^j, 0 <= j <= k.
    const RatK& coeff(int j) const { return c_[static_cast<std::size_t>(j)]; }
    int max_degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Ascending exponents with nonzero coefficient.
    std::vector<int> support() const;

private:
    int k_;
    std::vector<RatK> c_;
};

GossPoly goss_poly(const FqPtr& field, int k);

/// s_n = sum_{deg lambda < d} u((z+lambda)/pi)^n as series in u, extracted
/// from the expansion sum_n s_n t^{n-1} = pi u / (1 - u rho_pi(t)).
class PowerSums {
public:
    PowerSums(PrimePi pi, std::vector<USeries> sums, int uprec)
        : pi_(std::move(pi)), s_(std::move(sums)), uprec_(uprec) {}

    const PrimePi& pi() const { return pi_; }
    /// Largest index + 1: s(n) is available for 1 <= n < max_n.
    int max_n() const { return static_cast<int>(s_.size()) + 1; }
    int uprec() const { return uprec_; }
    const USeries& s(int n) const { return s_[static_cast<std::size_t>(n - 1)]; }

private:
    PrimePi pi_;
    std::vector<USeries> s_;
    int uprec_;
};

/// Power sums s_n for 1 <= n < max_n, each known modulo O(u^uprec).
PowerSums inverse_root_power_sums(const PrimePi& pi, int max_n, int uprec);

/// Monic polynomials of degree 0..max_degree in canonical enumeration order
/// (degree first, then coefficient tuples with the constant last).
std::vector<PolyA> monic_polys_up_to(const FqPtr& field, int max_degree);

}  // namespace dmf
