#pragma once

#include <string>
#include <vector>

#include "dmf/prime.hpp"
#include "dmf/rat.hpp"

namespace dmf {

class ResSeries;

/// Truncated power series in u over K: coefficients for u^0 .. u^{prec-1},
/// meaning the series is known modulo O(u^prec). Precision is explicit and
/// every operation states its propagation rule.
class USeries {
public:
    USeries() = default;
    /// Zero series at the given precision.
    USeries(FqPtr field, int prec);
    USeries(FqPtr field, std::vector<RatK> coeffs);

    static USeries constant(const FqPtr& field, const RatK& c, int prec);
    /// The series u (precision prec).
    static USeries unit_u(const FqPtr& field, int prec);

    const FqPtr& field() const { return F_; }
    int prec() const { return static_cast<int>(c_.size()); }
    const RatK& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<RatK>& coeffs() const { return c_; }

    /// Index of the first nonzero known coefficient; prec() when all known
    /// coefficients vanish.
    int ord() const;
    /// The ord used by the multiplication precision rule: 0 when all known
    /// coefficients vanish.
    int ord_for_prec() const;

    bool known_zero() const { return ord() == prec(); }

    // Builder-style mutators; USeries values are treated as immutable once
    // an operation has returned them.
    void set_coeff(int i, RatK v) { c_[static_cast<std::size_t>(i)] = std::move(v); }
    /// this += o over the common prefix; precision drops to the minimum.
    void add_in_place(const USeries& o);

    USeries operator+(const USeries& o) const;  // prec = min
    USeries operator-(const USeries& o) const;  // prec = min
    USeries operator-() const;
    USeries scaled(const RatK& s) const;
    USeries truncated(int prec) const;  // prec must be <= current
    /// Multiply by u^k (precision grows by k).
    USeries shifted_up(int k) const;
    /// Divide by u^k; the first k known coefficients must vanish.
    USeries shifted_down(int k) const;
    USeries pow(long e) const;

    bool operator==(const USeries& o) const { return c_ == o.c_; }
    bool agrees_with(const USeries& o, int upto) const;

    std::vector<std::string> coeff_strings() const;

private:
    FqPtr F_;
    std::vector<RatK> c_;
};

/// Product; prec = min(prec_f + ord_g, prec_g + ord_f) with ord as in
/// USeries::ord_for_prec.
USeries series_mul(const USeries& f, const USeries& g);

/// Multiplicative inverse at the same precision; the constant coefficient
/// must be a unit (NonUnitSeries otherwise).
USeries series_inv(const USeries& f);

/// f(s) for s with s(0) = 0 and ord(s) = m >= 1; the result has precision
/// prec_f * m and s must carry at least that precision (PrecisionError
/// otherwise). CompositionNotSupported when s(0) != 0.
USeries series_compose(const USeries& f, const USeries& s);

/// The unique g with g^n = f and g(0) = 1; requires f(0) = 1 and
/// gcd(n, p) = 1 (RootObstruction otherwise).
USeries series_root(const USeries& f, long n);

/// min over known coefficients of v_pi; kValInfinity when all vanish.
/// Precision-relative: coefficients beyond prec are not seen.
long series_vpi(const USeries& f, const PrimePi& pi);

/// Coefficientwise image in A/pi; NotPiIntegral when some coefficient has
/// v_pi < 0.
ResSeries series_reduce_mod_pi(const USeries& f, const PrimePi& pi);

/// Series with coefficients in the residue field A/pi.
class ResSeries {
public:
    ResSeries(PrimePi pi, std::vector<PolyA> coeffs)
        : pi_(std::move(pi)), c_(std::move(coeffs)) {}

    const PrimePi& pi() const { return pi_; }
    int prec() const { return static_cast<int>(c_.size()); }
    const PolyA& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool known_zero() const;
    bool operator==(const ResSeries& o) const { return pi_ == o.pi_ && c_ == o.c_; }

    std::vector<std::string> coeff_strings() const;

private:
    PrimePi pi_;
    std::vector<PolyA> c_;
};

}  // namespace dmf
