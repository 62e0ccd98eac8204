#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmf/fq.hpp"

namespace dmf {

/// Valuations take values in Z together with +/- infinity.
inline constexpr long kValInfinity = std::numeric_limits<long>::max();
inline constexpr long kValNegInfinity = std::numeric_limits<long>::min();

/// Element of A = F_q[T]: dense coefficient vector, index = degree in T,
/// canonical (no trailing zeros). The zero polynomial has degree() == -1,
/// standing in for the degree -infinity convention.
class PolyA {
public:
    PolyA() = default;
    explicit PolyA(FqPtr field) : F_(std::move(field)) {}
    PolyA(FqPtr field, std::vector<std::uint32_t> coeffs);

    static PolyA zero(FqPtr field) { return PolyA(std::move(field)); }
    static PolyA one(FqPtr field);
    static PolyA constant(FqPtr field, std::uint32_t value);
    static PolyA variable(FqPtr field);  // the polynomial T
    /// c * T^e
    static PolyA monomial(FqPtr field, std::uint32_t c, int e);

    const FqPtr& field() const { return F_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    std::uint32_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : 0;
    }
    std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
    std::uint32_t constant_coeff() const { return coeff(0); }

    PolyA operator+(const PolyA& o) const;
    PolyA operator-(const PolyA& o) const;
    PolyA operator-() const;
    PolyA operator*(const PolyA& o) const;
    PolyA& operator+=(const PolyA& o) { return *this = *this + o; }
    PolyA& operator-=(const PolyA& o) { return *this = *this - o; }
    PolyA& operator*=(const PolyA& o) { return *this = *this * o; }
    bool operator==(const PolyA& o) const { return c_ == o.c_; }
    bool operator!=(const PolyA& o) const { return !(*this == o); }

    PolyA scaled(std::uint32_t s) const;
    PolyA pow(long e) const;
    PolyA shifted(int e) const;  // * T^e

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<PolyA, PolyA> divmod(const PolyA& divisor) const;
    PolyA operator/(const PolyA& o) const { return divmod(o).first; }
    PolyA operator%(const PolyA& o) const { return divmod(o).second; }
    bool divisible_by(const PolyA& o) const { return (*this % o).is_zero(); }

    PolyA make_monic() const;
    std::uint32_t eval(std::uint32_t x) const;

    /// Largest e with d^e | *this; kValInfinity for the zero polynomial.
    long ord_at(const PolyA& d) const;

    std::string to_string() const;
    static PolyA parse(const FqPtr& field, std::string_view text);

    /// Total order: degree first, then coefficient tuples compared from the
    /// leading coefficient down (constant coefficient last).
    static bool canonical_less(const PolyA& a, const PolyA& b);

private:
    void trim();

    FqPtr F_;
    std::vector<std::uint32_t> c_;
};

PolyA gcd(const PolyA& a, const PolyA& b);  // monic gcd; gcd(0,0) = 0

/// Free-function spelling of PolyA::ord_at.
long poly_ord_at(const PolyA& f, const PolyA& pi);

/// All monic polynomials of the given degree in canonical order.
std::vector<PolyA> monic_polys(const FqPtr& field, int degree);

}  // namespace dmf
