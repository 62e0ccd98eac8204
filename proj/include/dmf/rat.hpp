#pragma once

#include <string>
#include <string_view>

#include "dmf/poly.hpp"

namespace dmf {

class PrimePi;

/// Element of K = F_q(T): num/den with den monic, nonzero, gcd(num, den) = 1.
/// Zero is 0/1. Construction canonicalizes; arithmetic keeps the invariant.
class RatK {
public:
    RatK() = default;
    explicit RatK(PolyA num) : num_(std::move(num)), den_(PolyA::one(num_.field())) {}
    RatK(PolyA num, PolyA den);

    static RatK zero(const FqPtr& field) { return RatK(PolyA::zero(field)); }
    static RatK one(const FqPtr& field) { return RatK(PolyA::one(field)); }
    static RatK from_int(const FqPtr& field, long n) {
        return RatK(PolyA::constant(field, field->from_int(n)));
    }

    const PolyA& num() const { return num_; }
    const PolyA& den() const { return den_; }
    const FqPtr& field() const { return num_.field(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integral() const { return den_.is_one(); }

    RatK operator+(const RatK& o) const;
    RatK operator-(const RatK& o) const;
    RatK operator*(const RatK& o) const;
    RatK operator/(const RatK& o) const;
    RatK operator-() const;
    RatK inverse() const;
    RatK pow(long e) const;
    RatK& operator+=(const RatK& o) { return *this = *this + o; }
    RatK& operator-=(const RatK& o) { return *this = *this - o; }
    RatK& operator*=(const RatK& o) { return *this = *this * o; }
    bool operator==(const RatK& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatK& o) const { return !(*this == o); }

    /// pi-adic valuation: ord_pi(num) - ord_pi(den); kValInfinity for zero.
    long vpi(const PrimePi& pi) const;

    std::string to_string() const;
    static RatK parse(const FqPtr& field, std::string_view text);

private:
    struct Raw {};
    RatK(Raw, PolyA num, PolyA den) : num_(std::move(num)), den_(std::move(den)) {}

    PolyA num_;
    PolyA den_;
};

/// Free-function spelling of RatK::vpi.
long rat_vpi(const RatK& x, const PrimePi& pi);

}  // namespace dmf
