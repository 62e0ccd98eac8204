#pragma once

#include <string_view>
#include <vector>

#include "dmf/rat.hpp"

namespace dmf {

/// A monic irreducible pi in A together with its degree d. Irreducibility is
/// checked at construction by trial division up to degree d/2.
class PrimePi {
public:
    explicit PrimePi(PolyA pi);
    static PrimePi parse(const FqPtr& field, std::string_view text) {
        return PrimePi(PolyA::parse(field, text));
    }

    const PolyA& poly() const { return pi_; }
    int degree() const { return d_; }
    const FqPtr& field() const { return pi_.field(); }
    /// q^d, the size of the residue field A/pi.
    long qd() const;

    bool operator==(const PrimePi& o) const { return pi_ == o.pi_; }

private:
    PolyA pi_;
    int d_ = 0;
};

/// The residue field A/pi (isomorphic to F_{q^d}). Elements are canonical
/// representatives: PolyA of degree < d.
class ResField {
public:
    explicit ResField(PrimePi pi) : pi_(std::move(pi)) {}

    const PrimePi& pi() const { return pi_; }
    const FqPtr& base_field() const { return pi_.field(); }

    PolyA zero() const { return PolyA::zero(base_field()); }
    PolyA one() const { return PolyA::one(base_field()); }

    PolyA reduce(const PolyA& a) const { return a % pi_.poly(); }
    /// Image of x in A/pi; throws NotPiIntegral when v_pi(x) < 0.
    PolyA reduce(const RatK& x) const;

    PolyA add(const PolyA& a, const PolyA& b) const { return reduce(a + b); }
    PolyA sub(const PolyA& a, const PolyA& b) const { return reduce(a - b); }
    PolyA mul(const PolyA& a, const PolyA& b) const { return reduce(a * b); }
    PolyA neg(const PolyA& a) const { return reduce(-a); }
    PolyA inv(const PolyA& a) const;

private:
    PrimePi pi_;
};

}  // namespace dmf
