#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dmf/error.hpp"

namespace dmf {

/// The finite field F_q with q = p^r, p an odd prime.
///
/// Elements are identified with integers in [0, q): the packed base-p digit
/// string of the residue polynomial modulo the defining polynomial. For
/// r = 1 the index is simply the residue mod p. The field object is
/// immutable and shared; all element operations are pure.
class Fq {
public:
    /// Creates F_{p^r}. For r > 1 an explicit defining modulus (monic,
    /// irreducible, degree r, coefficients mod p, constant first) may be
    /// given; otherwise the lexicographically smallest monic irreducible of
    /// degree r is used, ordering coefficient tuples with the constant
    /// coefficient last.
    static std::shared_ptr<const Fq> make(int p, int r = 1,
                                          std::vector<std::uint32_t> modulus = {});

    int p() const { return p_; }
    int r() const { return r_; }
    std::uint32_t q() const { return q_; }
    bool prime_field() const { return r_ == 1; }

    /// Defining modulus as coefficients over F_p, constant first, length
    /// r + 1, monic. Empty when r == 1.
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, long e) const;

    /// Embeds an integer through the prime subfield (n mod p).
    std::uint32_t from_int(long n) const;

    bool same_field(const Fq& other) const;

    std::string describe() const;  // e.g. "F_3" or "F_9 (p=3, r=2)"

private:
    Fq() = default;

    int p_ = 0;
    int r_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> mod_;  // empty iff r == 1
};

using FqPtr = std::shared_ptr<const Fq>;

/// A single field element bound to its field; convenience wrapper for
/// non-hot-path code and tests. Hot loops work on raw indices instead.
class FqElem {
public:
    FqElem() = default;
    FqElem(FqPtr field, std::uint32_t v) : F_(std::move(field)), v_(v) {}

    std::uint32_t value() const { return v_; }
    const FqPtr& field() const { return F_; }

    FqElem operator+(const FqElem& o) const { return {F_, F_->add(v_, o.v_)}; }
    FqElem operator-(const FqElem& o) const { return {F_, F_->sub(v_, o.v_)}; }
    FqElem operator*(const FqElem& o) const { return {F_, F_->mul(v_, o.v_)}; }
    FqElem operator-() const { return {F_, F_->neg(v_)}; }
    FqElem inverse() const { return {F_, F_->inv(v_)}; }
    bool operator==(const FqElem& o) const { return v_ == o.v_; }
    bool is_zero() const { return v_ == 0; }

private:
    FqPtr F_;
    std::uint32_t v_ = 0;
};

}  // namespace dmf
