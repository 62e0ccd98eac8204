#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dmf/operators.hpp"

namespace dmf {

/// Isobaric polynomial in (g_1, h): finitely many monomials g_1^i h^j, all
/// with (q-1)i + (q+1)j = weight and j = type (mod q-1).
class IsobarPoly {
public:
    using Key = std::pair<long, long>;  // (i, j)

    IsobarPoly(FqPtr field, long weight, int type);

    const FqPtr& field() const { return F_; }
    long weight() const { return weight_; }
    int type() const { return type_; }
    const std::map<Key, RatK>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Inserts/overwrites the coefficient of g_1^i h^j; the exponents must
    /// satisfy the isobaric constraints for (weight, type).
    void set(long i, long j, RatK c);
    RatK coeff(long i, long j) const;

    IsobarPoly operator*(const IsobarPoly& o) const;
    bool operator==(const IsobarPoly& o) const {
        return weight_ == o.weight_ && type_ == o.type_ && terms_ == o.terms_;
    }

    /// Expands the polynomial back into a u-series at precision N.
    USeries expand(int N) const;

private:
    FqPtr F_;
    long weight_;
    int type_;
    std::map<Key, RatK> terms_;
};

/// The same shape with coefficients in A/pi.
class ResIsobarPoly {
public:
    using Key = IsobarPoly::Key;

    ResIsobarPoly(PrimePi pi, long weight, int type);

    const PrimePi& pi() const { return pi_; }
    long weight() const { return weight_; }
    int type() const { return type_; }
    const std::map<Key, PolyA>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void set(long i, long j, PolyA c);

    bool operator==(const ResIsobarPoly& o) const {
        return weight_ == o.weight_ && type_ == o.type_ && terms_ == o.terms_;
    }

private:
    PrimePi pi_;
    long weight_;
    int type_;
    std::map<Key, PolyA> terms_;
};

/// All (i, j) with (q-1)i + (q+1)j = k, i, j >= 0, j = l (mod q-1), sorted
/// by j ascending. Monomial (i, j) has u-order exactly j.
std::vector<IsobarPoly::Key> enumerate_monomials(const FqPtr& field, long k, int l);

/// The isobaric polynomial attached to a level-1 form, by the greedy
/// triangular solve in increasing j. Throws NotInSpan when a nonzero
/// residual survives, PrecisionError when prec(f) is too low to decide.
IsobarPoly isobaric_solve(const SeriesForm& f);

/// (A_d, B_d): the isobaric polynomials of g_d and partial(g_d), solved at
/// precision N.
std::pair<IsobarPoly, IsobarPoly> ad_bd(const PrimePi& pi, int N);

/// Coefficientwise reduction; NotPiIntegral on a denominator divisible by pi.
ResIsobarPoly reduce_isobaric(const IsobarPoly& phi, const PrimePi& pi);

struct DividePowerResult {
    long e = 0;
    bool infinite = false;  // phi = 0: every power divides
    ResIsobarPoly quotient;
};

/// Largest e with a^e | phi in the univariate encoding y^{(j - j_min)/(q-1)}
/// over (A/pi)[y], together with phi / a^e.
DividePowerResult isobaric_divide_power(const ResIsobarPoly& phi, const ResIsobarPoly& a);

/// gcd(a, b) = 1 as bivariate polynomials: no common X or Y monomial factor
/// and coprime univariate encodings.
bool isobaric_coprime(const ResIsobarPoly& a, const ResIsobarPoly& b);

/// Weight filtration w(f mod pi) of a pi-integral level-1 form:
/// kValNegInfinity when f = 0 (mod pi), else weight - e (q^d - 1) where e is
/// the A_d-division exponent. Satisfies w = weight (mod q^d - 1).
long filtration(const SeriesForm& f, const PrimePi& pi);

}  // namespace dmf
