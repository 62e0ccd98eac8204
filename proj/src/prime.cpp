#include "dmf/prime.hpp"

#include "dmf/error.hpp"

namespace dmf {

PrimePi::PrimePi(PolyA pi) : pi_(std::move(pi)), d_(pi_.degree()) {
    if (d_ < 1) throw ConfigError("pi must be non-constant");
    if (!pi_.is_monic()) throw ConfigError("pi must be monic");
    for (int e = 1; 2 * e <= d_; ++e)
        for (const PolyA& g : monic_polys(pi_.field(), e))
            if (pi_.divisible_by(g))
                throw ConfigError("pi is reducible: " + pi_.to_string() + " = (" +
                                  g.to_string() + ")*(" + (pi_ / g).to_string() + ")");
}

long PrimePi::qd() const {
    long v = 1;
    for (int i = 0; i < d_; ++i) v *= pi_.field()->q();
    return v;
}

PolyA ResField::reduce(const RatK& x) const {
    if (x.vpi(pi_) < 0)
        throw NotPiIntegral("coefficient " + x.to_string() + " is not integral at pi = " +
                            pi_.poly().to_string());
    // gcd(num, den) = 1 and v_pi >= 0, so pi does not divide den.
    const PolyA n = reduce(x.num());
    const PolyA d = reduce(x.den());
    return mul(n, inv(d));
}

PolyA ResField::inv(const PolyA& a) const {
    const PolyA r = reduce(a);
    if (r.is_zero()) throw Error("division by zero in A/pi");
    // Extended Euclid in F_q[T].
    PolyA old_r = pi_.poly(), cur_r = r;
    PolyA old_t = PolyA::zero(base_field()), cur_t = PolyA::one(base_field());
    while (!cur_r.is_zero()) {
        auto [q, rem] = old_r.divmod(cur_r);
        PolyA new_t = old_t - q * cur_t;
        old_r = cur_r;
        cur_r = rem;
        old_t = cur_t;
        cur_t = new_t;
    }
    // old_r is a unit multiple of gcd = constant (pi irreducible).
    if (!old_r.is_constant() || old_r.is_zero()) throw Error("inverse failed in A/pi");
    return reduce(old_t.scaled(base_field()->inv(old_r.constant_coeff())));
}

}  // namespace dmf
