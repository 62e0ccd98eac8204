#include <random>

#include "dmf/error.hpp"
#include "dmf/fq.hpp"
#include "dmf/poly.hpp"
#include "dmf/prime.hpp"
#include "dmf/rat.hpp"
#include "dmf/useries.hpp"
#include "doctest.h"

using namespace dmf;

namespace {

PolyA rand_poly(const FqPtr& F, std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> dc(0, F->q() - 1);
    const int d = dd(rng);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = dc(rng);
    return PolyA(F, std::move(c));
}

RatK rand_rat(const FqPtr& F, std::mt19937& rng, int max_deg) {
    PolyA den(F);
    do {
        den = rand_poly(F, rng, max_deg);
    } while (den.is_zero());
    return RatK(rand_poly(F, rng, max_deg), den);
}

}  // namespace

TEST_CASE("F_q field axioms on random samples") {
    for (auto [p, r] : {std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}}) {
        auto F = Fq::make(p, r);
        std::mt19937 rng(12345);
        std::uniform_int_distribution<std::uint32_t> d(0, F->q() - 1);
        for (int it = 0; it < 200; ++it) {
            const auto a = d(rng), b = d(rng), c = d(rng);
            CHECK(F->add(a, b) == F->add(b, a));
            CHECK(F->mul(a, b) == F->mul(b, a));
            CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a != 0) {
                CHECK(F->mul(a, F->inv(a)) == 1);
            }
            CHECK(F->mul(a, 1) == a);
            CHECK(F->add(a, 0) == a);
        }
        // Frobenius is additive.
        for (int it = 0; it < 50; ++it) {
            const auto a = d(rng), b = d(rng);
            CHECK(F->pow(F->add(a, b), p) == F->add(F->pow(a, p), F->pow(b, p)));
        }
    }
}

TEST_CASE("F_9 default modulus is the canonical smallest irreducible") {
    auto F = Fq::make(3, 2);
    // Monic quadratics over F_3 ordered with the constant coefficient last:
    // T^2, T^2+1, T^2+2 come first; T^2 and T^2+2 = (T+1)(T+2) are reducible.
    CHECK(F->modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("PolyA ring axioms and division") {
    auto F = Fq::make(3);
    std::mt19937 rng(99);
    for (int it = 0; it < 100; ++it) {
        PolyA a = rand_poly(F, rng, 6), b = rand_poly(F, rng, 6), c = rand_poly(F, rng, 6);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) {
            auto [q, r] = a.divmod(b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
        PolyA g = gcd(a, b);
        if (!g.is_zero()) {
            if (!a.is_zero()) CHECK(a.divisible_by(g));
            if (!b.is_zero()) CHECK(b.divisible_by(g));
        }
    }
}

TEST_CASE("poly_ord_at examples") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    const PolyA f = T * T * (T + PolyA::one(F));
    CHECK(poly_ord_at(f, T) == 2);
    CHECK(poly_ord_at(T + PolyA::one(F), T) == 0);
    CHECK(poly_ord_at(PolyA::zero(F), T) == kValInfinity);
}

TEST_CASE("rat_vpi examples and valuation rules") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    const PrimePi piT(T);

    const RatK x(T * T + T, T + PolyA::constant(F, 2));
    CHECK(rat_vpi(x, piT) == 1);
    CHECK(rat_vpi(RatK(PolyA::one(F), T), piT) == -1);
    CHECK(rat_vpi(RatK::from_int(F, 2), piT) == 0);

    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        RatK a = rand_rat(F, rng, 4), b = rand_rat(F, rng, 4);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(rat_vpi(a * b, piT) == rat_vpi(a, piT) + rat_vpi(b, piT));
        const RatK s = a + b;
        if (!s.is_zero())
            CHECK(rat_vpi(s, piT) >= std::min(rat_vpi(a, piT), rat_vpi(b, piT)));
    }
}

TEST_CASE("RatK canonical form and field axioms") {
    auto F = Fq::make(5);
    std::mt19937 rng(2024);
    for (int it = 0; it < 100; ++it) {
        RatK a = rand_rat(F, rng, 4), b = rand_rat(F, rng, 4), c = rand_rat(F, rng, 4);
        CHECK(a.den().is_monic());
        CHECK(gcd(a.num(), a.den()).is_one());
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        CHECK(a - a == RatK::zero(F));
    }
}

TEST_CASE("text forms round-trip bit-exactly") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    CHECK((T * T + T + T + PolyA::one(F)).to_string() == "T^2+2*T+1");
    CHECK(PolyA::zero(F).to_string() == "0");
    CHECK(PolyA::parse(F, "T^2+2*T+1") == T * T + PolyA::constant(F, 2) * T + PolyA::one(F));

    const RatK x(T * T + T, T + PolyA::constant(F, 2));
    CHECK(x.to_string() == "(T^2+T)/(T+2)");
    CHECK(RatK::parse(F, x.to_string()) == x);
    CHECK(RatK(PolyA::one(F), T).to_string() == "1/T");

    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        RatK a = rand_rat(F, rng, 5);
        CHECK(RatK::parse(F, a.to_string()) == a);
    }
}

TEST_CASE("PrimePi accepts irreducibles and rejects composites") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    CHECK_NOTHROW(PrimePi{T});
    CHECK_NOTHROW(PrimePi{T + PolyA::one(F)});
    CHECK_NOTHROW(PrimePi{T * T + PolyA::one(F)});
    CHECK_THROWS_AS(PrimePi{T * T}, ConfigError);
    CHECK_THROWS_AS(PrimePi{T * T * T}, ConfigError);
    CHECK_THROWS_AS(PrimePi{(T + PolyA::one(F)).scaled(2)}, ConfigError);
}

TEST_CASE("residue field arithmetic") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    const PrimePi pi(T * T + PolyA::one(F));
    ResField R(pi);
    // A/(T^2+1) is F_9; check inverses on all nonzero residues.
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b) {
            PolyA x = PolyA::constant(F, a) * T + PolyA::constant(F, b);
            if (x.is_zero()) continue;
            CHECK(R.mul(x, R.inv(x)) == R.one());
        }
}

TEST_CASE("series_mul examples") {
    auto F = Fq::make(3);
    const RatK one = RatK::one(F);
    USeries a(F, 5), b(F, 5);
    a.set_coeff(0, one);
    a.set_coeff(1, one);
    b.set_coeff(0, one);
    b.set_coeff(1, -one);
    USeries ab = series_mul(a, b);
    CHECK(ab.prec() == 5);
    CHECK(ab.coeff(0) == one);
    CHECK(ab.coeff(1).is_zero());
    CHECK(ab.coeff(2) == -one);
    CHECK(ab.coeff(3).is_zero());
    CHECK(ab.coeff(4).is_zero());

    // f * 0 propagates the zero factor's precision.
    USeries z(F, 3);
    CHECK(series_mul(a, z).prec() == 3);
    CHECK(series_mul(a, z).known_zero());

    // (-u)(-u) = u^2.
    USeries mu = -USeries::unit_u(F, 6);
    USeries sq = series_mul(mu, mu);
    CHECK(sq.coeff(2) == one);
    CHECK(sq.ord() == 2);
    CHECK(sq.prec() == 7);  // min(6+1, 6+1)
}

TEST_CASE("series_inv examples and round-trip") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    USeries f(F, 6);
    f.set_coeff(0, RatK::one(F));
    f.set_coeff(1, RatK(T));
    USeries g = series_inv(f);
    for (int i = 0; i < 6; ++i) {
        RatK expect = RatK(T).pow(i);
        if (i % 2 == 1) expect = -expect;
        CHECK(g.coeff(i) == expect);
    }
    USeries prod = series_mul(f, g);
    CHECK(prod.coeff(0).is_one());
    for (int i = 1; i < prod.prec(); ++i) CHECK(prod.coeff(i).is_zero());

    USeries c = USeries::constant(F, RatK::from_int(F, 2), 4);
    CHECK(series_inv(c).coeff(0) == RatK::from_int(F, 2));  // 1/2 = 2 in F_3

    CHECK_THROWS_AS(series_inv(USeries::unit_u(F, 4)), NonUnitSeries);
}

TEST_CASE("series_compose examples") {
    auto F = Fq::make(3);
    std::mt19937 rng(31);
    // f = u composes to s.
    USeries s(F, 12);
    s.set_coeff(2, RatK::from_int(F, 2));
    s.set_coeff(5, RatK::one(F));
    USeries id = USeries::unit_u(F, 6);
    USeries comp = series_compose(id, s);
    CHECK(comp.prec() == 12);
    CHECK(comp.agrees_with(s, 12));

    // u^2 composed with u^3 is u^6.
    USeries f2(F, 3);
    f2.set_coeff(2, RatK::one(F));
    USeries s2(F, 9);
    s2.set_coeff(3, RatK::one(F));
    USeries c2 = series_compose(f2, s2);
    CHECK(c2.prec() == 9);
    CHECK(c2.ord() == 6);
    CHECK(c2.coeff(6).is_one());

    USeries bad(F, 4);
    bad.set_coeff(0, RatK::one(F));
    CHECK_THROWS_AS(series_compose(f2, bad), CompositionNotSupported);

    // (fg)(s) = f(s) g(s) to the common precision.
    for (int it = 0; it < 10; ++it) {
        USeries f(F, 5), g(F, 5), sub(F, 10);
        std::uniform_int_distribution<int> dc(0, 2);
        for (int i = 0; i < 5; ++i) {
            f.set_coeff(i, RatK::from_int(F, dc(rng)));
            g.set_coeff(i, RatK::from_int(F, dc(rng)));
        }
        sub.set_coeff(2, RatK::from_int(F, 1 + dc(rng) % 2));
        for (int i = 3; i < 10; ++i) sub.set_coeff(i, RatK::from_int(F, dc(rng)));
        USeries lhs = series_compose(series_mul(f, g).truncated(5), sub);
        USeries rhs = series_mul(series_compose(f, sub), series_compose(g, sub));
        const int upto = std::min(lhs.prec(), rhs.prec());
        CHECK(lhs.agrees_with(rhs.truncated(upto), upto));
    }
}

TEST_CASE("series_root examples") {
    auto F = Fq::make(5);
    USeries one_series = USeries::constant(F, RatK::one(F), 8);
    CHECK(series_root(one_series, 3).agrees_with(one_series, 8));

    USeries f(F, 8);
    f.set_coeff(0, RatK::one(F));
    f.set_coeff(1, RatK::one(F));
    USeries sq = series_mul(f, f).truncated(8);
    USeries back = series_root(sq, 2);
    CHECK(back.agrees_with(f, 8));

    CHECK_THROWS_AS(series_root(one_series, 5), RootObstruction);
    USeries notone(F, 4);
    notone.set_coeff(0, RatK::from_int(F, 2));
    CHECK_THROWS_AS(series_root(notone, 2), RootObstruction);
}

TEST_CASE("series_vpi and reduction mod pi") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    const PrimePi piT(T);

    USeries f(F, 4);
    f.set_coeff(1, RatK(T));
    f.set_coeff(2, RatK(T * T));
    CHECK(series_vpi(f, piT) == 1);

    USeries g(F, 4);
    g.set_coeff(1, RatK(PolyA::one(F), T));
    CHECK(series_vpi(g, piT) == -1);
    CHECK(series_vpi(USeries(F, 4), piT) == kValInfinity);

    // pi * u reduces to zero; u/pi is not integral.
    CHECK(series_reduce_mod_pi(f, piT).known_zero());
    CHECK_THROWS_AS(series_reduce_mod_pi(g, piT), NotPiIntegral);

    // reduction vanishes exactly when v_pi >= 1
    std::mt19937 rng(17);
    for (int it = 0; it < 50; ++it) {
        USeries h(F, 5);
        std::uniform_int_distribution<int> dc(0, 5);
        for (int i = 0; i < 5; ++i) {
            PolyA num = rand_poly(F, rng, 3);
            h.set_coeff(i, RatK(num, PolyA::one(F)));
        }
        const bool vanish = series_reduce_mod_pi(h, piT).known_zero();
        CHECK(vanish == (series_vpi(h, piT) >= 1));
    }
}
