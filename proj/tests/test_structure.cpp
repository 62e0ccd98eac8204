#include "dmf/error.hpp"
#include "dmf/structure.hpp"
#include "doctest.h"

using namespace dmf;

namespace {
const int kN = 60;
}

TEST_CASE("enumerate_monomials examples") {
    auto F = Fq::make(3);
    CHECK(enumerate_monomials(F, 2, 0) == std::vector<IsobarPoly::Key>{{1, 0}});
    CHECK(enumerate_monomials(F, 2, 1).empty());  // M_{2,1} = 0
    CHECK(enumerate_monomials(F, 4, 1) == std::vector<IsobarPoly::Key>{{0, 1}});
    CHECK(enumerate_monomials(F, 8, 0) ==
          std::vector<IsobarPoly::Key>{{4, 0}, {0, 2}});
}

TEST_CASE("isobaric_solve identifies the generators") {
    auto F = Fq::make(3);
    const RatK one = RatK::one(F);

    IsobarPoly X(F, 2, 0);
    X.set(1, 0, one);
    CHECK(isobaric_solve(gd_series_of_degree(F, 1, kN)) == X);

    IsobarPoly Y(F, 4, 1);
    Y.set(0, 1, one);
    CHECK(isobaric_solve(h_series(F, kN)) == Y);

    IsobarPoly D(F, 8, 0);
    D.set(0, 2, -one);
    CHECK(isobaric_solve(delta_series(F, kN)) == D);  // Delta = -Y^{q-1}
}

TEST_CASE("g_2 = g_1^{q+1} + [1] h^{q-1} (exponential-coefficient oracle)") {
    for (int p : {3, 5}) {
        auto F = Fq::make(p);
        const int q = p;
        const PolyA br1 = bracket_D_L(F, 1).bracket;
        const SeriesForm g2 = gd_series_of_degree(F, 2, kN);
        IsobarPoly expect(F, q * q - 1, 0);
        expect.set(q + 1, 0, RatK::one(F));
        expect.set(0, q - 1, RatK(br1));
        CHECK(isobaric_solve(g2) == expect);
    }
}

TEST_CASE("isobaric_solve round-trips and is multiplicative") {
    auto F = Fq::make(3);
    const SeriesForm g1 = gd_series_of_degree(F, 1, kN);
    const SeriesForm g2 = gd_series_of_degree(F, 2, kN);
    const SeriesForm h = h_series(F, kN);
    const SeriesForm delta = delta_series(F, kN);

    auto as_form = [&](const USeries& s, long w, int l) {
        return SeriesForm(s.prec() > kN ? s.truncated(kN) : s, w, l, Level::one);
    };
    const SeriesForm hg1 = as_form(series_mul(h.series(), g1.series()), 4 + 2, 1);
    const SeriesForm dg1g1 =
        as_form(series_mul(delta.series(), series_mul(g1.series(), g1.series())), 8 + 4, 0);

    for (const SeriesForm* f : {&g1, &g2, &h, &delta, &hg1, &dg1g1}) {
        const IsobarPoly phi = isobaric_solve(*f);
        CHECK(phi.expand(f->prec()) == f->series());
    }

    CHECK(isobaric_solve(hg1) == isobaric_solve(h) * isobaric_solve(g1));
    CHECK(isobaric_solve(dg1g1) ==
          isobaric_solve(delta) * isobaric_solve(g1) * isobaric_solve(g1));
}

TEST_CASE("isobaric_solve failure modes") {
    auto F = Fq::make(3);
    // E is weight 2, type 1: that monomial space is empty, and E != 0.
    CHECK_THROWS_AS(isobaric_solve(SeriesForm(e_series(F, kN), 2, 1, Level::one)), NotInSpan);

    // A perturbed Delta stays type-0 supported but leaves the span.
    USeries s = delta_series(F, kN).series();
    s.set_coeff(20, s.coeff(20) + RatK::one(F));
    CHECK_THROWS_AS(isobaric_solve(SeriesForm(s, 8, 0, Level::one)), NotInSpan);

    // Too little precision to decide.
    const SeriesForm short_delta(delta_series(F, 9).series(), 8, 0, Level::one);
    CHECK_THROWS_AS(isobaric_solve(short_delta), PrecisionError);
}

TEST_CASE("ad_bd: A_1 = X, B_1 proportional to Y, coprimality mod pi") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);

    const PrimePi piT{T};
    const auto [A1, B1] = ad_bd(piT, kN);
    CHECK(A1 == isobaric_solve(gd_series_of_degree(F, 1, kN)));
    CHECK(A1.terms().size() == 1);
    CHECK(A1.coeff(1, 0).is_one());
    CHECK(B1.terms().size() == 1);
    CHECK_FALSE(B1.coeff(0, 1).is_zero());
    CHECK(isobaric_coprime(reduce_isobaric(A1, piT), reduce_isobaric(B1, piT)));

    const PrimePi pi2{T * T + PolyA::one(F)};
    const auto [A2, B2] = ad_bd(pi2, kN);
    CHECK(isobaric_coprime(reduce_isobaric(A2, pi2), reduce_isobaric(B2, pi2)));
}

TEST_CASE("reduce_isobaric examples") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    const PrimePi piT{T};

    IsobarPoly D(F, 8, 0);
    D.set(0, 2, -RatK::one(F));
    const ResIsobarPoly Dbar = reduce_isobaric(D, piT);
    CHECK(Dbar.terms().size() == 1);
    CHECK(Dbar.terms().begin()->second == PolyA::constant(F, 2));

    IsobarPoly bad(F, 2, 0);
    bad.set(1, 0, RatK(PolyA::one(F), T));
    CHECK_THROWS_AS(reduce_isobaric(bad, piT), NotPiIntegral);
}

TEST_CASE("isobaric_divide_power examples") {
    auto F = Fq::make(3);
    const PrimePi piT{PolyA::variable(F)};
    const RatK one = RatK::one(F);

    ResIsobarPoly Dbar(piT, 8, 0);
    Dbar.set(0, 2, PolyA::constant(F, 2));
    ResIsobarPoly Xbar(piT, 2, 0);
    Xbar.set(1, 0, PolyA::one(F));

    CHECK(isobaric_divide_power(Dbar, Xbar).e == 0);

    ResIsobarPoly XXY(piT, 8, 1);
    XXY.set(2, 1, PolyA::one(F));
    const auto r = isobaric_divide_power(XXY, Xbar);
    CHECK(r.e == 2);
    CHECK(r.quotient.weight() == 4);
    CHECK(r.quotient.terms().size() == 1);
    CHECK(r.quotient.terms().begin()->first == IsobarPoly::Key{0, 1});

    ResIsobarPoly zero(piT, 8, 0);
    CHECK(isobaric_divide_power(zero, Xbar).infinite);
}

TEST_CASE("filtration examples") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    const PrimePi piT{T};
    const PrimePi pi2{T * T + PolyA::one(F)};

    // w(g_d) = 0: the class of the constant 1.
    CHECK(filtration(gd_series_of_degree(F, 1, kN), piT) == 0);
    CHECK(filtration(gd_series_of_degree(F, 2, kN), pi2) == 0);

    // w(Delta) = q^2 - 1 at d = 1 and d = 2.
    CHECK(filtration(delta_series(F, kN), piT) == 8);
    CHECK(filtration(delta_series(F, kN), pi2) == 8);

    // pi h = 0 (mod pi): the zero class.
    const SeriesForm pih(h_series(F, kN).series().scaled(RatK(T)), 4, 1, Level::one);
    CHECK(filtration(pih, piT) == kValNegInfinity);

    // Multiplying by the Hasse lift drops the filtration by exactly q^d - 1:
    // g_1 h = 1 * h (mod T), so w = q + 1. Squaring g_1 drops to the constant.
    const SeriesForm g1 = gd_series_of_degree(F, 1, kN);
    const SeriesForm g1h(series_mul(g1.series(), h_series(F, kN).series()).truncated(kN), 6, 1,
                         Level::one);
    CHECK(filtration(g1h, piT) == 4);
    const SeriesForm g1sq(series_mul(g1.series(), g1.series()).truncated(kN), 4, 0, Level::one);
    CHECK(filtration(g1sq, piT) == 0);

    // The filtration keeps w = k (mod q^d - 1) on every computed instance.
    for (const SeriesForm* f : {&g1}) {
        const long w = filtration(*f, piT);
        if (w != kValNegInfinity) CHECK((f->weight() - w) % (piT.qd() - 1) == 0);
    }
}
