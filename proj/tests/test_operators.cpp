#include <random>

#include "dmf/error.hpp"
#include "dmf/oldpoly.hpp"
#include "doctest.h"

using namespace dmf;

namespace {
const int kN = 60;

USeries rand_integral_series(const FqPtr& F, const PrimePi& pi, std::mt19937& rng, int prec) {
    std::uniform_int_distribution<int> dd(0, 3);
    std::uniform_int_distribution<std::uint32_t> dc(0, F->q() - 1);
    USeries s(F, prec);
    for (int n = 0; n < prec; ++n) {
        std::vector<std::uint32_t> num(static_cast<std::size_t>(dd(rng)) + 1);
        for (auto& x : num) x = dc(rng);
        PolyA den(F);
        do {
            std::vector<std::uint32_t> dv(static_cast<std::size_t>(dd(rng)) + 1);
            for (auto& x : dv) x = dc(rng);
            den = PolyA(F, std::move(dv));
        } while (den.is_zero() || den.divisible_by(pi.poly()));
        s.set_coeff(n, RatK(PolyA(F, std::move(num)), std::move(den)));
    }
    return s;
}

}  // namespace

TEST_CASE("theta examples") {
    auto F = Fq::make(3);
    const USeries one = USeries::constant(F, RatK::one(F), 6);
    CHECK(theta(one).known_zero());
    CHECK(theta(one).prec() == 7);

    const USeries u = USeries::unit_u(F, 6);
    const USeries tu = theta(u);
    CHECK(tu.ord() == 2);
    CHECK(tu.coeff(2) == -RatK::one(F));

    USeries uq(F, 6);
    uq.set_coeff(3, RatK::one(F));
    CHECK(theta(uq).known_zero());
}

TEST_CASE("partial: the Delta annihilation identities") {
    auto F = Fq::make(3);
    const SeriesForm delta = delta_series(F, kN);

    // Theta Delta = E Delta exactly, equivalently partial_{q^2-1} Delta = 0.
    const USeries lhs = theta(delta.series());
    const USeries rhs = series_mul(e_series(F, kN + 1), delta.series());
    CHECK(lhs.agrees_with(rhs.truncated(lhs.prec()), lhs.prec()));

    const SeriesForm dd = partial(delta);
    CHECK(dd.series().known_zero());
    CHECK(dd.weight() == 10);
    CHECK(dd.type() == 1);

    // partial(g_1^{q^i} Delta) = 0 for i = 1, 2.
    const SeriesForm g1 = gd_series_of_degree(F, 1, kN);
    for (int i = 1; i <= 2; ++i) {
        long e = 1;
        for (int s = 0; s < i; ++s) e *= 3;
        USeries fser = series_mul(g1.series().pow(e), delta.series());
        if (fser.prec() > kN) fser = fser.truncated(kN);
        const SeriesForm f(fser, 2 * e + 8, 0, Level::one);
        CHECK(partial(f).series().known_zero());
    }
}

TEST_CASE("partial(g_1) spans the h line") {
    auto F = Fq::make(3);
    const SeriesForm g1 = gd_series_of_degree(F, 1, kN);
    const SeriesForm dg1 = partial(g1);
    CHECK(enumerate_monomials(F, 4, 1).size() == 1);
    const IsobarPoly phi = isobaric_solve(dg1);  // throws NotInSpan on failure
    CHECK(phi.terms().size() == 1);
    CHECK_FALSE(phi.coeff(0, 1).is_zero());
}

TEST_CASE("v_operator examples") {
    auto F = Fq::make(3);
    const PrimePi piT{PolyA::variable(F)};

    CHECK(v_operator(USeries::unit_u(F, 10), piT) == t_series(piT.poly(), 30));

    const USeries h = h_series(F, 12).series();
    CHECK(v_operator(h, piT).ord() == 3 * h.ord());

    // E* = E - pi V_pi(E).
    const USeries E = e_series(F, kN);
    const USeries vE = v_operator(E.truncated(kN / 3), piT);
    const USeries estar = e_star_series(piT, kN).series();
    CHECK(estar.agrees_with(E - vE.truncated(kN).scaled(RatK(piT.poly())), kN));
}

TEST_CASE("u_operator: annihilation, E* fixed point, valuation growth") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);

    for (const PolyA& pp : {T, T * T + PolyA::one(F)}) {
        const PrimePi pi(pp);
        const long qd = pi.qd();
        const int inner = static_cast<int>(kN / qd);

        // U_pi V_pi = 0 in characteristic p.
        for (BaseForm b : {BaseForm::gd, BaseForm::h, BaseForm::delta}) {
            const USeries f = generator_series(F, b, pi.degree(), inner).series();
            const USeries uv = u_operator(v_operator(f, pi), pi);
            CHECK(uv.known_zero());
        }

        // U_pi(E*) = E*.
        const USeries estar = e_star_series(pi, kN).series();
        const USeries ue = u_operator(estar, pi);
        CHECK(ue.agrees_with(estar.truncated(ue.prec()), ue.prec()));
    }

    const PrimePi piT{T};
    std::mt19937 rng(2718);
    for (int it = 0; it < 20; ++it) {
        const USeries f = rand_integral_series(F, piT, rng, 40);
        const long vf = series_vpi(f, piT);
        CHECK(series_vpi(u_operator(f, piT), piT) >= vf);
    }

    // Linearity: U(a f + g) = a U(f) + U(g).
    for (int it = 0; it < 5; ++it) {
        const USeries f = rand_integral_series(F, piT, rng, 30);
        const USeries g = rand_integral_series(F, piT, rng, 30);
        const RatK a(PolyA::variable(F) + PolyA::one(F));
        CHECK(u_operator(f.scaled(a) + g, piT) ==
              u_operator(f, piT).scaled(a) + u_operator(g, piT));
    }

    // The level-pi relation on E*: flatten(W(E*)) = -pi^{1-k/2} U(E*), k = 2.
    const USeries estar = e_star_series(piT, kN).series();
    const USeries lhs = flatten(w_action(OldPoly::estar_form(piT)), kN);
    const USeries rhs = -u_operator(estar, piT);
    CHECK(lhs.truncated(rhs.prec()) == rhs);
}

TEST_CASE("congruent reports") {
    auto F = Fq::make(3);
    const PrimePi piT{PolyA::variable(F)};

    const SeriesForm gd = gd_series(piT, kN);
    const USeries one = USeries::constant(F, RatK::one(F), kN);
    CHECK(congruent(gd.series(), one, piT, 1).holds);

    const USeries E = e_series(F, kN);
    CHECK(congruent(E, -partial(gd).series().truncated(kN), piT, 1, "E", "-partial(g_d)").holds);

    USeries a = USeries::unit_u(F, 6);
    USeries b = a;
    b.set_coeff(2, RatK(PolyA::one(F), piT.poly()));
    const CongruenceReport rep = congruent(a, b, piT, 1);
    CHECK_FALSE(rep.holds);
    CHECK(rep.witness_exponent == 2);
}

TEST_CASE("w_action: E*, explicit pairs, involution, multiplicativity") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    const PrimePi piT{T};

    const OldPoly estar = OldPoly::estar_form(piT);
    CHECK(w_action(estar) == -estar);
    CHECK(w_eigenvalue(estar) == -1);

    // Explicit eigenvectors built from Delta and g_d h.
    const OldPoly delta = OldPoly::level1_form(piT, BaseForm::delta);
    const OldPoly gdh = OldPoly::level1_form(piT, BaseForm::gd) * OldPoly::level1_form(piT, BaseForm::h);
    for (const OldPoly* f : {&delta, &gdh}) {
        CHECK(w_eigenvalue(oldform_pair(*f, +1)) == +1);
        CHECK(w_eigenvalue(oldform_pair(*f, -1)) == -1);
    }

    // Involution on a monomial basis.
    const std::vector<OldPoly> basis = {
        OldPoly::level1_form(piT, BaseForm::gd),
        OldPoly::level1_form(piT, BaseForm::gd, 1, true),
        OldPoly::level1_form(piT, BaseForm::h) * OldPoly::level1_form(piT, BaseForm::h),
        delta * OldPoly::level1_form(piT, BaseForm::h, 0, true),
        estar * delta,
    };
    for (const OldPoly& m : basis) CHECK(w_action(w_action(m)) == m);

    // Multiplicativity on pairs drawn from the basis.
    for (const OldPoly& a : basis)
        for (const OldPoly& b : basis) CHECK(w_action(a * b) == w_action(a) * w_action(b));
}

TEST_CASE("flatten: atoms, products, W-compatibility for E*") {
    auto F = Fq::make(3);
    const PrimePi piT{PolyA::variable(F)};

    const OldPoly estar = OldPoly::estar_form(piT);
    CHECK(flatten(estar, kN) == e_star_series(piT, kN).series());
    CHECK(flatten(w_action(estar), kN) == -e_star_series(piT, kN).series());

    const OldPoly gdh = OldPoly::level1_form(piT, BaseForm::gd) * OldPoly::level1_form(piT, BaseForm::h);
    const USeries direct = series_mul(gd_series(piT, kN).series(), h_series(F, kN).series());
    CHECK(flatten(gdh, kN) == direct.truncated(kN));

    // iota atoms flatten through the same substitution as v_operator.
    const OldPoly gdi = OldPoly::level1_form(piT, BaseForm::gd, 1, true);
    const USeries via_v = v_operator(gd_series(piT, kN / 3).series(), piT);
    CHECK(flatten(gdi, kN) == via_v.truncated(kN));
}

TEST_CASE("trace_level_one: E* dies, level-1 forms persist") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);

    for (const PolyA& pp : {T, T * T + PolyA::one(F)}) {
        const PrimePi pi(pp);
        CHECK(trace_level_one(OldPoly::estar_form(pi), kN).known_zero());

        for (BaseForm b : {BaseForm::gd, BaseForm::h, BaseForm::delta}) {
            const OldPoly f = OldPoly::level1_form(pi, b);
            const USeries tr = trace_level_one(f, kN);
            const USeries direct = generator_series(F, b, pi.degree(), kN).series();
            CHECK(tr == direct.truncated(tr.prec()));
        }
    }
}

TEST_CASE("g_(k): shape, congruences, W-image valuation") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);

    for (const PolyA& pp : {T, T * T + PolyA::one(F)}) {
        const PrimePi pi(pp);
        const long qd = pi.qd();

        CHECK(gk_form(2, pi).monomials().size() == 2);

        for (int k : {2, 4}) {
            const OldPoly gk = gk_form(k, pi);
            const USeries flat = flatten(gk, kN);
            CHECK(congruent(flat, USeries::constant(F, RatK::one(F), kN), pi, 1).holds);

            const long bound = (k - 1) * (qd - 1) / 2 + (k - 1);
            CHECK(series_vpi(flatten(w_action(gk), kN), pi) >= bound);
        }
    }
}

TEST_CASE("trace of E* g_(2): existence-of-F instance") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);

    for (const PolyA& pp : {T, T + PolyA::one(F), T * T + PolyA::one(F)}) {
        const PrimePi pi(pp);
        const long qd = pi.qd();
        const int N = static_cast<int>(qd) * 12;  // solver needs ceil(N/q^d) > 9
        const OldPoly x = OldPoly::estar_form(pi) * gk_form(2, pi);
        CHECK(x.weight() == 2 + (qd - 1));
        const USeries Fser = trace_level_one(x, N);
        const USeries estar = e_star_series(pi, N).series();
        CHECK(congruent(Fser, estar.truncated(Fser.prec()), pi, 1, "F", "E*").holds);

        // F is a genuine level-1 form of weight q^d + 1, type 1 ...
        const SeriesForm Fform(Fser, qd + 1, 1, Level::one);
        const IsobarPoly phi = isobaric_solve(Fform);
        CHECK_FALSE(phi.is_zero());
        // ... whose filtration does not drop: A_d does not divide B_d.
        CHECK(filtration(Fform, pi) == qd + 1);
    }
}

TEST_CASE("proof_trace replays both counterexample bullets (q=3, pi=T)") {
    auto F = Fq::make(3);
    const PrimePi piT{PolyA::variable(F)};

    const OldPoly delta = OldPoly::level1_form(piT, BaseForm::delta);
    const OldPoly g1 = OldPoly::level1_form(piT, BaseForm::gd, 1);

    // Bullet one: f = Delta.
    {
        const int N = std::max(proof_trace_min_prec(8, piT), 80);
        const OldPoly f = oldform_pair(delta, +1);
        const OldPoly g = OldPoly::estar_form(piT) * oldform_pair(delta, -1);
        const ProofTraceReport rep = proof_trace(f, g, N);
        CHECK(rep.alpha == 1);
        CHECK(rep.beta == 1);
        CHECK(rep.k == 8);
        CHECK(rep.premise.holds);
        CHECK(rep.h_integral);
        CHECK(rep.f_congruent_kf.holds);
        CHECK(rep.h_congruent_chain.holds);
        REQUIRE(rep.h_vs_estar.has_value());
        CHECK(rep.h_vs_estar->holds);
        REQUIRE(rep.h_vs_bd_f.has_value());
        CHECK(rep.h_vs_bd_f->holds);
        CHECK(rep.w_F == 8);  // = q^2 - 1 < 22: the hypothesis fails
        CHECK(rep.w_f_hypothesis == 22);
        CHECK_FALSE(rep.hypothesis_holds);
        CHECK(rep.w_h_within_bound);
        CHECK(rep.all_checks_pass);
        CHECK(rep.conclusion.find("filtration drop") != std::string::npos);
        // The two congruent level-1 forms share one filtration.
        REQUIRE(rep.w_bd_f.has_value());
        CHECK(rep.w_H == *rep.w_bd_f);
    }

    // Bullet two: f = g_1^q Delta.
    {
        const OldPoly base = g1.pow(3) * delta;
        const int N = std::max(proof_trace_min_prec(base.weight(), piT), 80);
        const OldPoly f = oldform_pair(base, +1);
        const OldPoly g = OldPoly::estar_form(piT) * oldform_pair(base, -1);
        const ProofTraceReport rep = proof_trace(f, g, N);
        CHECK(rep.k == 14);
        CHECK(rep.alpha == 1);
        CHECK(rep.beta == 1);
        CHECK(rep.all_checks_pass);
        CHECK_FALSE(rep.hypothesis_holds);
        CHECK(rep.w_F == 8);  // k f = 2 g_1^3 Delta = Delta class mod T
    }

    // Premise violation: Theta(Delta-pair) is not congruent to E* Delta-pair(+).
    {
        const OldPoly f = oldform_pair(delta, +1);
        const OldPoly g = OldPoly::estar_form(piT) * oldform_pair(delta, -1);
        CHECK_THROWS_AS(proof_trace(f, g.scaled(RatK::from_int(F, 2)), 80), PremiseViolated);
    }
}
