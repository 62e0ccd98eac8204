#include <random>

#include "dmf/carlitz.hpp"
#include "dmf/error.hpp"
#include "doctest.h"

using namespace dmf;

namespace {

// f^{q^i}: Frobenius fixes F_q, so this is exponent spreading.
PolyA pow_q_i(const PolyA& f, const FqPtr& F, int i) {
    PolyA r = f;
    for (int s = 0; s < i; ++s) r = r.pow(F->q());
    return r;
}

AdditivePoly compose(const AdditivePoly& A, const AdditivePoly& B, const FqPtr& F) {
    if (A.tau_degree() < 0 || B.tau_degree() < 0) return AdditivePoly(F, {});
    std::vector<PolyA> c(static_cast<std::size_t>(A.tau_degree() + B.tau_degree()) + 1,
                         PolyA::zero(F));
    for (int i = 0; i <= A.tau_degree(); ++i)
        for (int j = 0; j <= B.tau_degree(); ++j)
            c[static_cast<std::size_t>(i + j)] += A.coeff(i) * pow_q_i(B.coeff(j), F, i);
    return AdditivePoly(F, std::move(c));
}

PolyA rand_poly(const FqPtr& F, std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<std::uint32_t> dc(0, F->q() - 1);
    const int d = dd(rng);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = dc(rng);
    return PolyA(F, std::move(c));
}

}  // namespace

TEST_CASE("brackets, D_i, L_i with the degree-2 product oracle") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    const PolyA b1 = PolyA::monomial(F, 1, 3) - T;
    const PolyA b2 = PolyA::monomial(F, 1, 9) - T;

    const Brackets B1 = bracket_D_L(F, 1);
    CHECK(B1.bracket == b1);
    CHECK(B1.D == b1);
    CHECK(B1.L == b1);

    const Brackets B2 = bracket_D_L(F, 2);
    CHECK(B2.bracket == b2);
    CHECK(B2.L == b1 * b2);
    CHECK(B2.D == b2 * b1.pow(3));

    // Independent oracle: D_2 is the product of all monic degree-2 polynomials.
    PolyA prod = PolyA::one(F);
    for (const PolyA& g : monic_polys(F, 2)) prod *= g;
    CHECK(B2.D == prod);
}

TEST_CASE("carlitz_coeffs examples and homomorphism") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);
    const PolyA one = PolyA::one(F);

    const AdditivePoly rhoT = carlitz_coeffs(T);
    REQUIRE(rhoT.tau_degree() == 1);
    CHECK(rhoT.coeff(0) == T);
    CHECK(rhoT.coeff(1) == one);

    const AdditivePoly rho1 = carlitz_coeffs(one);
    REQUIRE(rho1.tau_degree() == 0);
    CHECK(rho1.coeff(0) == one);

    // rho_{T^2} = rho_T o rho_T = T^2 X + (T^q + T) X^q + X^{q^2}.
    const AdditivePoly rhoT2 = carlitz_coeffs(T * T);
    REQUIRE(rhoT2.tau_degree() == 2);
    CHECK(rhoT2.coeff(0) == T * T);
    CHECK(rhoT2.coeff(1) == PolyA::monomial(F, 1, 3) + T);
    CHECK(rhoT2.coeff(2) == one);

    std::mt19937 rng(42);
    for (int it = 0; it < 25; ++it) {
        const PolyA a = rand_poly(F, rng, 3), b = rand_poly(F, rng, 3);
        CHECK(carlitz_coeffs(a * b) == compose(carlitz_coeffs(a), carlitz_coeffs(b), F));
        const AdditivePoly lhs = carlitz_coeffs(a + b);
        const AdditivePoly ra = carlitz_coeffs(a), rb = carlitz_coeffs(b);
        const int n = std::max(ra.tau_degree(), rb.tau_degree());
        std::vector<PolyA> sum;
        for (int i = 0; i <= n; ++i)
            sum.push_back((i <= ra.tau_degree() ? ra.coeff(i) : PolyA::zero(F)) +
                          (i <= rb.tau_degree() ? rb.coeff(i) : PolyA::zero(F)));
        CHECK(lhs == AdditivePoly(F, std::move(sum)));
    }
}

TEST_CASE("t_series examples") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);

    CHECK(t_series(PolyA::one(F), 8) == USeries::unit_u(F, 8));

    // 1/t_T = T/u + 1/u^3 inverts to u^3 - T u^5 + T^2 u^7 - ...
    const USeries tT = t_series(T, 12);
    CHECK(tT.ord() == 3);
    CHECK(tT.coeff(3).is_one());
    CHECK(tT.coeff(4).is_zero());
    CHECK(tT.coeff(5) == -RatK(T));
    CHECK(tT.coeff(6).is_zero());
    CHECK(tT.coeff(7) == RatK(T * T));
    CHECK(tT.coeff(9) == -RatK(T * T * T));

    for (const PolyA& a : {T, T * T, T + PolyA::one(F)}) {
        long qe = 1;
        for (int i = 0; i < a.degree(); ++i) qe *= 3;
        const USeries t = t_series(a, 30);
        CHECK(t.ord() == qe);
        // Multiply back: t_a * (u^{q^e} rho_a(1/u)) = u^{q^e}.
        const AdditivePoly rho = carlitz_coeffs(a);
        USeries P(F, 30);
        long qi = 1;
        for (int i = 0; i <= a.degree(); ++i, qi *= 3)
            if (qe - qi < 30) P.set_coeff(static_cast<int>(qe - qi), RatK(rho.coeff(i)));
        const USeries prod = series_mul(t, P);
        for (int n = 0; n < 30; ++n)
            CHECK(prod.coeff(n) == (n == qe ? RatK::one(F) : RatK::zero(F)));
    }
}

TEST_CASE("inv_exp_coeffs lowest terms") {
    for (int p : {3, 5}) {
        auto F = Fq::make(p);
        const int q = p;
        const auto c = inv_exp_coeffs(F, q);
        const PolyA D1 = bracket_D_L(F, 1).D;
        for (int j = 0; j < q - 2; ++j) CHECK(c[static_cast<std::size_t>(j)].is_zero());
        CHECK(c[static_cast<std::size_t>(q - 2)] == -RatK(PolyA::one(F), D1));
    }
    auto F3 = Fq::make(3);
    CHECK(inv_exp_coeffs(F3, 2)[1] ==
          -RatK(PolyA::one(F3), PolyA::monomial(F3, 1, 3) - PolyA::variable(F3)));
}

TEST_CASE("zeta_ratio examples") {
    auto F = Fq::make(3);
    const PolyA D1 = bracket_D_L(F, 1).D;
    CHECK(zeta_ratio(F, 2) == -RatK(PolyA::one(F), D1));
    CHECK_THROWS_AS(zeta_ratio(F, 3), NotEvenWeight);

    auto F5 = Fq::make(5);
    CHECK(zeta_ratio(F5, 4) == -RatK(PolyA::one(F5), bracket_D_L(F5, 1).D));
    CHECK_THROWS_AS(zeta_ratio(F5, 6), NotEvenWeight);
}

TEST_CASE("Goss polynomials: first values, normalization, homogeneity") {
    for (int p : {3, 5}) {
        auto F = Fq::make(p);
        const int q = p;
        const RatK one = RatK::one(F);

        const GossPoly g1 = goss_poly(F, 1);
        CHECK(g1.support() == std::vector<int>{1});
        CHECK(g1.coeff(1) == one);

        const GossPoly g2 = goss_poly(F, 2);
        CHECK(g2.support() == std::vector<int>{2});

        const GossPoly gq = goss_poly(F, q);
        CHECK(gq.support() == std::vector<int>{q});
        CHECK(gq.coeff(q) == one);

        const GossPoly gq1 = goss_poly(F, q + 1);
        CHECK(gq1.support() == std::vector<int>{2, q + 1});
        CHECK(gq1.coeff(q + 1) == one);
        CHECK(gq1.coeff(2) == RatK(PolyA::one(F), bracket_D_L(F, 1).D));

        for (int k = 1; k <= q * q + q; ++k) {
            const GossPoly g = goss_poly(F, k);
            CHECK(g.coeff(k) == one);  // monic in t
            for (int j : g.support()) CHECK((k - j) % (q - 1) == 0);
        }
    }
}

TEST_CASE("inverse-root power sums") {
    auto F = Fq::make(3);
    const PolyA T = PolyA::variable(F);

    for (const PolyA& pipoly : {T, T + PolyA::one(F), T * T + PolyA::one(F)}) {
        const PrimePi pi(pipoly);
        const int uprec = 30;
        const PowerSums S = inverse_root_power_sums(pi, 50, uprec);

        // s_1 = pi u and s_2 = pi^2 u^2.
        CHECK(S.s(1).coeff(1) == RatK(pipoly));
        for (int m = 2; m < uprec; ++m) CHECK(S.s(1).coeff(m).is_zero());
        CHECK(S.s(2).coeff(2) == RatK(pipoly * pipoly));
        CHECK(S.s(2).coeff(1).is_zero());
        for (int m = 3; m < uprec; ++m) CHECK(S.s(2).coeff(m).is_zero());

        const long qd = pi.qd();
        for (int n = 1; n < 50; ++n) {
            const USeries& s = S.s(n);
            // Integrality and the order bound ord(s_n) >= ceil(n / q^d).
            for (int m = 0; m < s.prec(); ++m) CHECK(s.coeff(m).is_integral());
            const long bound = (n + qd - 1) / qd;
            if (bound < s.prec()) {
                CHECK(s.ord() >= bound);
            }
        }

        // Defining identity: (sum_n s_n t^{n-1})(rho_pi(t) - 1/u) + pi = 0,
        // read off per t-degree after clearing the 1/u.
        const AdditivePoly rho = carlitz_coeffs(pipoly);
        for (int m = 0; m + 1 + static_cast<int>(qd) < 50; ++m) {
            USeries acc(F, uprec - 1);
            long qi = 1;
            for (int i = 0; i <= rho.tau_degree(); ++i, qi *= 3) {
                const long n = m + 1 - qi;
                if (n >= 1) acc.add_in_place(S.s(static_cast<int>(n)).truncated(uprec - 1).scaled(RatK(rho.coeff(i))));
            }
            acc = acc - S.s(m + 1).shifted_down(1);
            if (m == 0) acc.set_coeff(0, acc.coeff(0) + RatK(pipoly));
            CHECK(acc.known_zero());
        }
    }

    // Frobenius compatibility: s_{pn} arises from s_n by cubing coefficients
    // and tripling exponents (q = 3, r = 1).
    const PrimePi piT{T};
    const PowerSums S = inverse_root_power_sums(piT, 31, 31);
    for (int n = 1; 3 * n < 31; ++n) {
        const USeries& sn = S.s(n);
        const USeries& s3n = S.s(3 * n);
        for (int m = 0; m < 10; ++m) {
            const RatK expect = RatK(sn.coeff(m).num().pow(3), sn.coeff(m).den().pow(3));
            CHECK(s3n.coeff(3 * m) == expect);
        }
        for (int m = 0; m < 30; ++m)
            if (m % 3 != 0) CHECK(s3n.coeff(m).is_zero());
    }
}
