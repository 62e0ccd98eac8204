#include "dmf/carlitz.hpp"

#include <algorithm>

#include "dmf/error.hpp"

namespace dmf {
namespace {

// f(T)^q = f(T^q) since Frobenius fixes F_q: spread exponents by q.
PolyA frob_q(const PolyA& f) {
    if (f.is_zero()) return f;
    const int q = static_cast<int>(f.field()->q());
    std::vector<std::uint32_t> c(static_cast<std::size_t>(f.degree()) * q + 1, 0);
    for (int i = 0; i <= f.degree(); ++i) c[static_cast<std::size_t>(i * q)] = f.coeff(i);
    return PolyA(f.field(), std::move(c));
}

}  // namespace

Brackets bracket_D_L(const FqPtr& field, int i) {
    if (i < 1) throw Error("bracket index must be >= 1");
    const PolyA T = PolyA::variable(field);
    PolyA D = PolyA::one(field);
    PolyA L = PolyA::one(field);
    PolyA br(field);
    long qi = 1;
    for (int j = 1; j <= i; ++j) {
        qi *= field->q();
        br = PolyA::monomial(field, 1, static_cast<int>(qi)) - T;
        D = br * frob_q(D);
        L = L * br;
    }
    return {br, D, L};
}

AdditivePoly::AdditivePoly(FqPtr field, std::vector<PolyA> coeffs)
    : F_(std::move(field)), c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AdditivePoly carlitz_coeffs(const PolyA& a) {
    const FqPtr& F = a.field();
    const PolyA T = PolyA::variable(F);
    // rho_{T^{j+1}} = rho_T o rho_{T^j}: coefficientwise c'_i = T c_i + c_{i-1}^q.
    std::vector<PolyA> power = {PolyA::one(F)};  // rho_1 = X
    std::vector<PolyA> acc;
    for (int j = 0; j <= std::max(a.degree(), 0); ++j) {
        if (j > 0) {
            std::vector<PolyA> next(power.size() + 1, PolyA::zero(F));
            for (std::size_t i = 0; i < power.size(); ++i) {
                next[i] += T * power[i];
                next[i + 1] += frob_q(power[i]);
            }
            power = std::move(next);
        }
        const std::uint32_t aj = a.coeff(j);
        if (aj == 0) continue;
        if (acc.size() < power.size()) acc.resize(power.size(), PolyA::zero(F));
        for (std::size_t i = 0; i < power.size(); ++i) acc[i] += power[i].scaled(aj);
    }
    return AdditivePoly(F, std::move(acc));
}

USeries t_series(const PolyA& a, int N) {
    if (!a.is_monic()) throw Error("t_series requires a monic polynomial");
    const FqPtr& F = a.field();
    const int e = a.degree();
    if (e == 0) return USeries::unit_u(F, N);

    long qe = 1;
    for (int i = 0; i < e; ++i) qe *= F->q();
    if (qe >= N) return USeries(F, N);

    // u^{q^e} / t_a = sum_i c_i u^{q^e - q^i} =: P(u), constant term 1.
    const AdditivePoly rho = carlitz_coeffs(a);
    USeries P(F, N - static_cast<int>(qe));
    long qi = 1;
    for (int i = 0; i <= e; ++i) {
        const long exp = qe - qi;
        if (exp < P.prec()) P.set_coeff(static_cast<int>(exp), RatK(rho.coeff(i)));
        qi *= F->q();
    }
    return series_inv(P).shifted_up(static_cast<int>(qe));
}

std::vector<RatK> inv_exp_coeffs(const FqPtr& field, int M) {
    if (M < 1) throw Error("inv_exp_coeffs requires M >= 1");
    // 1/e_C(z) - 1/z = (1/z)((1+w)^{-1} - 1), w = sum_{i>=1} z^{q^i-1}/D_i.
    USeries onew(field, M + 2);
    onew.set_coeff(0, RatK::one(field));
    long qi = 1;
    for (int i = 1;; ++i) {
        qi *= field->q();
        if (qi - 1 >= onew.prec()) break;
        const Brackets b = bracket_D_L(field, i);
        onew.set_coeff(static_cast<int>(qi) - 1, RatK(PolyA::one(field), b.D));
    }
    const USeries g = series_inv(onew);
    std::vector<RatK> c;
    c.reserve(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) c.push_back(g.coeff(j + 1));
    return c;
}

RatK zeta_ratio(const FqPtr& field, int k) {
    if (k < 1 || k % (static_cast<int>(field->q()) - 1) != 0)
        throw NotEvenWeight("zeta_ratio requires (q-1) | k, k >= 1");
    return inv_exp_coeffs(field, k).back();
}

std::vector<int> GossPoly::support() const {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(c_.size()); ++j)
        if (!c_[static_cast<std::size_t>(j)].is_zero()) out.push_back(j);
    return out;
}

GossPoly goss_poly(const FqPtr& field, int k) {
    if (k < 0) return GossPoly(k, {});
    const long q = field->q();
    std::vector<RatK> dinv;  // 1/D_i for q^i <= k
    std::vector<long> qpows;
    for (long qi = q, i = 1; qi <= k; qi *= q, ++i) {
        dinv.push_back(RatK(PolyA::one(field), bracket_D_L(field, static_cast<int>(i)).D));
        qpows.push_back(qi);
    }

    std::vector<std::vector<RatK>> G(static_cast<std::size_t>(k) + 1);
    if (k >= 1) G[1] = {RatK::zero(field), RatK::one(field)};  // G_1 = t
    for (int m = 2; m <= k; ++m) {
        // body = G_{m-1} + sum_i D_i^{-1} G_{m-q^i}, then multiply by t.
        std::vector<RatK> body(static_cast<std::size_t>(m), RatK::zero(field));
        auto add_in = [&](const std::vector<RatK>& src, const RatK* scale) {
            for (std::size_t j = 0; j < src.size(); ++j) {
                if (src[j].is_zero()) continue;
                body[j] += scale ? src[j] * *scale : src[j];
            }
        };
        add_in(G[static_cast<std::size_t>(m - 1)], nullptr);
        for (std::size_t i = 0; i < qpows.size(); ++i) {
            if (qpows[i] > m) break;
            add_in(G[static_cast<std::size_t>(m - qpows[i])], &dinv[i]);
        }
        std::vector<RatK> next(static_cast<std::size_t>(m) + 1, RatK::zero(field));
        for (std::size_t j = 0; j < body.size(); ++j) next[j + 1] = std::move(body[j]);
        G[static_cast<std::size_t>(m)] = std::move(next);
    }
    return GossPoly(k, std::move(G[static_cast<std::size_t>(k)]));
}

PowerSums inverse_root_power_sums(const PrimePi& pi, int max_n, int uprec) {
    if (max_n < 2) throw Error("inverse_root_power_sums requires max_n >= 2");
    if (uprec < 1) throw Error("inverse_root_power_sums requires uprec >= 1");
    const FqPtr& F = pi.field();
    const AdditivePoly rho = carlitz_coeffs(pi.poly());

    std::vector<USeries> sums(static_cast<std::size_t>(max_n) - 1, USeries(F, uprec));
    std::vector<long> qpow(static_cast<std::size_t>(rho.tau_degree()) + 1);
    long qi = 1;
    for (int i = 0; i <= rho.tau_degree(); ++i, qi *= F->q())
        qpow[static_cast<std::size_t>(i)] = qi;

    // R_j = rho_pi(t)^j truncated to t-degree < max_n - 1; the t^{n-1}
    // coefficient contributes pi * R_j[n-1] at u^{j+1} in s_n.
    const std::size_t tmax = static_cast<std::size_t>(max_n - 1);
    std::vector<PolyA> R(1, PolyA::one(F));
    for (int j = 0; j + 1 < uprec; ++j) {
        for (std::size_t m = 0; m < R.size(); ++m) {
            if (R[m].is_zero()) continue;
            sums[m].set_coeff(j + 1, RatK(pi.poly() * R[m]));
        }
        if (j + 2 >= uprec) break;
        const std::size_t next_size =
            std::min(R.size() + static_cast<std::size_t>(qpow.back()), tmax);
        std::vector<PolyA> next(next_size, PolyA::zero(F));
        for (int i = 0; i <= rho.tau_degree(); ++i) {
            const PolyA& ci = rho.coeff(i);
            if (ci.is_zero()) continue;
            const std::size_t shift = static_cast<std::size_t>(qpow[static_cast<std::size_t>(i)]);
            for (std::size_t m = 0; m < R.size(); ++m) {
                if (R[m].is_zero()) continue;
                const std::size_t dst = m + shift;
                if (dst >= next.size()) break;
                next[dst] += R[m] * ci;
            }
        }
        R = std::move(next);
    }
    return PowerSums(pi, std::move(sums), uprec);
}

std::vector<PolyA> monic_polys_up_to(const FqPtr& field, int max_degree) {
    std::vector<PolyA> out;
    for (int e = 0; e <= max_degree; ++e) {
        auto layer = monic_polys(field, e);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace dmf
