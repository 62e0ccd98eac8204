#include "dmf/operators.hpp"

#include "dmf/error.hpp"

namespace dmf {

USeries theta(const USeries& f) {
    const FqPtr& F = f.field();
    USeries out(F, f.prec() + 1);
    for (int n = 1; n < f.prec(); ++n) {
        if (f.coeff(n).is_zero()) continue;
        const std::uint32_t nmod = F->from_int(n);
        if (nmod == 0) continue;
        out.set_coeff(n + 1, -(f.coeff(n) * RatK::from_int(F, nmod)));
    }
    return out;
}

SeriesForm partial(const SeriesForm& f) {
    const FqPtr& F = f.field();
    const USeries E = e_series(F, f.prec());
    const RatK k = RatK::from_int(F, f.weight());
    USeries s = theta(f.series());
    if (!k.is_zero()) s = s + series_mul(E, f.series()).scaled(k);
    return SeriesForm(std::move(s), f.weight() + 2, f.type() + 1, f.level(), f.pi());
}

USeries v_operator(const USeries& f, const PrimePi& pi) {
    const long qd = pi.qd();
    const long inner = static_cast<long>(f.prec()) * qd;
    if (inner > (1L << 24))
        throw PrecisionError("V_pi would need " + std::to_string(inner) +
                             " coefficients; truncate the input first");
    const USeries tpi = t_series(pi.poly(), static_cast<int>(inner));
    return series_compose(f, tpi);
}

USeries iota_slash(const USeries& f, const PrimePi& pi, long weight) {
    if (weight % 2 != 0) throw OddWeightUnsupported("pi^{k/2} needs even weight");
    return v_operator(f, pi).scaled(RatK(pi.poly()).pow(weight / 2));
}

USeries u_operator(const USeries& f, const PrimePi& pi) {
    const long qd = pi.qd();
    const int pout = static_cast<int>((f.prec() + qd - 1) / qd);
    USeries acc(f.field(), pout);
    if (f.prec() < 2) return acc;
    const PowerSums S = inverse_root_power_sums(pi, f.prec(), pout);
    for (int n = 1; n < f.prec(); ++n) {
        if (f.coeff(n).is_zero()) continue;
        acc.add_in_place(S.s(n).scaled(f.coeff(n)));
    }
    return acc.scaled(RatK(PolyA::one(f.field()), pi.poly()));
}

CongruenceReport congruent(const USeries& f, const USeries& g, const PrimePi& pi, long e,
                           const std::string& left_name, const std::string& right_name) {
    CongruenceReport rep;
    rep.left = left_name;
    rep.right = right_name;
    rep.pi = pi.poly();
    rep.order = e;
    const USeries diff = f - g;
    rep.prec_compared = diff.prec();
    rep.holds = true;
    for (int n = 0; n < diff.prec(); ++n) {
        if (diff.coeff(n).is_zero()) continue;
        if (diff.coeff(n).vpi(pi) < e) {
            rep.holds = false;
            rep.witness_exponent = n;
            rep.witness_coeff = diff.coeff(n).to_string();
            break;
        }
    }
    return rep;
}

}  // namespace dmf
