#pragma once

#include <optional>

#include "dmf/carlitz.hpp"

namespace dmf {

enum class Level { one, pi };

/// A u-series tagged with weight k, type l (mod q-1) and level. Construction
/// checks k = 2l (mod q-1) and the type support condition: a(i) = 0 whenever
/// i != l (mod q-1).
class SeriesForm {
public:
    SeriesForm(USeries series, long weight, int type, Level level,
               std::optional<PolyA> pi = std::nullopt);

    const USeries& series() const { return s_; }
    long weight() const { return weight_; }
    int type() const { return type_; }
    Level level() const { return level_; }
    const std::optional<PolyA>& pi() const { return pi_; }
    int prec() const { return s_.prec(); }
    const FqPtr& field() const { return s_.field(); }

private:
    USeries s_;
    long weight_;
    int type_;
    Level level_;
    std::optional<PolyA> pi_;
};

/// Monic cutoff degree for the lattice sums: smallest B with q^B >= N, so
/// terms of degree > B start at u-order q^{deg} >= qN.
int monic_cutoff(const FqPtr& field, int N);

/// pitilde^{-k} E_k as a series in u, for (q-1) | k: the Eisenstein sum
/// -zeta_ratio(k) - sum_{a monic} sum_{(q-1)|j} g_{k,j} t_a^j.
USeries eisenstein_tilde(const FqPtr& field, int k, int N);
/// Same with an explicit monic cutoff; used to check cutoff invariance.
USeries eisenstein_tilde(const FqPtr& field, int k, int N, int cutoff);

/// g_d = (-1)^{d+1} L_d Etilde_{q^d-1}: weight q^d - 1, type 0, level one.
SeriesForm gd_series(const PrimePi& pi, int N);
SeriesForm gd_series_of_degree(const FqPtr& field, int d, int N);

/// Delta = (T^{q^2} - T) Etilde_{q^2-1} + (T^q - T)^q Etilde_{q-1}^{q+1}:
/// weight q^2 - 1, type 0, cusp form with leading term -u^{q-1}.
SeriesForm delta_series(const FqPtr& field, int N);

/// h = -u (-Delta/u^{q-1})^{1/(q-1)}: weight q+1, type 1, leading term -u.
SeriesForm h_series(const FqPtr& field, int N);

/// E = sum_{a monic} a t_a: the weight-2 type-1 false Eisenstein series
/// (not modular, returned as a bare series).
USeries e_series(const FqPtr& field, int N);

/// E* = E - pi E(pi z): weight 2, type 1, level pi.
SeriesForm e_star_series(const PrimePi& pi, int N);

/// Named level-1 generators usable as building blocks of oldforms.
enum class BaseForm { gd, h, delta };

/// gd_series_of_degree / h_series / delta_series behind one name; d is the
/// degree for BaseForm::gd and ignored otherwise.
SeriesForm generator_series(const FqPtr& field, BaseForm base, int d, int N);

/// The twist f(pi z) of a named generator: u -> t_pi substitution at
/// precision N (cached per (generator, pi, N)).
USeries iota_generator_series(const PrimePi& pi, BaseForm base, int d, int N);

/// Drops every cached generator (test support).
void clear_form_cache();

}  // namespace dmf
