#pragma once

#include <optional>
#include <string>

#include "dmf/forms.hpp"

namespace dmf {

/// Theta = -u^2 d/du: sum a_n u^n -> -sum n a_n u^{n+1}; precision grows
/// by one (the unknown tail starts one exponent later).
USeries theta(const USeries& f);

/// partial_k f = Theta f + k E f: weight k+2, type l+1, same level.
SeriesForm partial(const SeriesForm& f);

/// f|V_pi = f(pi z): substitution u -> t_pi. The inner series is computed
/// to precision prec(f) * q^d, which is also the result precision.
USeries v_operator(const USeries& f, const PrimePi& pi);

/// pi^{k/2} f(pi z), the matrix-normalized variant of V_pi for weight k.
USeries iota_slash(const USeries& f, const PrimePi& pi, long weight);

/// f|U_pi = (1/pi) sum_{n>=1} a_f(n) s_n; precision ceil(prec(f) / q^d).
USeries u_operator(const USeries& f, const PrimePi& pi);

struct CongruenceReport {
    std::string left;
    std::string right;
    PolyA pi;
    long order = 1;
    bool holds = false;
    int prec_compared = 0;
    std::optional<int> witness_exponent;  // first failing u-exponent
    std::string witness_coeff;            // its coefficient, as text
};

/// Tests v_pi(f - g) >= e over the common known prefix.
CongruenceReport congruent(const USeries& f, const USeries& g, const PrimePi& pi, long e,
                           const std::string& left_name = "lhs",
                           const std::string& right_name = "rhs");

}  // namespace dmf
