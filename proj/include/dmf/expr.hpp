#pragma once

#include <string_view>

#include "dmf/oldpoly.hpp"

namespace dmf {

/// Tiny expression grammar over named generators:
///
///   expr    := term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ('^' uint)?
///   primary := name | 'iota' '(' name ')' | '{' rational '}' | '(' expr ')'
///   name    := g1 | g2 | g3 | gd | h | delta | e_star | e | pair+(name)
///              | pair-(name)
///
/// Scalars are RatK literals in braces, e.g. {T^4} or {(T+1)/T}. pair+/-
/// builds f +- pi^{k/2} iota(f). "gd" picks d = deg(pi). The name "e" (the
/// non-modular weight-2 series) is only allowed where a bare series is
/// expected, never inside the symbolic algebra.
OldPoly parse_oldform_expr(std::string_view text, const PrimePi& pi);

/// Evaluates the same grammar directly to a u-series at precision N,
/// additionally allowing the name "e".
USeries eval_series_expr(std::string_view text, const PrimePi& pi, int N);

}  // namespace dmf
