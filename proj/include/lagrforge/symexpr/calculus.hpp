#pragma once

#include <map>

#include "lagrforge/symexpr/expr.hpp"

namespace lagrforge::sym {

using Substitution = std::map<Symbol, Expr>;

/// Canonical form: the expression is brought to a reduced fraction of
/// polynomials over its atoms (symbols, sin, cos) and rebuilt as a sorted,
/// flattened tree. Monomial denominators appear as negative powers on each
/// term; any remaining polynomial denominator appears once as (...)^-1.
Expr canonicalize(const Expr& e);

/// Partial derivative treating every other symbol as independent.
Expr differentiate(const Expr& e, const Symbol& s);

/// Simultaneous replacement of symbols; the replacements are not revisited.
Expr substitute(const Expr& e, const Substitution& map);

/// Coefficient of `s` in an expression that is affine-linear in `s`, and
/// the remainder. Throws std::domain_error when `e` is not affine in `s`.
struct AffineSplit {
    Expr coefficient;
    Expr remainder;
};
AffineSplit split_affine(const Expr& e, const Symbol& s);

}  // namespace lagrforge::sym
