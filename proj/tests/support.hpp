#pragma once

#include <string>

#include "lagrforge/dsl/group_spec.hpp"
#include "lagrforge/lie/lie_data.hpp"
#include "lagrforge/solver/multiplier.hpp"
#include "lagrforge/symexpr/calculus.hpp"
#include "lagrforge/symexpr/numeric.hpp"
#include "lagrforge/symexpr/polynomial.hpp"
#include "lagrforge/verify/verify.hpp"

namespace testing {

using namespace lagrforge;
using sym::Expr;
using sym::Rational;
using sym::Role;
using sym::Symbol;

inline Expr field(const std::string& coord) { return Expr::symbol(coord + "'", Role::FieldVar); }
inline Expr jet(const std::string& coord, const std::string& param) {
    return Expr::symbol(coord + "'_" + param, Role::JetVar);
}
inline Expr gp(const std::string& name) { return Expr::symbol(name, Role::GroupParam); }
inline Expr base(const std::string& name) { return Expr::symbol(name, Role::BaseCoord); }
inline Expr param(int d) { return Expr(solver::free_parameter(static_cast<std::size_t>(d))); }
inline Expr q(long n, long d = 1) { return Expr(Rational(n, d)); }

/// Exact identity of canonical forms.
inline bool same(const Expr& a, const Expr& b) { return sym::identical(sym::canonicalize(a), sym::canonicalize(b)); }

inline const lie::LieData& so2() {
    static const lie::LieData lie = lie::constraints(dsl::parse_group(*dsl::bundled_group_source("so2")));
    return lie;
}
inline const lie::LieData& affine1() {
    static const lie::LieData lie = lie::constraints(dsl::parse_group(*dsl::bundled_group_source("affine1")));
    return lie;
}

/// The published SO(2) family with free parameters a1, a2, written out by hand.
inline Expr so2_lagrangian() {
    const Expr x1 = field("X1"), x2 = field("X2"), v1 = jet("X1", "g"), v2 = jet("X2", "g");
    return param(1) * (x1 * v1 + x2 * v2) + param(2) * (x2 * v1 + x2 * x2 - x1 * v2 + x1 * x1);
}

/// Multipliers of the published affine-line family, indexed [k][alpha][s].
/// The four arbitrary functions of X2' are passed in the order they weight
/// X1'_g2 - 1 and X2'_g1, X2'_g2 in L1, then the single function in L2.
inline solver::Multipliers affine_multipliers(const Expr& p1, const Expr& p2, const Expr& p3, const Expr& p4) {
    const Expr x1 = field("X1"), g1 = gp("g1");
    solver::Multipliers lam(2, std::vector<std::vector<Expr>>(2, std::vector<Expr>(2, Expr(0))));
    lam[0][0][1] = p1;
    lam[0][1][0] = p2;
    lam[0][1][1] = p3;
    lam[1][0][0] = p4;
    lam[1][0][1] = -(x1 / g1) * p4;
    return lam;
}

}  // namespace testing
