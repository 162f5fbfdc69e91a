#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lagrforge/dsl/group_spec.hpp"
#include "lagrforge/symexpr/calculus.hpp"

namespace lagrforge::lie {

using dsl::GroupActionSpec;
using sym::Expr;
using sym::Symbol;

/// Rows-by-columns matrix of expressions.
using ExprMatrix = std::vector<std::vector<Expr>>;

class ResidualCoordinates : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConventionViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Field variables X'^alpha (named "<coord>'") and jet variables
/// X'^alpha_i = dX'^alpha/dg^i (named "<coord>'_<param>").
struct JetSpace {
    std::vector<Symbol> field;             ///< [alpha]
    std::vector<std::vector<Symbol>> jet;  ///< [alpha][i]

    static JetSpace for_spec(const GroupActionSpec& spec);
    std::vector<Symbol> all_jets() const;  ///< alpha-major order
    bool is_jet(const Symbol& s) const;
};

struct LieData {
    GroupActionSpec spec;
    JetSpace vars;
    ExprMatrix S;    ///< [alpha][j]: S^alpha_j(X), functions of base coordinates
    ExprMatrix u;    ///< [i][j]: u^i_j(g)
    ExprMatrix phi;  ///< [alpha][j]: phi^alpha_j = X'^alpha_j - u^s_j(g) S^alpha_s(X')
    sym::Substitution onshell;  ///< X'^alpha_j -> u^s_j(g) S^alpha_s(X')
    std::vector<std::string> notes;

    std::size_t r() const { return spec.r(); }
    std::size_t n() const { return spec.n(); }
};

/// S^alpha_j(X) = d(S_g X)^alpha/dg^j at g = e.
ExprMatrix infinitesimal_coefficients(const GroupActionSpec& spec);

/// u^i_j(g) = d(gh)^i/dg^j with h then set to g^-1.
ExprMatrix auxiliary_functions(const GroupActionSpec& spec);

/// Derives S, u, the constraints and the on-shell jet map, and checks that
/// every constraint vanishes on the actual action (ConventionViolation if not).
LieData constraints(const GroupActionSpec& spec);

/// Field variables -> action formulas, jets -> their g-derivatives.
sym::Substitution action_substitution(const LieData& lie);

/// phi^alpha_j evaluated on the action (expected to be zero).
Expr constraint_on_action(const LieData& lie, std::size_t alpha, std::size_t j);

}  // namespace lagrforge::lie
