#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagrforge/lie/lie_data.hpp"

namespace lagrforge::solver {

using lie::LieData;
using sym::Expr;
using sym::Rational;
using sym::Symbol;

class BasisTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonlinearInUnknowns : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SecondOrderJet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// lambda[k][alpha][s] weights constraint phi^alpha_s inside component L_k.
using Multipliers = std::vector<std::vector<std::vector<Expr>>>;

// ---------------------------------------------------------------- ansatz

struct AnsatzConfig {
    int deg_x = 1;      ///< max total degree in the field variables
    int min_deg_x = 0;  ///< min total degree (1 gives the linear-part-only ansatz)
    int deg_g_min = 0;  ///< Laurent exponent range for every group parameter
    int deg_g_max = 0;
    std::size_t max_unknowns = 5000;
};

struct MultiplierAnsatz {
    AnsatzConfig config;
    std::vector<Expr> basis;       ///< canonical monomials B_m in field variables and parameters
    std::vector<Symbol> unknowns;  ///< ordered by (k, alpha, s, m)
    Multipliers lambda;            ///< sum_m c_{k alpha s, m} B_m

    std::size_t unknown_index(std::size_t k, std::size_t alpha, std::size_t s, std::size_t m) const;
};

/// Throws BasisTooLarge when r*n*r*|basis| exceeds config.max_unknowns and
/// std::invalid_argument for an inconsistent degree configuration.
MultiplierAnsatz build_ansatz(const LieData& lie, const AnsatzConfig& config);

/// Coordinates of explicit multipliers in the ansatz basis; nullopt when some
/// multiplier lies outside the span of the basis.
std::optional<std::vector<Rational>> ansatz_coordinates(const MultiplierAnsatz& ansatz, const Multipliers& lambda);

// ------------------------------------------------------------- residuals

/// L_k = sum_{alpha,s} lambda[k][alpha][s] * phi^alpha_s (canonical).
Expr lagrangian_component(const LieData& lie, const Multipliers& lambda, std::size_t k);

/// Total derivative d/dg^i of a jet-free expression: the explicit partial plus
/// the chain-rule terms (df/dX'^b) X'^b_i. Throws SecondOrderJet when `f`
/// contains jet variables.
Expr total_derivative(const LieData& lie, const Expr& f, std::size_t i);

/// dL/dX'^alpha - sum_i d/dg^i (dL/dX'^alpha_i), without any on-shell
/// substitution. `L` must be affine-linear in the jets.
Expr euler_lagrange(const LieData& lie, const Expr& L, std::size_t alpha);

/// Euler-Lagrange expression of L_k with jets replaced by their on-shell
/// values: the weak condition, jet-free and linear in ansatz unknowns.
Expr weak_el_residual(const LieData& lie, const Multipliers& lambda, std::size_t k, std::size_t alpha);

/// All residuals in (k, alpha) order; pairs are evaluated concurrently.
std::vector<Expr> weak_el_residuals(const LieData& lie, const Multipliers& lambda);

// --------------------------------------------------------- linear system

struct RowTag {
    std::size_t k = 0;      ///< component (0-based)
    std::size_t alpha = 0;  ///< field variable (0-based)
    std::string monomial;   ///< monomial whose coefficient produced the row
};

struct LinearSystem {
    std::vector<Symbol> unknowns;
    std::vector<std::vector<Rational>> rows;
    std::vector<RowTag> tags;

    std::size_t cols() const { return unknowns.size(); }
    /// Row-wise product with `v`; all zero iff v solves the system.
    bool satisfied_by(const std::vector<Rational>& v) const;
    /// Keeps only the given columns (other unknowns set to zero) and drops rows
    /// that become identically zero.
    LinearSystem restricted_to(const std::vector<std::size_t>& columns) const;
};

/// Clears each residual's denominator, expands, and turns the coefficient of
/// every monomial in the non-unknown atoms into one row. `tags[i]` gives the
/// (k, alpha) of residual i. Throws NonlinearInUnknowns.
LinearSystem collect_system(const std::vector<Expr>& residuals, const std::vector<RowTag>& tags,
                            const std::vector<Symbol>& unknowns);

struct Nullspace {
    std::vector<std::vector<Rational>> basis;  ///< one vector per free column
    std::vector<std::size_t> pivot_columns;
    std::vector<std::size_t> free_columns;     ///< ascending
    std::size_t rank() const { return pivot_columns.size(); }
    std::size_t nullity() const { return basis.size(); }
};

/// Fraction-free elimination over the integers (rows scaled to primitive
/// integer vectors). Pivots are taken from the last column backwards, so the
/// leading unknowns stay free; each basis vector has 1 in its free column.
Nullspace nullspace(const LinearSystem& system);

// -------------------------------------------------------------- families

struct LagrangianFamily {
    std::vector<Symbol> unknowns;              ///< empty for hand-built families
    std::vector<std::vector<Rational>> basis;  ///< nullspace basis in unknown coordinates
    std::vector<Symbol> free_params;           ///< a1 ... ad
    Multipliers multipliers;                   ///< linear in the free parameters
    std::vector<Expr> components;              ///< L_k

    bool empty() const;
    /// Components and multipliers with some free parameters fixed.
    LagrangianFamily specialized(const sym::Substitution& values) const;
};

/// Free parameter a<d> (1-based).
Symbol free_parameter(std::size_t d);

LagrangianFamily assemble_family(const LieData& lie, const MultiplierAnsatz& ansatz, const Nullspace& ns);

/// Family with no free parameters built from explicit multipliers.
LagrangianFamily family_from_multipliers(const LieData& lie, const Multipliers& lambda,
                                         std::vector<Symbol> free_params = {});

struct SolveResult {
    MultiplierAnsatz ansatz;
    std::vector<Expr> residuals;
    LinearSystem system;
    Nullspace null;
    LagrangianFamily family;
    bool sound = false;  ///< every basis vector re-substituted gives canonical 0
};

SolveResult solve(const LieData& lie, const AnsatzConfig& config);

/// Every basis vector zeroes every residual exactly.
bool check_soundness(const std::vector<Expr>& residuals, const std::vector<Symbol>& unknowns,
                     const std::vector<std::vector<Rational>>& basis);

}  // namespace lagrforge::solver
