#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lagrforge/symexpr/expr.hpp"
#include "lagrforge/symexpr/numeric.hpp"

namespace lagrforge::dsl {

using sym::Expr;
using sym::Symbol;

struct SourcePos {
    int line = 1;
    int column = 1;
};

/// Parsed Lie transformation group: r parameters acting on n coordinates.
struct GroupActionSpec {
    std::string name;
    std::vector<Symbol> params;  ///< g^i, role GroupParam
    std::vector<Symbol> coords;  ///< X^alpha, role BaseCoord
    std::vector<Expr> identity;  ///< r constants
    std::vector<Expr> inverse;   ///< r formulas in params
    std::vector<Expr> multiply;  ///< r formulas in lhs.<param>, rhs.<param>
    std::vector<Expr> action;    ///< n formulas in params and coords
    std::map<std::string, SourcePos> clause_positions;

    std::size_t r() const { return params.size(); }
    std::size_t n() const { return coords.size(); }

    /// The `lhs.<param>` / `rhs.<param>` factor symbols used in `multiply`.
    Symbol lhs(std::size_t i) const;
    Symbol rhs(std::size_t i) const;
};

class DslError : public std::runtime_error {
public:
    enum class Kind { Syntax, UndeclaredSymbol, ArityMismatch, DuplicateClause, MissingClause };

    DslError(Kind kind, SourcePos pos, const std::string& message, std::vector<std::string> expected = {});

    Kind kind() const { return kind_; }
    SourcePos pos() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& detail() const { return detail_; }

private:
    Kind kind_;
    SourcePos pos_;
    std::string detail_;
    std::vector<std::string> expected_;
};

const char* dsl_error_kind_name(DslError::Kind kind);

/// Parses one `group NAME { ... }` definition. Formulas are canonicalized.
GroupActionSpec parse_group(std::string_view source);

/// Source text that parse_group() reads back to an identical spec.
std::string pretty_print(const GroupActionSpec& spec);

/// Structural identity of two parsed specs (names, symbols, formulas).
bool same_spec(const GroupActionSpec& a, const GroupActionSpec& b);

/// Source of a bundled group ("so2" or "affine1"); nullopt when unknown.
std::optional<std::string_view> bundled_group_source(std::string_view name);

// ----------------------------------------------------------------- axioms

struct AxiomCheck {
    enum class Outcome { Symbolic, Numeric, Failed };
    std::string name;       ///< "identity-action", "inverse", "composition", "left-identity"
    std::string statement;  ///< e.g. "S_e X = X"
    Outcome outcome = Outcome::Symbolic;
    double max_residual = 0.0;
    std::optional<sym::Env> witness;
    std::string diagnostic;
};

const char* axiom_outcome_name(AxiomCheck::Outcome o);

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool ok() const;
};

/// Checks S_e X = X, g g^-1 = e, S_g S_h = S_gh and e g = g: symbolically
/// first, then by seeded sampling.
AxiomReport validate_axioms(const GroupActionSpec& spec, int samples = 100, std::uint64_t seed = sym::kDefaultSeed,
                            double tol = sym::kDefaultEqualityTol);

}  // namespace lagrforge::dsl
