#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lagrforge/dsl/group_spec.hpp"
#include "lagrforge/lie/lie_data.hpp"
#include "lagrforge/solver/multiplier.hpp"
#include "lagrforge/verify/verify.hpp"

namespace lagrforge::report {

using json = nlohmann::json;  // std::map backed: keys come out sorted

json spec_json(const dsl::GroupActionSpec& spec);
json axioms_json(const dsl::AxiomReport& axioms);
json lie_json(const lie::LieData& lie);
json family_json(const solver::LagrangianFamily& family);
json solve_json(const solver::SolveResult& result);
json verify_json(const verify::VerificationReport& report);

std::string axioms_text(const dsl::AxiomReport& axioms);
std::string lie_text(const lie::LieData& lie);
std::string family_text(const solver::LagrangianFamily& family);
std::string solve_text(const solver::SolveResult& result);
std::string verify_text(const verify::VerificationReport& report);

/// Each component collected by free parameter:
/// L = a1 (...) + a2 (...) for one-parameter groups, L_k = ... otherwise.
std::string family_latex(const lie::LieData& lie, const solver::LagrangianFamily& family);
std::string lie_latex(const lie::LieData& lie);

/// Coefficient of each free parameter in an expression linear in them, plus
/// the parameter-free remainder (when nonzero) keyed by the empty string.
std::vector<std::pair<std::string, sym::Expr>> split_by_params(const sym::Expr& e,
                                                                const std::vector<sym::Symbol>& params);

}  // namespace lagrforge::report

namespace lagrforge::pipeline {

/// A path to a .grp file, or a bundled name ("so2", "affine1").
dsl::GroupActionSpec load_spec(const std::string& path_or_name);

/// Ansatz that reproduces the published families: so2 uses degree 1 with no
/// parameter powers, affine1 degree 1 with g-exponents in [-1, 0].
solver::AnsatzConfig example_config(const std::string& name);

/// Exact rationals "a1=1/2,a2=-3" for the given family's parameter names.
sym::Substitution parse_params(const std::string& text);

/// Decimal or fraction ("1/3", "-2", "0.25", "pi", "2*pi").
double parse_real(const std::string& text);

}  // namespace lagrforge::pipeline
