#include <algorithm>

#include "lagrforge/dsl/group_spec.hpp"
#include "lagrforge/symexpr/calculus.hpp"

namespace lagrforge::dsl {

const char* axiom_outcome_name(AxiomCheck::Outcome o) {
    switch (o) {
    case AxiomCheck::Outcome::Symbolic: return "Symbolic";
    case AxiomCheck::Outcome::Numeric: return "Numeric";
    case AxiomCheck::Outcome::Failed: return "Failed";
    }
    return "?";
}

bool AxiomReport::ok() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const AxiomCheck& c) { return c.outcome == AxiomCheck::Outcome::Failed; });
}

namespace {

using Pairs = std::vector<std::pair<Expr, Expr>>;

AxiomCheck decide(std::string name, std::string statement, const Pairs& sides, int samples, std::uint64_t seed,
                  double tol) {
    AxiomCheck check;
    check.name = std::move(name);
    check.statement = std::move(statement);
    sym::SampleOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    opts.tol = tol;
    bool symbolic = true;
    for (const auto& [lhs, rhs] : sides) {
        const Expr diff = sym::canonicalize(lhs - rhs);
        if (diff.is_zero()) continue;
        symbolic = false;
        const auto rep = sym::sample_vanishing(diff, opts);
        check.max_residual = std::max(check.max_residual, rep.max_residual);
        if (!rep.vanishes && check.outcome != AxiomCheck::Outcome::Failed) {
            check.outcome = AxiomCheck::Outcome::Failed;
            check.witness = rep.witness;
            check.diagnostic = rep.diagnostic.empty()
                                   ? "residual " + sym::to_infix(diff) + " does not vanish"
                                   : rep.diagnostic;
        }
    }
    if (symbolic) check.outcome = AxiomCheck::Outcome::Symbolic;
    else if (check.outcome != AxiomCheck::Outcome::Failed) check.outcome = AxiomCheck::Outcome::Numeric;
    return check;
}

}  // namespace

AxiomReport validate_axioms(const GroupActionSpec& spec, int samples, std::uint64_t seed, double tol) {
    const std::size_t r = spec.r();
    const std::size_t n = spec.n();
    AxiomReport report;

    sym::Substitution at_identity, params_to_lhs, params_to_rhs, params_to_product;
    for (std::size_t i = 0; i < r; ++i) {
        at_identity[spec.params[i]] = spec.identity[i];
        params_to_lhs[spec.params[i]] = Expr(spec.lhs(i));
        params_to_rhs[spec.params[i]] = Expr(spec.rhs(i));
        params_to_product[spec.params[i]] = spec.multiply[i];
    }

    // A coordinate whose action component is a bare constant lives on that level set.
    sym::Substitution pinned;
    std::string pinned_note;
    for (std::size_t a = 0; a < n; ++a) {
        const Expr c = sym::canonicalize(spec.action[a]);
        if (!c.is_const()) continue;
        pinned[spec.coords[a]] = c;
        pinned_note += (pinned_note.empty() ? "" : ", ") + spec.coords[a].name + " = " + sym::to_infix(c);
    }
    const auto pin = [&](Pairs sides) {
        for (auto& [l, r] : sides) {
            l = sym::substitute(l, pinned);
            r = sym::substitute(r, pinned);
        }
        return sides;
    };
    const auto annotate = [&](AxiomCheck check) {
        if (!pinned_note.empty() && check.diagnostic.empty())
            check.diagnostic = "checked with constant coordinates " + pinned_note;
        return check;
    };

    Pairs identity_action;
    for (std::size_t a = 0; a < n; ++a)
        identity_action.emplace_back(sym::substitute(spec.action[a], at_identity), Expr(spec.coords[a]));
    report.checks.push_back(
        annotate(decide("identity-action", "S_e X = X", pin(identity_action), samples, seed, tol)));

    sym::Substitution with_inverse, left_identity;
    for (std::size_t i = 0; i < r; ++i) {
        with_inverse[spec.lhs(i)] = Expr(spec.params[i]);
        with_inverse[spec.rhs(i)] = spec.inverse[i];
        left_identity[spec.lhs(i)] = spec.identity[i];
        left_identity[spec.rhs(i)] = Expr(spec.params[i]);
    }
    Pairs inverse;
    for (std::size_t i = 0; i < r; ++i)
        inverse.emplace_back(sym::substitute(spec.multiply[i], with_inverse), spec.identity[i]);
    report.checks.push_back(decide("inverse", "g g^-1 = e", inverse, samples, seed, tol));

    sym::Substitution outer = params_to_lhs;
    for (std::size_t a = 0; a < n; ++a)
        outer[spec.coords[a]] = sym::substitute(spec.action[a], params_to_rhs);
    Pairs composition;
    for (std::size_t a = 0; a < n; ++a)
        composition.emplace_back(sym::substitute(spec.action[a], outer),
                                 sym::substitute(spec.action[a], params_to_product));
    report.checks.push_back(
        annotate(decide("composition", "S_g S_h X = S_gh X", pin(composition), samples, seed, tol)));

    Pairs left;
    for (std::size_t i = 0; i < r; ++i)
        left.emplace_back(sym::substitute(spec.multiply[i], left_identity), Expr(spec.params[i]));
    report.checks.push_back(decide("left-identity", "e g = g", left, samples, seed, tol));
    return report;
}

}  // namespace lagrforge::dsl
