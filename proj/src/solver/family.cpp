#include "lagrforge/solver/multiplier.hpp"

namespace lagrforge::solver {

Symbol free_parameter(std::size_t d) {
    return Symbol{"a" + std::to_string(d), sym::Role::FreeParam, -1, static_cast<int>(d) - 1};
}

bool LagrangianFamily::empty() const {
    for (const auto& L : components)
        if (!L.is_zero()) return false;
    return true;
}

LagrangianFamily LagrangianFamily::specialized(const sym::Substitution& values) const {
    LagrangianFamily out = *this;
    out.free_params.clear();
    for (const auto& p : free_params)
        if (!values.count(p)) out.free_params.push_back(p);
    for (auto& byk : out.multipliers)
        for (auto& bya : byk)
            for (auto& l : bya) l = sym::substitute(l, values);
    for (auto& L : out.components) L = sym::substitute(L, values);
    return out;
}

LagrangianFamily assemble_family(const LieData& lie, const MultiplierAnsatz& ansatz, const Nullspace& ns) {
    LagrangianFamily fam;
    fam.unknowns = ansatz.unknowns;
    fam.basis = ns.basis;
    for (std::size_t d = 0; d < ns.basis.size(); ++d) fam.free_params.push_back(free_parameter(d + 1));

    sym::Substitution solution;
    for (std::size_t u = 0; u < ansatz.unknowns.size(); ++u) {
        std::vector<Expr> terms;
        for (std::size_t d = 0; d < ns.basis.size(); ++d)
            if (ns.basis[d][u] != 0) terms.push_back(Expr(ns.basis[d][u]) * Expr(fam.free_params[d]));
        solution[ansatz.unknowns[u]] = Expr::add(std::move(terms));
    }
    fam.multipliers = ansatz.lambda;
    for (auto& byk : fam.multipliers)
        for (auto& bya : byk)
            for (auto& l : bya) l = sym::substitute(l, solution);
    for (std::size_t k = 0; k < lie.r(); ++k) fam.components.push_back(lagrangian_component(lie, fam.multipliers, k));
    return fam;
}

LagrangianFamily family_from_multipliers(const LieData& lie, const Multipliers& lambda, std::vector<Symbol> free_params) {
    LagrangianFamily fam;
    fam.free_params = std::move(free_params);
    fam.multipliers = lambda;
    for (auto& byk : fam.multipliers)
        for (auto& bya : byk)
            for (auto& l : bya) l = sym::canonicalize(l);
    for (std::size_t k = 0; k < lie.r(); ++k) fam.components.push_back(lagrangian_component(lie, fam.multipliers, k));
    return fam;
}

bool check_soundness(const std::vector<Expr>& residuals, const std::vector<Symbol>& unknowns,
                     const std::vector<std::vector<Rational>>& basis) {
    for (const auto& v : basis) {
        sym::Substitution values;
        for (std::size_t u = 0; u < unknowns.size(); ++u) values[unknowns[u]] = Expr(v[u]);
        for (const auto& res : residuals)
            if (!sym::substitute(res, values).is_zero()) return false;
    }
    return true;
}

SolveResult solve(const LieData& lie, const AnsatzConfig& config) {
    SolveResult out;
    out.ansatz = build_ansatz(lie, config);
    out.residuals = weak_el_residuals(lie, out.ansatz.lambda);
    std::vector<RowTag> tags;
    for (std::size_t k = 0; k < lie.r(); ++k)
        for (std::size_t a = 0; a < lie.n(); ++a) tags.push_back(RowTag{k, a, {}});
    out.system = collect_system(out.residuals, tags, out.ansatz.unknowns);
    out.null = nullspace(out.system);
    out.sound = check_soundness(out.residuals, out.ansatz.unknowns, out.null.basis);
    out.family = assemble_family(lie, out.ansatz, out.null);
    return out;
}

}  // namespace lagrforge::solver
