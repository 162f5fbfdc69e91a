#include <future>

#include "lagrforge/solver/multiplier.hpp"

namespace lagrforge::solver {

Expr lagrangian_component(const LieData& lie, const Multipliers& lambda, std::size_t k) {
    std::vector<Expr> terms;
    for (std::size_t a = 0; a < lie.n(); ++a)
        for (std::size_t s = 0; s < lie.r(); ++s) terms.push_back(lambda[k][a][s] * lie.phi[a][s]);
    return sym::canonicalize(Expr::add(std::move(terms)));
}

Expr total_derivative(const LieData& lie, const Expr& f, std::size_t i) {
    for (const auto& s : sym::free_symbols(f))
        if (lie.vars.is_jet(s))
            throw SecondOrderJet("total derivative of an expression containing the jet " + s.name +
                                 " would need second-order jets");
    std::vector<Expr> terms{sym::differentiate(f, lie.spec.params[i])};
    for (std::size_t b = 0; b < lie.n(); ++b) {
        const Expr df = sym::differentiate(f, lie.vars.field[b]);
        if (!df.is_zero()) terms.push_back(df * Expr(lie.vars.jet[b][i]));
    }
    return sym::canonicalize(Expr::add(std::move(terms)));
}

Expr euler_lagrange(const LieData& lie, const Expr& L, std::size_t alpha) {
    std::vector<Expr> terms{sym::differentiate(L, lie.vars.field[alpha])};
    for (std::size_t i = 0; i < lie.r(); ++i) {
        const Expr momentum = sym::differentiate(L, lie.vars.jet[alpha][i]);
        if (momentum.is_zero()) continue;
        terms.push_back(-total_derivative(lie, momentum, i));
    }
    return sym::canonicalize(Expr::add(std::move(terms)));
}

Expr weak_el_residual(const LieData& lie, const Multipliers& lambda, std::size_t k, std::size_t alpha) {
    for (std::size_t a = 0; a < lie.n(); ++a)
        for (std::size_t s = 0; s < lie.r(); ++s)
            for (const auto& sy : sym::free_symbols(lambda[k][a][s]))
                if (lie.vars.is_jet(sy))
                    throw SecondOrderJet("multiplier depends on the jet " + sy.name);
    const Expr L = lagrangian_component(lie, lambda, k);
    return sym::substitute(euler_lagrange(lie, L, alpha), lie.onshell);
}

std::vector<Expr> weak_el_residuals(const LieData& lie, const Multipliers& lambda) {
    std::vector<std::future<Expr>> jobs;
    for (std::size_t k = 0; k < lie.r(); ++k)
        for (std::size_t a = 0; a < lie.n(); ++a)
            jobs.push_back(std::async(std::launch::async,
                                      [&lie, &lambda, k, a] { return weak_el_residual(lie, lambda, k, a); }));
    std::vector<Expr> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace lagrforge::solver
