#include "lagrforge/verify/verify.hpp"

namespace lagrforge::verify {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::ProvedEqual: return "ProvedEqual";
    case Verdict::NumericallyEqual: return "NumericallyEqual";
    case Verdict::Failed: return "Failed";
    }
    return "?";
}

Verdict to_verdict(sym::Equality e) {
    switch (e) {
    case sym::Equality::ProvedEqual: return Verdict::ProvedEqual;
    case sym::Equality::NumericallyEqual: return Verdict::NumericallyEqual;
    case sym::Equality::ProvedUnequal: return Verdict::Failed;
    }
    return Verdict::Failed;
}

std::vector<Expr> strong_el(const LieData& lie, const Expr& L) {
    std::vector<Expr> out;
    for (std::size_t a = 0; a < lie.n(); ++a) out.push_back(solver::euler_lagrange(lie, L, a));
    return out;
}

std::vector<ForwardEntry> forward_check(const LagrangianFamily& family, const LieData& lie,
                                        const sym::SampleOptions& opts) {
    std::vector<ForwardEntry> out;
    for (std::size_t k = 0; k < family.components.size(); ++k) {
        const auto exprs = strong_el(lie, family.components[k]);
        for (std::size_t a = 0; a < exprs.size(); ++a) {
            ForwardEntry e;
            e.k = k;
            e.alpha = a;
            e.expression = exprs[a];
            e.on_shell = sym::substitute(exprs[a], lie.onshell);
            const auto cmp = sym::compare_exprs(e.on_shell, Expr(0), opts);
            e.verdict = to_verdict(cmp.verdict);
            e.max_residual = cmp.sampling.max_residual;
            e.witness = cmp.sampling.witness;
            out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace lagrforge::verify
