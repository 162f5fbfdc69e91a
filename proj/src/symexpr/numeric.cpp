#include "lagrforge/symexpr/numeric.hpp"

#include <cmath>
#include <random>

#include "lagrforge/symexpr/calculus.hpp"

namespace lagrforge::sym {

double eval_numeric(const Expr& e, const Env& env, double guard) {
    switch (e.kind()) {
    case Kind::Const:
        return e.value().get_d();
    case Kind::Sym: {
        auto it = env.find(e.sym());
        if (it == env.end()) throw UnboundSymbol(e.sym().name);
        return it->second;
    }
    case Kind::Add: {
        double s = 0.0;
        for (const auto& op : e.operands()) s += eval_numeric(op, env, guard);
        return s;
    }
    case Kind::Mul: {
        double p = 1.0;
        for (const auto& op : e.operands()) p *= eval_numeric(op, env, guard);
        return p;
    }
    case Kind::Pow: {
        const double b = eval_numeric(e.base(), env, guard);
        const int n = e.exponent();
        if (n < 0 && std::fabs(b) < guard) throw NearSingularEvaluation(b);
        return std::pow(b, n);
    }
    case Kind::Sin:
        return std::sin(eval_numeric(e.arg(), env, guard));
    case Kind::Cos:
        return std::cos(eval_numeric(e.arg(), env, guard));
    }
    return 0.0;
}

const char* equality_name(Equality v) {
    switch (v) {
    case Equality::ProvedEqual: return "ProvedEqual";
    case Equality::ProvedUnequal: return "ProvedUnequal";
    case Equality::NumericallyEqual: return "NumericallyEqual";
    }
    return "?";
}

SampleReport sample_vanishing(const Expr& e, const SampleOptions& opts) {
    SampleReport report;
    const auto symbols = free_symbols(e);
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> dist(opts.lo, opts.hi);
    bool all_within = true;
    while (report.accepted < opts.samples) {
        Env env;
        for (const auto& s : symbols) env[s] = dist(rng);
        double value;
        try {
            value = eval_numeric(e, env, opts.guard);
        } catch (const NearSingularEvaluation&) {
            if (++report.rejected >= kMaxRejections) {
                report.diagnostic = "sampling aborted after " + std::to_string(kMaxRejections) +
                                    " points rejected by the singularity guard";
                report.vanishes = false;
                return report;
            }
            continue;
        }
        ++report.accepted;
        const double mag = std::isfinite(value) ? std::fabs(value) : HUGE_VAL;
        if (mag > report.max_residual) report.max_residual = mag;
        if (mag > opts.tol && all_within) {
            all_within = false;
            report.witness = env;
        }
    }
    report.vanishes = all_within;
    return report;
}

EqualityResult compare_exprs(const Expr& e1, const Expr& e2, const SampleOptions& opts) {
    EqualityResult out;
    const Expr c1 = canonicalize(e1);
    const Expr c2 = canonicalize(e2);
    if (identical(c1, c2)) {
        out.verdict = Equality::ProvedEqual;
        return out;
    }
    out.sampling = sample_vanishing(e1 - e2, opts);
    out.verdict = out.sampling.vanishes ? Equality::NumericallyEqual : Equality::ProvedUnequal;
    return out;
}

Equality equals(const Expr& e1, const Expr& e2, const SampleOptions& opts) {
    return compare_exprs(e1, e2, opts).verdict;
}

}  // namespace lagrforge::sym
