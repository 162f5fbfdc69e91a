#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "lagrforge/symexpr/expr.hpp"

namespace lagrforge::sym {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
inline constexpr double kDefaultSingularGuard = 1e-3;
inline constexpr double kDefaultEqualityTol = 1e-9;
inline constexpr int kDefaultEqualitySamples = 64;
inline constexpr int kMaxRejections = 1000;

using Env = std::map<Symbol, double>;

class UnboundSymbol : public std::runtime_error {
public:
    explicit UnboundSymbol(const std::string& name) : std::runtime_error("unbound symbol: " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class NearSingularEvaluation : public std::runtime_error {
public:
    explicit NearSingularEvaluation(double denominator)
        : std::runtime_error("near-singular evaluation: denominator " + std::to_string(denominator)) {}
};

/// IEEE double evaluation. Any negative power of a value with magnitude below
/// `guard` raises NearSingularEvaluation.
double eval_numeric(const Expr& e, const Env& env, double guard = kDefaultSingularGuard);

enum class Equality { ProvedEqual, ProvedUnequal, NumericallyEqual };
const char* equality_name(Equality v);

/// Outcome of sampling an expression that is expected to vanish.
struct SampleReport {
    bool vanishes = false;       ///< every accepted sample within tolerance
    double max_residual = 0.0;   ///< largest |value| seen
    int accepted = 0;
    int rejected = 0;
    std::optional<Env> witness;  ///< first point above tolerance
    std::string diagnostic;      ///< set when sampling gave up
};

struct SampleOptions {
    int samples = kDefaultEqualitySamples;
    std::uint64_t seed = kDefaultSeed;
    double tol = kDefaultEqualityTol;
    double lo = -2.0;  ///< symbols are drawn uniformly from [lo, hi]
    double hi = 2.0;
    double guard = kDefaultSingularGuard;
};

/// Evaluates `e` at seeded random points; points tripping the singularity
/// guard are redrawn, giving up after kMaxRejections.
SampleReport sample_vanishing(const Expr& e, const SampleOptions& opts = {});

struct EqualityResult {
    Equality verdict = Equality::ProvedUnequal;
    SampleReport sampling;  ///< empty when proved symbolically
};

/// ProvedEqual iff the canonical forms coincide; otherwise decided by sampling
/// e1 - e2.
EqualityResult compare_exprs(const Expr& e1, const Expr& e2, const SampleOptions& opts = {});
Equality equals(const Expr& e1, const Expr& e2, const SampleOptions& opts = {});

}  // namespace lagrforge::sym
