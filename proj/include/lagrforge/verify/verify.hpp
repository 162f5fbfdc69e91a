#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagrforge/solver/multiplier.hpp"
#include "lagrforge/symexpr/numeric.hpp"

namespace lagrforge::verify {

using lie::LieData;
using solver::LagrangianFamily;
using sym::Expr;
using sym::Rational;
using sym::Symbol;

class ShapeMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Verdict { ProvedEqual, NumericallyEqual, Failed };
const char* verdict_name(Verdict v);
Verdict to_verdict(sym::Equality e);

/// Full Euler-Lagrange expressions of one component, one per field variable.
/// Total g-derivatives introduce jets through the chain rule; nothing is
/// substituted. Each result is linear in the jets.
std::vector<Expr> strong_el(const LieData& lie, const Expr& L);

struct ForwardEntry {
    std::size_t k = 0;
    std::size_t alpha = 0;
    Expr expression;  ///< strong E-L expression
    Expr on_shell;    ///< after substituting the Lie right-hand sides
    Verdict verdict = Verdict::Failed;
    double max_residual = 0.0;
    std::optional<sym::Env> witness;
};

/// Strong E-L expressions of every component vanish on solutions of the Lie
/// equations (free parameters kept symbolic).
std::vector<ForwardEntry> forward_check(const LagrangianFamily& family, const LieData& lie,
                                        const sym::SampleOptions& opts = {});

struct JetValue {
    Symbol jet;
    Expr value;     ///< solved from the E-L system
    Expr expected;  ///< Lie right-hand side
    Verdict verdict = Verdict::Failed;
    std::optional<sym::Env> witness;
};

struct ConverseResult {
    enum class Status { Match, Underdetermined, Mismatch };
    Status status = Status::Mismatch;
    sym::Substitution params;       ///< values used for the free parameters
    std::vector<Expr> equations;    ///< E-L expressions after specialization, (k, alpha) order
    std::vector<JetValue> solved;   ///< jets fixed by the system
    std::vector<Symbol> unsolved;   ///< jets left undetermined
    std::string diagnostic;
};
const char* converse_status_name(ConverseResult::Status s);

/// Solves the jet-linear E-L system of all components by exact elimination
/// over rational functions in (X', g) and compares with the Lie equations.
/// Free parameters missing from `params` stay symbolic.
ConverseResult converse_check(const LagrangianFamily& family, const LieData& lie, const sym::Substitution& params,
                              const sym::SampleOptions& opts = {});

struct Specialization {
    std::string label;  ///< "basis a1", "generic", ...
    sym::Substitution params;
    ConverseResult::Status status = ConverseResult::Status::Mismatch;
    bool degenerate() const { return status != ConverseResult::Status::Match; }
};

struct DegeneracyScan {
    bool performed = false;
    std::string note;
    std::vector<Specialization> tried;
    std::vector<Specialization> degenerate() const;
};

inline constexpr std::size_t kMaxScanParams = 4;

/// Runs converse_check for each basis vector alone and for one seeded generic
/// rational combination.
DegeneracyScan degeneracy_scan(const LagrangianFamily& family, const LieData& lie,
                               std::uint64_t seed = sym::kDefaultSeed, const sym::SampleOptions& opts = {});

/// Exact rational values for every free parameter not already in `given`,
/// drawn from a seeded generator (nonzero numerators).
sym::Substitution complete_params(const LagrangianFamily& family, const sym::Substitution& given, std::uint64_t seed);

struct KineticCheck {
    Expr momentum;         ///< l = X'^1 X'^1_g... on shell
    Expr twice_energy;     ///< 2T on shell
    sym::Equality verdict = sym::Equality::ProvedUnequal;
    std::optional<Expr> specialized;  ///< the family at a1 = 0, a2 = -1/2
};

/// On-shell identity between the kinetic momentum about the origin and twice
/// the kinetic energy; only for one-parameter actions on the plane.
KineticCheck kinetic_identity_check(const LieData& lie, const LagrangianFamily* family = nullptr,
                                    const sym::SampleOptions& opts = {});

struct OrbitOptions {
    std::vector<double> x0;
    double g_end = 0.0;
    double step = 1e-3;
};

struct OrbitCheck {
    double max_deviation = 0.0;
    std::size_t steps = 0;
    double g_start = 0.0;
    std::vector<double> final_state;
};

/// Integrates the solved jet ODE dX'/dg = f(X', g) from X0 at g = e with the
/// classical fourth-order Runge-Kutta scheme and compares with S_g X0 on the
/// step grid. Requires r = 1 and a Match from converse_check.
OrbitCheck numeric_orbit_check(const LieData& lie, const ConverseResult& converse, const OrbitOptions& opts);

struct VerifyOptions {
    sym::Substitution params;
    std::uint64_t seed = sym::kDefaultSeed;
    int samples = sym::kDefaultEqualitySamples;
    double tol = sym::kDefaultEqualityTol;
    bool numeric = false;
    OrbitOptions orbit;
    double orbit_tol = 1e-6;
};

struct VerificationReport {
    std::vector<ForwardEntry> forward;
    ConverseResult converse;
    std::vector<Symbol> generated_params;  ///< parameters filled in by the seeded generator
    DegeneracyScan degeneracy;
    std::optional<OrbitCheck> numeric;
    std::optional<KineticCheck> kinetic;
    std::vector<std::string> notes;
    double orbit_tol = 1e-6;

    bool failed() const;
};

VerificationReport verify_family(const LieData& lie, const LagrangianFamily& family, const VerifyOptions& opts);

}  // namespace lagrforge::verify
