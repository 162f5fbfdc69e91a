#include <cmath>
#include <stdexcept>

#include "lagrforge/verify/verify.hpp"

namespace lagrforge::verify {

OrbitCheck numeric_orbit_check(const LieData& lie, const ConverseResult& converse, const OrbitOptions& opts) {
    if (lie.r() != 1) throw ShapeMismatch("numeric orbit check needs a one-parameter group");
    if (converse.status != ConverseResult::Status::Match)
        throw std::invalid_argument("numeric orbit check needs a converse Match, got " +
                                    std::string(converse_status_name(converse.status)));
    if (!(opts.step > 0)) throw std::invalid_argument("step must be positive");
    const std::size_t n = lie.n();
    if (opts.x0.size() != n)
        throw std::invalid_argument("x0 has " + std::to_string(opts.x0.size()) + " entries, expected " +
                                    std::to_string(n));

    const Symbol& g = lie.spec.params[0];
    std::vector<Expr> rhs(n);
    for (const auto& jv : converse.solved) rhs.at(static_cast<std::size_t>(jv.jet.alpha)) = jv.value;

    auto field = [&](double gv, const std::vector<double>& x) {
        sym::Env env{{g, gv}};
        for (std::size_t a = 0; a < n; ++a) env[lie.vars.field[a]] = x[a];
        std::vector<double> dx(n);
        for (std::size_t a = 0; a < n; ++a) dx[a] = sym::eval_numeric(rhs[a], env);
        return dx;
    };
    auto exact = [&](double gv) {
        sym::Env env{{g, gv}};
        for (std::size_t a = 0; a < n; ++a) env[lie.spec.coords[a]] = opts.x0[a];
        std::vector<double> x(n);
        for (std::size_t a = 0; a < n; ++a) x[a] = sym::eval_numeric(lie.spec.action[a], env);
        return x;
    };
    auto deviation = [&](const std::vector<double>& x, double gv) {
        const auto ref = exact(gv);
        double s = 0;
        for (std::size_t a = 0; a < n; ++a) s += (x[a] - ref[a]) * (x[a] - ref[a]);
        return std::sqrt(s);
    };

    OrbitCheck out;
    out.g_start = sym::eval_numeric(lie.spec.identity[0], {});
    const double span = opts.g_end - out.g_start;
    const double dir = span < 0 ? -1.0 : 1.0;
    const auto steps = static_cast<std::size_t>(std::ceil(std::abs(span) / opts.step - 1e-9));

    std::vector<double> x = opts.x0;
    double gv = out.g_start;
    out.max_deviation = deviation(x, gv);
    auto axpy = [n](const std::vector<double>& base, double h, const std::vector<double>& k) {
        std::vector<double> r(n);
        for (std::size_t a = 0; a < n; ++a) r[a] = base[a] + h * k[a];
        return r;
    };
    for (std::size_t s = 0; s < steps; ++s) {
        const double next = s + 1 == steps ? opts.g_end : out.g_start + dir * opts.step * static_cast<double>(s + 1);
        const double h = next - gv;
        const auto k1 = field(gv, x);
        const auto k2 = field(gv + h / 2, axpy(x, h / 2, k1));
        const auto k3 = field(gv + h / 2, axpy(x, h / 2, k2));
        const auto k4 = field(gv + h, axpy(x, h, k3));
        for (std::size_t a = 0; a < n; ++a) x[a] += h / 6 * (k1[a] + 2 * k2[a] + 2 * k3[a] + k4[a]);
        gv = next;
        out.max_deviation = std::max(out.max_deviation, deviation(x, gv));
    }
    out.steps = steps;
    out.final_state = x;
    return out;
}

bool VerificationReport::failed() const {
    for (const auto& f : forward)
        if (f.verdict == Verdict::Failed) return true;
    if (converse.status != ConverseResult::Status::Match) return true;
    if (numeric && !(numeric->max_deviation <= orbit_tol)) return true;
    return false;
}

VerificationReport verify_family(const LieData& lie, const LagrangianFamily& family, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.orbit_tol = opts.orbit_tol;
    sym::SampleOptions so;
    so.samples = opts.samples;
    so.seed = opts.seed;
    so.tol = opts.tol;

    rep.forward = forward_check(family, lie, so);
    const auto params = complete_params(family, opts.params, opts.seed);
    for (const auto& p : family.free_params)
        if (!opts.params.count(p)) rep.generated_params.push_back(p);
    if (!rep.generated_params.empty())
        rep.notes.push_back("free parameters without a given value were set to seeded random rationals");
    for (const auto& [s, v] : opts.params) {
        bool known = false;
        for (const auto& p : family.free_params) known = known || p == s;
        if (!known) throw std::invalid_argument("unknown free parameter " + s.name);
    }
    rep.converse = converse_check(family, lie, params, so);

    // Scan the family as given; with every parameter fixed by the caller, scan
    // the specialization itself.
    const auto scanned = opts.params.empty() ? family : family.specialized(opts.params);
    rep.degeneracy = degeneracy_scan(scanned, lie, opts.seed, so);

    if (lie.r() == 1 && lie.n() == 2) rep.kinetic = kinetic_identity_check(lie, &family, so);

    if (opts.numeric) {
        if (lie.r() != 1) {
            rep.notes.push_back("numeric orbit check skipped: the group has more than one parameter");
        } else if (rep.converse.status != ConverseResult::Status::Match) {
            rep.notes.push_back("numeric orbit check skipped: converse check did not match");
        } else {
            rep.numeric = numeric_orbit_check(lie, rep.converse, opts.orbit);
        }
    }
    return rep;
}

}  // namespace lagrforge::verify
