#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lagrforge/report/report.hpp"

namespace lagrforge::cli {

namespace {

using report::json;

struct RunConfig {
    std::string input;
    std::string format = "text";
    std::optional<int> deg_x, deg_g_min, deg_g_max;
    std::size_t max_unknowns = 5000;
    std::string params;
    bool numeric = false;
    std::string x0;
    std::string g_end = "2*pi";
    std::string step = "1e-3";
    int samples = sym::kDefaultEqualitySamples;
    std::optional<std::uint64_t> seed;
    double tol = sym::kDefaultEqualityTol;
    double orbit_tol = 1e-6;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t effective_seed(const RunConfig& cfg) {
    if (cfg.seed) return *cfg.seed;
    if (const char* env = std::getenv("LAGRFORGE_SEED")) {
        try {
            return std::stoull(env, nullptr, 0);
        } catch (const std::exception&) {
            throw InputError(std::string("LAGRFORGE_SEED is not an integer: ") + env);
        }
    }
    return sym::kDefaultSeed;
}

solver::AnsatzConfig ansatz_config(const RunConfig& cfg, const dsl::GroupActionSpec& spec) {
    auto c = pipeline::example_config(spec.name);
    if (cfg.deg_x) c.deg_x = *cfg.deg_x;
    if (cfg.deg_g_min) c.deg_g_min = *cfg.deg_g_min;
    if (cfg.deg_g_max) c.deg_g_max = *cfg.deg_g_max;
    c.max_unknowns = cfg.max_unknowns;
    return c;
}

verify::VerifyOptions verify_options(const RunConfig& cfg, const lie::LieData& lie) {
    verify::VerifyOptions o;
    o.params = pipeline::parse_params(cfg.params);
    o.seed = effective_seed(cfg);
    o.samples = cfg.samples;
    o.tol = cfg.tol;
    o.numeric = cfg.numeric;
    o.orbit_tol = cfg.orbit_tol;
    o.orbit.g_end = pipeline::parse_real(cfg.g_end);
    o.orbit.step = pipeline::parse_real(cfg.step);
    if (cfg.x0.empty()) {
        o.orbit.x0.assign(lie.n(), 0.0);
        if (!o.orbit.x0.empty()) o.orbit.x0[0] = 1.0;
    } else {
        std::stringstream ss(cfg.x0);
        std::string item;
        while (std::getline(ss, item, ',')) o.orbit.x0.push_back(pipeline::parse_real(item));
        if (o.orbit.x0.size() != lie.n())
            throw InputError("--x0 needs " + std::to_string(lie.n()) + " values, got " +
                             std::to_string(o.orbit.x0.size()));
    }
    if (!(o.orbit.step > 0)) throw InputError("--step must be positive");
    return o;
}

void add_input(CLI::App* cmd, RunConfig& cfg, const std::string& what) {
    cmd->add_option("input", cfg.input, what)->required();
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
}

void add_solve_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--deg-x", cfg.deg_x, "Max total degree of multipliers in the field variables (default 1)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--deg-g-min", cfg.deg_g_min, "Lowest exponent of each group parameter (default 0; -1 for affine1)");
    cmd->add_option("--deg-g-max", cfg.deg_g_max, "Highest exponent of each group parameter (default 0)");
    cmd->add_option("--max-unknowns", cfg.max_unknowns, "Refuse ansatzes with more unknowns")->capture_default_str();
}

void add_verify_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--params", cfg.params, "Free parameter values, e.g. a1=0,a2=1/2 (exact rationals)");
    cmd->add_flag("--numeric", cfg.numeric, "Integrate the solved jet ODE and compare with the orbit (r = 1)");
    cmd->add_option("--x0", cfg.x0, "Initial point for --numeric, comma separated (default 1,0,...)");
    cmd->add_option("--g-end", cfg.g_end, "End of the integration interval (accepts pi multiples)")
        ->capture_default_str();
    cmd->add_option("--step", cfg.step, "Fixed Runge-Kutta step")->capture_default_str();
    cmd->add_option("--samples", cfg.samples, "Random points per numeric equality test")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "Sampling seed (default LAGRFORGE_SEED or 0xC0FFEE)");
    cmd->add_option("--tol", cfg.tol, "Sampling tolerance for symbolic equality")->capture_default_str();
    cmd->add_option("--orbit-tol", cfg.orbit_tol, "Max orbit deviation for --numeric")->capture_default_str();
}

std::string latex_block(const std::string& body) { return "\\begin{gather*}\n" + body + "\\end{gather*}\n"; }

int emit(std::ostream& out, const RunConfig& cfg, const json& j, const std::string& text, const std::string& latex) {
    if (cfg.format == "json") out << j.dump(2) << "\n";
    else if (cfg.format == "latex") out << latex_block(latex);
    else out << text;
    return 0;
}

int cmd_parse(const RunConfig& cfg, std::ostream& out) {
    const auto spec = pipeline::load_spec(cfg.input);
    const auto axioms = dsl::validate_axioms(spec, 100, effective_seed(cfg), cfg.tol);
    json j{{"spec", report::spec_json(spec)}, {"axioms", report::axioms_json(axioms)}, {"ok", axioms.ok()}};
    std::string latex;
    for (std::size_t a = 0; a < spec.n(); ++a)
        latex += "S_g X^{" + std::to_string(a + 1) + "} = " + sym::to_latex(spec.action[a]) + " \\\\\n";
    emit(out, cfg, j, dsl::pretty_print(spec) + "axioms:\n" + report::axioms_text(axioms), latex);
    return axioms.ok() ? 0 : 1;
}

int cmd_derive(const RunConfig& cfg, std::ostream& out) {
    const auto spec = pipeline::load_spec(cfg.input);
    const auto lie = lie::constraints(spec);
    return emit(out, cfg, json{{"spec", report::spec_json(spec)}, {"lie", report::lie_json(lie)}},
                report::lie_text(lie), report::lie_latex(lie));
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    const auto spec = pipeline::load_spec(cfg.input);
    const auto lie = lie::constraints(spec);
    const auto res = solver::solve(lie, ansatz_config(cfg, spec));
    emit(out, cfg, json{{"spec", report::spec_json(spec)}, {"solve", report::solve_json(res)}},
         report::solve_text(res), report::family_latex(lie, res.family));
    return res.sound ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, bool full) {
    const auto spec = pipeline::load_spec(cfg.input);
    const auto lie = lie::constraints(spec);
    const auto opts = verify_options(cfg, lie);
    const auto res = solver::solve(lie, ansatz_config(cfg, spec));
    const auto rep = verify::verify_family(lie, res.family, opts);

    json j{{"spec", report::spec_json(spec)}, {"solve", report::solve_json(res)}, {"verify", report::verify_json(rep)}};
    std::string text = report::solve_text(res) + report::verify_text(rep);
    std::string latex = report::family_latex(lie, res.family);
    if (full) {
        j["lie"] = report::lie_json(lie);
        text = report::lie_text(lie) + text;
        latex = report::lie_latex(lie) + latex;
    }
    emit(out, cfg, j, text, latex);
    return rep.failed() || !res.sound ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vector Lagrangians for Lie transformation groups", "lagrforge"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* parse = app.add_subcommand("parse", "Parse a group file, echo it and check the group axioms");
    add_input(parse, cfg, "Group file or bundled name (so2, affine1)");
    parse->add_option("--seed", cfg.seed, "Sampling seed");
    parse->add_option("--tol", cfg.tol, "Axiom residual tolerance")->capture_default_str();

    auto* derive = app.add_subcommand("derive", "Infinitesimal data, auxiliary functions and Lie equations");
    add_input(derive, cfg, "Group file or bundled name (so2, affine1)");

    auto* solve = app.add_subcommand("solve", "Solve for the Lagrange multipliers in a polynomial ansatz");
    add_input(solve, cfg, "Group file or bundled name (so2, affine1)");
    add_solve_flags(solve, cfg);

    auto* verify = app.add_subcommand("verify", "Solve, then check the Euler-Lagrange equations against the Lie equations");
    add_input(verify, cfg, "Group file or bundled name (so2, affine1)");
    add_solve_flags(verify, cfg);
    add_verify_flags(verify, cfg);

    auto* example = app.add_subcommand("example", "Full pipeline on a bundled group");
    example->add_option("name", cfg.input, "Bundled group")->required()->check(CLI::IsMember({"so2", "affine1"}));
    example->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    add_solve_flags(example, cfg);
    add_verify_flags(example, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const CLI::App* failing = &app;
        for (auto* sub : app.get_subcommands()) failing = sub;
        err << failing->help();
        return 2;
    }

    try {
        if (parse->parsed()) return cmd_parse(cfg, out);
        if (derive->parsed()) return cmd_derive(cfg, out);
        if (solve->parsed()) return cmd_solve(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out, false);
        if (example->parsed()) return cmd_verify(cfg, out, true);
    } catch (const dsl::DslError& e) {
        err << cfg.input << ": " << e.what() << "\n";
        if (!e.expected().empty()) {
            err << "expected one of:";
            for (const auto& x : e.expected()) err << " " << x;
            err << "\n";
        }
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const solver::BasisTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace lagrforge::cli
