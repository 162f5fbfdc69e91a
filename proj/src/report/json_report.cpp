#include <sstream>

#include "lagrforge/report/report.hpp"

namespace lagrforge::report {

using sym::Expr;
using sym::to_prefix;

namespace {

json expr_list(const std::vector<Expr>& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(to_prefix(e));
    return out;
}

json matrix(const lie::ExprMatrix& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(expr_list(row));
    return out;
}

json env_json(const std::optional<sym::Env>& env) {
    if (!env) return nullptr;
    json out = json::object();
    for (const auto& [s, v] : *env) out[s.name] = v;
    return out;
}

json subst_json(const sym::Substitution& m) {
    json out = json::object();
    for (const auto& [s, e] : m) out[s.name] = to_prefix(e);
    return out;
}

std::string join_names(const std::vector<sym::Symbol>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x.name;
    return s;
}

}  // namespace

json spec_json(const dsl::GroupActionSpec& spec) {
    json out;
    out["name"] = spec.name;
    out["params"] = json::array();
    for (const auto& p : spec.params) out["params"].push_back(p.name);
    out["coords"] = json::array();
    for (const auto& c : spec.coords) out["coords"].push_back(c.name);
    out["identity"] = expr_list(spec.identity);
    out["inverse"] = expr_list(spec.inverse);
    out["multiply"] = expr_list(spec.multiply);
    out["action"] = expr_list(spec.action);
    return out;
}

json axioms_json(const dsl::AxiomReport& axioms) {
    json out = json::array();
    for (const auto& c : axioms.checks) {
        json j;
        j["name"] = c.name;
        j["statement"] = c.statement;
        j["outcome"] = dsl::axiom_outcome_name(c.outcome);
        j["max_residual"] = c.max_residual;
        j["witness"] = env_json(c.witness);
        if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
        out.push_back(std::move(j));
    }
    return out;
}

json lie_json(const lie::LieData& lie) {
    json out;
    out["infinitesimal"] = matrix(lie.S);
    out["auxiliary"] = matrix(lie.u);
    out["constraints"] = matrix(lie.phi);
    out["on_shell"] = subst_json(lie.onshell);
    out["notes"] = lie.notes;
    return out;
}

json family_json(const solver::LagrangianFamily& family) {
    json out;
    out["free_params"] = json::array();
    for (const auto& p : family.free_params) out["free_params"].push_back(p.name);
    out["basis"] = json::array();
    for (const auto& v : family.basis) {
        json b = json::object();
        for (std::size_t u = 0; u < v.size(); ++u)
            if (v[u] != 0) b[family.unknowns[u].name] = sym::rational_to_string(v[u]);
        out["basis"].push_back(std::move(b));
    }
    out["multipliers"] = json::array();
    for (const auto& byk : family.multipliers) {
        json jk = json::array();
        for (const auto& bya : byk) jk.push_back(expr_list(bya));
        out["multipliers"].push_back(std::move(jk));
    }
    out["lagrangian"] = expr_list(family.components);
    return out;
}

json solve_json(const solver::SolveResult& r) {
    json out;
    out["ansatz"] = {{"deg_x", r.ansatz.config.deg_x},
                     {"min_deg_x", r.ansatz.config.min_deg_x},
                     {"deg_g_min", r.ansatz.config.deg_g_min},
                     {"deg_g_max", r.ansatz.config.deg_g_max},
                     {"basis", expr_list(r.ansatz.basis)},
                     {"unknowns", r.ansatz.unknowns.size()}};
    out["system"] = {{"rows", r.system.rows.size()}, {"rank", r.null.rank()}, {"nullity", r.null.nullity()}};
    out["sound"] = r.sound;
    out["family"] = family_json(r.family);
    return out;
}

json verify_json(const verify::VerificationReport& rep) {
    json out;
    out["forward_check"] = json::array();
    for (const auto& f : rep.forward)
        out["forward_check"].push_back({{"k", f.k + 1},
                                        {"alpha", f.alpha + 1},
                                        {"expression", to_prefix(f.expression)},
                                        {"on_shell", to_prefix(f.on_shell)},
                                        {"verdict", verify::verdict_name(f.verdict)},
                                        {"max_residual", f.max_residual},
                                        {"witness", env_json(f.witness)}});
    json conv;
    conv["status"] = verify::converse_status_name(rep.converse.status);
    conv["params"] = subst_json(rep.converse.params);
    conv["generated_params"] = json::array();
    for (const auto& p : rep.generated_params) conv["generated_params"].push_back(p.name);
    conv["solved"] = json::array();
    for (const auto& s : rep.converse.solved)
        conv["solved"].push_back({{"jet", s.jet.name},
                                  {"value", to_prefix(s.value)},
                                  {"expected", to_prefix(s.expected)},
                                  {"verdict", verify::verdict_name(s.verdict)},
                                  {"witness", env_json(s.witness)}});
    conv["unsolved"] = json::array();
    for (const auto& s : rep.converse.unsolved) conv["unsolved"].push_back(s.name);
    conv["diagnostic"] = rep.converse.diagnostic;
    out["converse_check"] = std::move(conv);

    json deg;
    deg["performed"] = rep.degeneracy.performed;
    deg["note"] = rep.degeneracy.note;
    deg["tried"] = json::array();
    for (const auto& s : rep.degeneracy.tried)
        deg["tried"].push_back({{"label", s.label},
                                {"params", subst_json(s.params)},
                                {"status", verify::converse_status_name(s.status)},
                                {"degenerate", s.degenerate()}});
    out["degeneracy"] = std::move(deg);

    if (rep.numeric)
        out["numeric"] = {{"max_deviation", rep.numeric->max_deviation},
                          {"steps", rep.numeric->steps},
                          {"g_start", rep.numeric->g_start},
                          {"final_state", rep.numeric->final_state},
                          {"tolerance", rep.orbit_tol}};
    else
        out["numeric"] = nullptr;
    if (rep.kinetic) {
        json k;
        k["momentum"] = to_prefix(rep.kinetic->momentum);
        k["twice_energy"] = to_prefix(rep.kinetic->twice_energy);
        k["verdict"] = sym::equality_name(rep.kinetic->verdict);
        k["specialized"] = rep.kinetic->specialized ? json(to_prefix(*rep.kinetic->specialized)) : json(nullptr);
        out["kinetic"] = std::move(k);
    } else {
        out["kinetic"] = nullptr;
    }
    out["notes"] = rep.notes;
    out["failed"] = rep.failed();
    return out;
}

// ------------------------------------------------------------------- text

std::string axioms_text(const dsl::AxiomReport& axioms) {
    std::ostringstream os;
    for (const auto& c : axioms.checks) {
        os << "  " << c.name << " (" << c.statement << "): " << dsl::axiom_outcome_name(c.outcome);
        if (c.outcome != dsl::AxiomCheck::Outcome::Symbolic) os << ", max residual " << c.max_residual;
        if (!c.diagnostic.empty()) os << ", " << c.diagnostic;
        os << "\n";
    }
    return os.str();
}

std::string lie_text(const lie::LieData& lie) {
    std::ostringstream os;
    const auto& spec = lie.spec;
    os << "infinitesimal coefficients S[alpha][j]:\n";
    for (std::size_t a = 0; a < lie.n(); ++a)
        for (std::size_t j = 0; j < lie.r(); ++j)
            os << "  S[" << spec.coords[a].name << "][" << spec.params[j].name << "] = " << to_prefix(lie.S[a][j]) << "\n";
    os << "auxiliary functions u[i][j]:\n";
    for (std::size_t i = 0; i < lie.r(); ++i)
        for (std::size_t j = 0; j < lie.r(); ++j)
            os << "  u[" << i + 1 << "][" << j + 1 << "] = " << to_prefix(lie.u[i][j]) << "\n";
    os << "constraints:\n";
    for (std::size_t a = 0; a < lie.n(); ++a)
        for (std::size_t j = 0; j < lie.r(); ++j)
            os << "  phi[" << lie.vars.field[a].name << "][" << spec.params[j].name << "] = " << to_prefix(lie.phi[a][j])
               << "\n";
    os << "Lie equations:\n";
    for (const auto& [s, e] : lie.onshell) os << "  " << s.name << " = " << sym::to_infix(e) << "\n";
    for (const auto& n : lie.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string family_text(const solver::LagrangianFamily& family) {
    std::ostringstream os;
    os << "free parameters: " << (family.free_params.empty() ? "(none)" : join_names(family.free_params)) << "\n";
    for (std::size_t k = 0; k < family.components.size(); ++k)
        os << "L" << k + 1 << " = " << sym::to_infix(family.components[k]) << "\n";
    return os.str();
}

std::string solve_text(const solver::SolveResult& r) {
    std::ostringstream os;
    os << "ansatz: " << r.ansatz.basis.size() << " basis monomials, " << r.ansatz.unknowns.size() << " unknowns\n";
    os << "system: " << r.system.rows.size() << " rows, rank " << r.null.rank() << ", nullity " << r.null.nullity()
       << (r.sound ? "" : " (soundness check FAILED)") << "\n";
    os << family_text(r.family);
    return os.str();
}

std::string verify_text(const verify::VerificationReport& rep) {
    std::ostringstream os;
    os << "forward check:\n";
    for (const auto& f : rep.forward)
        os << "  L" << f.k + 1 << ", E-L " << f.alpha + 1 << ": " << verify::verdict_name(f.verdict) << "\n";
    os << "converse check: " << verify::converse_status_name(rep.converse.status) << "\n";
    for (const auto& [s, e] : rep.converse.params) os << "  " << s.name << " = " << sym::to_infix(e) << "\n";
    for (const auto& s : rep.converse.solved)
        os << "  " << s.jet.name << " = " << sym::to_infix(s.value) << "  [" << verify::verdict_name(s.verdict) << "]\n";
    if (!rep.converse.diagnostic.empty()) os << "  " << rep.converse.diagnostic << "\n";
    os << "degeneracy scan:";
    if (!rep.degeneracy.performed) {
        os << " " << rep.degeneracy.note << "\n";
    } else {
        os << "\n";
        for (const auto& s : rep.degeneracy.tried)
            os << "  " << s.label << ": " << verify::converse_status_name(s.status)
               << (s.degenerate() ? " (degenerate)" : "") << "\n";
    }
    if (rep.kinetic)
        os << "kinetic identity: l = " << sym::to_infix(rep.kinetic->momentum)
           << ", 2T = " << sym::to_infix(rep.kinetic->twice_energy) << " ["
           << sym::equality_name(rep.kinetic->verdict) << "]\n";
    if (rep.numeric)
        os << "numeric orbit: max deviation " << rep.numeric->max_deviation << " over " << rep.numeric->steps
           << " steps\n";
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
    os << (rep.failed() ? "FAILED\n" : "OK\n");
    return os.str();
}

// ------------------------------------------------------------------ latex

std::vector<std::pair<std::string, Expr>> split_by_params(const Expr& e, const std::vector<sym::Symbol>& params) {
    std::vector<std::pair<std::string, Expr>> out;
    Expr rest = e;
    for (const auto& p : params) {
        auto s = sym::split_affine(rest, p);
        if (!s.coefficient.is_zero()) out.emplace_back(p.name, s.coefficient);
        rest = s.remainder;
    }
    if (!rest.is_zero()) out.emplace_back("", rest);
    return out;
}

std::string family_latex(const lie::LieData& lie, const solver::LagrangianFamily& family) {
    sym::LatexStyle style;
    style.dot_jets = lie.r() == 1;
    std::ostringstream os;
    for (std::size_t k = 0; k < family.components.size(); ++k) {
        os << (family.components.size() == 1 ? std::string("L") : "L_{" + std::to_string(k + 1) + "}") << " = ";
        const auto parts = split_by_params(family.components[k], family.free_params);
        if (parts.empty()) os << "0";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& [name, coeff] = parts[i];
            if (i) os << " + ";
            if (name.empty()) {
                os << to_latex(coeff, style);
                continue;
            }
            os << sym::latex_symbol(sym::Symbol{name, sym::Role::FreeParam}, style) << "\\left("
               << to_latex(coeff, style) << "\\right)";
        }
        os << (k + 1 < family.components.size() ? " \\\\\n" : "\n");
    }
    return os.str();
}

std::string lie_latex(const lie::LieData& lie) {
    sym::LatexStyle style;
    style.dot_jets = lie.r() == 1;
    std::ostringstream os;
    for (std::size_t a = 0; a < lie.n(); ++a)
        for (std::size_t j = 0; j < lie.r(); ++j)
            os << "\\varphi^{" << a + 1 << "}_{" << j + 1 << "} = " << to_latex(lie.phi[a][j], style) << " \\\\\n";
    os << "u = \\begin{pmatrix}";
    for (std::size_t i = 0; i < lie.r(); ++i) {
        for (std::size_t j = 0; j < lie.r(); ++j) os << (j ? " & " : " ") << to_latex(lie.u[i][j], style);
        os << (i + 1 < lie.r() ? " \\\\" : " ");
    }
    os << "\\end{pmatrix} \\\\\n";
    return os.str();
}

}  // namespace lagrforge::report
