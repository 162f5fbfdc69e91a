#include "lagrforge/lie/lie_data.hpp"

#include "lagrforge/symexpr/numeric.hpp"

namespace lagrforge::lie {

JetSpace JetSpace::for_spec(const GroupActionSpec& spec) {
    JetSpace js;
    for (std::size_t a = 0; a < spec.n(); ++a) {
        const std::string base = spec.coords[a].name + "'";
        js.field.push_back(Symbol{base, sym::Role::FieldVar, static_cast<int>(a), -1});
        std::vector<Symbol> row;
        for (std::size_t i = 0; i < spec.r(); ++i)
            row.push_back(Symbol{base + "_" + spec.params[i].name, sym::Role::JetVar, static_cast<int>(a),
                                 static_cast<int>(i)});
        js.jet.push_back(std::move(row));
    }
    return js;
}

std::vector<Symbol> JetSpace::all_jets() const {
    std::vector<Symbol> out;
    for (const auto& row : jet) out.insert(out.end(), row.begin(), row.end());
    return out;
}

bool JetSpace::is_jet(const Symbol& s) const {
    if (s.role != sym::Role::JetVar) return false;
    for (const auto& row : jet)
        for (const auto& j : row)
            if (j == s) return true;
    return false;
}

ExprMatrix infinitesimal_coefficients(const GroupActionSpec& spec) {
    sym::Substitution at_identity;
    for (std::size_t i = 0; i < spec.r(); ++i) at_identity[spec.params[i]] = spec.identity[i];
    ExprMatrix S(spec.n(), std::vector<Expr>(spec.r()));
    for (std::size_t a = 0; a < spec.n(); ++a)
        for (std::size_t j = 0; j < spec.r(); ++j)
            S[a][j] = sym::substitute(sym::differentiate(spec.action[a], spec.params[j]), at_identity);
    return S;
}

ExprMatrix auxiliary_functions(const GroupActionSpec& spec) {
    const std::size_t r = spec.r();
    sym::Substitution lhs_to_g, rhs_to_inverse;
    for (std::size_t i = 0; i < r; ++i) {
        lhs_to_g[spec.lhs(i)] = Expr(spec.params[i]);
        rhs_to_inverse[spec.rhs(i)] = spec.inverse[i];
    }
    ExprMatrix u(r, std::vector<Expr>(r));
    for (std::size_t i = 0; i < r; ++i) {
        const Expr product = sym::substitute(spec.multiply[i], lhs_to_g);
        for (std::size_t j = 0; j < r; ++j) {
            u[i][j] = sym::substitute(sym::differentiate(product, spec.params[j]), rhs_to_inverse);
            for (const auto& s : sym::free_symbols(u[i][j]))
                if (s.role == sym::Role::BaseCoord)
                    throw ResidualCoordinates("auxiliary function u^" + std::to_string(i + 1) + "_" +
                                              std::to_string(j + 1) + " depends on coordinate " + s.name);
        }
    }
    return u;
}

sym::Substitution action_substitution(const LieData& lie) {
    sym::Substitution m;
    for (std::size_t a = 0; a < lie.n(); ++a) {
        m[lie.vars.field[a]] = lie.spec.action[a];
        for (std::size_t i = 0; i < lie.r(); ++i)
            m[lie.vars.jet[a][i]] = sym::differentiate(lie.spec.action[a], lie.spec.params[i]);
    }
    return m;
}

Expr constraint_on_action(const LieData& lie, std::size_t alpha, std::size_t j) {
    return sym::substitute(lie.phi.at(alpha).at(j), action_substitution(lie));
}

LieData constraints(const GroupActionSpec& spec) {
    LieData lie;
    lie.spec = spec;
    lie.vars = JetSpace::for_spec(spec);
    lie.S = infinitesimal_coefficients(spec);
    lie.u = auxiliary_functions(spec);

    const std::size_t r = spec.r();
    const std::size_t n = spec.n();
    sym::Substitution coords_to_field;
    for (std::size_t a = 0; a < n; ++a) coords_to_field[spec.coords[a]] = Expr(lie.vars.field[a]);

    lie.phi.assign(n, std::vector<Expr>(r));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t j = 0; j < r; ++j) {
            Expr rhs(0);
            for (std::size_t s = 0; s < r; ++s) rhs = rhs + lie.u[s][j] * sym::substitute(lie.S[a][s], coords_to_field);
            rhs = sym::canonicalize(rhs);
            lie.onshell[lie.vars.jet[a][j]] = rhs;
            lie.phi[a][j] = sym::canonicalize(Expr(lie.vars.jet[a][j]) - rhs);
        }
    }

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t j = 0; j < r; ++j) {
            const Expr residual = constraint_on_action(lie, a, j);
            if (sym::equals(residual, Expr(0)) == sym::Equality::ProvedUnequal)
                throw ConventionViolation("constraint phi^" + std::to_string(a + 1) + "_" + std::to_string(j + 1) +
                                          " does not vanish on the action: " + sym::to_infix(residual));
        }
    }

    lie.notes.push_back("constraints are written phi^a_j = X'^a_j - sum_s u^s_j(g) S^a_s(X'), "
                        "u^i_j(g) = d(gh)^i/dg^j at h = g^-1");
    lie.notes.push_back("every constraint vanishes when the action formulas are substituted");
    return lie;
}

}  // namespace lagrforge::lie
