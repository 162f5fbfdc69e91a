#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

// Plain row reduction over Q, written independently of the solver.
std::size_t rank_of(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

solver::AnsatzConfig config(int dx, int lo, int hi, int min_dx = 0) {
    solver::AnsatzConfig c;
    c.deg_x = dx;
    c.deg_g_min = lo;
    c.deg_g_max = hi;
    c.min_deg_x = min_dx;
    return c;
}

void check_nullspace(const solver::LinearSystem& sys, const solver::Nullspace& ns) {
    CHECK(ns.rank() + ns.nullity() == sys.cols());
    CHECK(ns.rank() == rank_of(sys.rows));
    for (const auto& v : ns.basis) CHECK(sys.satisfied_by(v));
    for (std::size_t d = 0; d < ns.basis.size(); ++d)
        for (std::size_t e = 0; e < ns.free_columns.size(); ++e)
            CHECK(ns.basis[d][ns.free_columns[e]] == (d == e ? 1 : 0));
}

}  // namespace

TEST_CASE("ansatz sizes and ordering") {
    const auto a = solver::build_ansatz(so2(), config(1, 0, 0));
    CHECK(a.basis.size() == 3);
    CHECK(a.unknowns.size() == 6);
    CHECK(same(a.basis[0], Expr(1)));
    CHECK(same(a.basis[1], field("X1")));
    CHECK(same(a.basis[2], field("X2")));
    CHECK(a.unknowns[0].name == "c_1_1_1_0");
    CHECK(a.unknown_index(0, 1, 0, 2) == 5);

    const auto lin = solver::build_ansatz(so2(), config(1, 0, 0, 1));
    CHECK(lin.unknowns.size() == 4);

    const auto aff = solver::build_ansatz(affine1(), config(1, -1, 0));
    CHECK(aff.basis.size() == 12);
    CHECK(aff.unknowns.size() == 96);
    bool has_x1_over_g1 = false;
    for (const auto& b : aff.basis) has_x1_over_g1 = has_x1_over_g1 || same(b, field("X1") / gp("g1"));
    CHECK(has_x1_over_g1);

    const auto constant = solver::build_ansatz(so2(), config(0, 0, 0));
    CHECK(constant.basis.size() == 1);
}

TEST_CASE("ansatz guards") {
    auto c = config(6, -3, 3);
    c.max_unknowns = 100;
    CHECK_THROWS_AS(solver::build_ansatz(affine1(), c), solver::BasisTooLarge);
    CHECK_THROWS_AS(solver::build_ansatz(so2(), config(-1, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(solver::build_ansatz(so2(), config(1, 1, 2)), std::invalid_argument);
}

TEST_CASE("SO(2) linear ansatz: rank 2 with beta1 = -alpha2, beta2 = alpha1") {
    const auto res = solver::solve(so2(), config(1, 0, 0, 1));
    CHECK(res.ansatz.unknowns.size() == 4);
    CHECK(res.null.rank() == 2);
    CHECK(res.null.nullity() == 2);
    check_nullspace(res.system, res.null);
    // unknown order: alpha1, alpha2 (lambda1), beta1, beta2 (lambda2)
    for (const auto& v : res.null.basis) {
        CHECK(v[2] == -v[1]);
        CHECK(v[3] == v[0]);
    }
    CHECK(res.system.satisfied_by({Rational(0), Rational(1), Rational(-1), Rational(0)}));
    CHECK(res.system.satisfied_by({Rational(1), Rational(0), Rational(0), Rational(1)}));
    CHECK_FALSE(res.system.satisfied_by({Rational(1), Rational(0), Rational(0), Rational(0)}));
    CHECK(same(res.family.components[0], so2_lagrangian()));
}

TEST_CASE("SO(2) full degree-one ansatz reproduces the published family") {
    const auto res = solver::solve(so2(), config(1, 0, 0));
    CHECK(res.sound);
    CHECK(res.null.nullity() == 2);
    check_nullspace(res.system, res.null);
    REQUIRE(res.family.free_params.size() == 2);
    CHECK(res.family.free_params[0].name == "a1");
    CHECK(same(res.family.components[0], so2_lagrangian()));
    const Expr x1 = field("X1"), x2 = field("X2");
    CHECK(same(res.family.multipliers[0][0][0], param(1) * x1 + param(2) * x2));
    CHECK(same(res.family.multipliers[0][1][0], -param(2) * x1 + param(1) * x2));
}

TEST_CASE("weak residual of the SO(2) linear multipliers matches the hand computation") {
    // lambda1 = p X1' + s X2', lambda2 = t X1' + w X2' with symbolic p, s, t, w:
    // E-L 1 weakly equals -lambda2 + X2' d lambda1/dX1' - X1' d lambda1/dX2'
    const Expr p = Expr::symbol("p", Role::FreeParam), s = Expr::symbol("s", Role::FreeParam);
    const Expr t = Expr::symbol("t", Role::FreeParam), w = Expr::symbol("w", Role::FreeParam);
    const Expr x1 = field("X1"), x2 = field("X2");
    solver::Multipliers lam{{{p * x1 + s * x2}, {t * x1 + w * x2}}};
    const Expr r1 = solver::weak_el_residual(so2(), lam, 0, 0);
    const Expr l2 = t * x1 + w * x2;
    CHECK(same(r1, -l2 + x2 * p - x1 * s));
}

TEST_CASE("affine dX=1 dG=[-1,0]: rank 60, nullity 36, exact and sound") {
    const auto res = solver::solve(affine1(), config(1, -1, 0));
    CHECK(res.ansatz.unknowns.size() == 96);
    CHECK(res.null.rank() == 60);
    CHECK(res.null.nullity() == 36);
    CHECK(res.sound);
    check_nullspace(res.system, res.null);
}

TEST_CASE("published affine multipliers zero the weak residuals") {
    const Expr x2 = field("X2");
    for (const Expr& psi : {Expr(1), x2}) {
        const auto lam = affine_multipliers(psi, psi, psi, psi);
        for (const auto& r : solver::weak_el_residuals(affine1(), lam)) CHECK(r.is_zero());
    }
    // independent choices of the four functions
    const auto lam = affine_multipliers(Expr(1), x2, x2 * x2, q(3) - x2);
    for (const auto& r : solver::weak_el_residuals(affine1(), lam)) CHECK(r.is_zero());
}

TEST_CASE("constant-psi affine multipliers lie in the dX=1 solution space") {
    const auto res = solver::solve(affine1(), config(1, -1, 0));
    const auto coords = solver::ansatz_coordinates(res.ansatz, affine_multipliers(Expr(1), Expr(1), Expr(1), Expr(1)));
    REQUIRE(coords.has_value());
    CHECK(res.system.satisfied_by(*coords));
}

TEST_CASE("psi = X2' multipliers need degree two in the field variables") {
    const Expr x2 = field("X2");
    const auto lam = affine_multipliers(x2, x2, x2, x2);
    const auto small = solver::build_ansatz(affine1(), config(1, -1, 0));
    CHECK_FALSE(solver::ansatz_coordinates(small, lam).has_value());

    const auto res = solver::solve(affine1(), config(2, -1, 0));
    CHECK(res.null.nullity() == 56);
    const auto coords = solver::ansatz_coordinates(res.ansatz, lam);
    REQUIRE(coords.has_value());
    CHECK(res.system.satisfied_by(*coords));
}

TEST_CASE("property: enlarging the ansatz keeps old solutions") {
    struct Step {
        const lie::LieData* lie;
        solver::AnsatzConfig small, big;
    };
    const std::vector<Step> steps{{&so2(), config(1, 0, 0), config(2, 0, 0)},
                                  {&affine1(), config(1, 0, 0), config(1, -1, 0)},
                                  {&affine1(), config(0, -1, 0), config(1, -1, 0)}};
    for (const auto& st : steps) {
        const auto a = solver::solve(*st.lie, st.small);
        const auto b = solver::solve(*st.lie, st.big);
        CHECK(b.null.nullity() >= a.null.nullity());
        for (std::size_t d = 0; d < a.family.free_params.size(); ++d) {
            sym::Substitution only;
            for (std::size_t e = 0; e < a.family.free_params.size(); ++e)
                only[a.family.free_params[e]] = Expr(d == e ? 1 : 0);
            const auto coords = solver::ansatz_coordinates(b.ansatz, a.family.specialized(only).multipliers);
            REQUIRE(coords.has_value());
            CHECK(b.system.satisfied_by(*coords));
        }
    }
}

TEST_CASE("the linear system contains no floating point and scales freely") {
    const auto res = solver::solve(affine1(), config(1, -1, 0));
    for (const auto& v : res.null.basis) {
        std::vector<Rational> scaled;
        for (const auto& x : v) scaled.push_back(x * Rational(-7, 3));
        CHECK(res.system.satisfied_by(scaled));
    }
}

TEST_CASE("collect_system rejects nonlinear residuals") {
    const Expr c = Expr::symbol("c_1_1_1_0", Role::Unknown);
    const std::vector<Symbol> unknowns{c.sym()};
    CHECK_THROWS_AS(solver::collect_system({c * c}, {}, unknowns), solver::NonlinearInUnknowns);
    CHECK_THROWS_AS(solver::collect_system({c + Expr(1)}, {}, unknowns), solver::NonlinearInUnknowns);
    CHECK_THROWS_AS(solver::collect_system({Expr(1) / c}, {}, unknowns), solver::NonlinearInUnknowns);
}

TEST_CASE("total derivative refuses jets") {
    CHECK_THROWS_AS(solver::total_derivative(so2(), jet("X1", "g"), 0), solver::SecondOrderJet);
    CHECK(same(solver::total_derivative(so2(), field("X1") * field("X1"), 0), q(2) * field("X1") * jet("X1", "g")));
}
