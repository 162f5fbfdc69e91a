#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_CASE("SO(2) infinitesimal data and constraints") {
    const auto& lie = so2();
    CHECK(same(lie.S[0][0], -base("X2")));
    CHECK(same(lie.S[1][0], base("X1")));
    CHECK(same(lie.u[0][0], Expr(1)));
    const Expr x1 = field("X1"), x2 = field("X2");
    CHECK(sym::identical(lie.phi[0][0], sym::canonicalize(jet("X1", "g") + x2)));
    CHECK(sym::identical(lie.phi[1][0], sym::canonicalize(jet("X2", "g") - x1)));
    CHECK(sym::to_prefix(lie.phi[0][0]) == "(+ X2' X1'_g)");
    CHECK(sym::to_prefix(lie.phi[1][0]) == "(+ X2'_g (* -1 X1'))");
    CHECK(same(lie.onshell.at(Symbol{"X1'_g", Role::JetVar}), -x2));
    CHECK(same(lie.onshell.at(Symbol{"X2'_g", Role::JetVar}), x1));
}

TEST_CASE("affine auxiliary functions") {
    const auto& lie = affine1();
    const Expr g1 = gp("g1"), g2 = gp("g2");
    CHECK(same(lie.u[0][0], Expr(1) / g1));
    CHECK(same(lie.u[0][1], Expr(0)));
    CHECK(same(lie.u[1][0], -g2 / g1));
    CHECK(same(lie.u[1][1], Expr(1)));

    sym::Substitution at_e{{lie.spec.params[0], lie.spec.identity[0]}, {lie.spec.params[1], lie.spec.identity[1]}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(same(sym::substitute(lie.u[i][j], at_e), Expr(i == j ? 1 : 0)));
}

TEST_CASE("affine constraints and Lie equations") {
    const auto& lie = affine1();
    const Expr g1 = gp("g1"), g2 = gp("g2"), x1 = field("X1");
    CHECK(same(lie.phi[0][0], jet("X1", "g1") - x1 / g1 + g2 / g1));
    CHECK(same(lie.phi[0][1], jet("X1", "g2") - Expr(1)));
    CHECK(same(lie.phi[1][0], jet("X2", "g1")));
    CHECK(same(lie.phi[1][1], jet("X2", "g2")));
    CHECK(same(lie.onshell.at(Symbol{"X1'_g1", Role::JetVar}), x1 / g1 - g2 / g1));
}

TEST_CASE("constraints vanish on the action, canonically") {
    for (const auto* lie : {&so2(), &affine1()})
        for (std::size_t a = 0; a < lie->n(); ++a)
            for (std::size_t j = 0; j < lie->r(); ++j) {
                const Expr r = lie::constraint_on_action(*lie, a, j);
                CHECK(sym::equals(r, Expr(0)) != sym::Equality::ProvedUnequal);
            }
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(sym::equals(lie::constraint_on_action(affine1(), a, j), Expr(0)) == sym::Equality::ProvedEqual);
}

TEST_CASE("jet space naming") {
    const auto& js = affine1().vars;
    CHECK(js.field[1].name == "X2'");
    CHECK(js.jet[0][1].name == "X1'_g2");
    CHECK(js.all_jets().size() == 4);
    CHECK(js.is_jet(js.jet[1][0]));
    CHECK_FALSE(js.is_jet(js.field[0]));
}

TEST_CASE("a group whose composition law is not the one its action follows is rejected") {
    // action composes as translation but the law claims multiplication
    const auto spec = dsl::parse_group(R"(group Bad {
      params: t; coords: A;
      identity: (1); inverse: (1/t);
      multiply: (lhs.t*rhs.t);
      action: (A + t); })");
    CHECK_THROWS_AS(lie::constraints(spec), lie::ConventionViolation);
}

TEST_CASE("one-parameter translation: u is 1 and the Lie equation is X'_t = 1") {
    const auto lie = lie::constraints(dsl::parse_group(R"(group T {
      params: t; coords: A;
      identity: (0); inverse: (-t);
      multiply: (lhs.t + rhs.t);
      action: (A + t); })"));
    CHECK(same(lie.u[0][0], Expr(1)));
    CHECK(same(lie.onshell.begin()->second, Expr(1)));
}
