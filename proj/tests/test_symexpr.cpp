#include <doctest.h>

#include <cmath>

#include "random_expr.hpp"

using namespace testing;

namespace {

const Expr x = base("x");
const Expr y = base("y");
const Expr z = base("z");
const Symbol X{"x", Role::BaseCoord};
const Symbol Y{"y", Role::BaseCoord};

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("canonical form is order independent") {
    CHECK(same(x + y, y + x));
    CHECK(same(x * y * z, z * (y * x)));
    CHECK(same(x + x, q(2) * x));
    CHECK(same(x - x, Expr(0)));
    CHECK(same(x * Expr::pow(x, -1), Expr(1)));
    CHECK(same((x * x - Expr(1)) / (x - Expr(1)), x + Expr(1)));
    CHECK(same(q(1, 2) + q(1, 3), q(5, 6)));
    CHECK(same(sym::sin(Expr(0)), Expr(0)));
    CHECK(same(sym::cos(Expr(0)), Expr(1)));
    CHECK(same(sym::sin(x + y), sym::sin(y + x)));
    CHECK(same(Expr::pow(x + y, 2), x * x + q(2) * x * y + y * y));
}

TEST_CASE("canonical trees have a stable prefix form") {
    CHECK(sym::to_prefix(sym::canonicalize(y + x)) == "(+ x y)");
    CHECK(sym::to_prefix(sym::canonicalize(q(-1) * x)) == "(* -1 x)");
    CHECK(sym::to_prefix(sym::canonicalize(x / y)) == "(* x (^ y -1))");
    CHECK(sym::to_prefix(sym::canonicalize(sym::sin(x) * q(1, 2))) == "(* 1/2 (sin x))");
    CHECK(sym::to_prefix(Expr(0)) == "0");
}

TEST_CASE("polynomial denominators survive as one inverse factor") {
    const Expr e = sym::canonicalize(Expr(1) / (x + Expr(1)) + Expr(1) / (x - Expr(1)));
    CHECK(same(e, q(2) * x / (x * x - Expr(1))));
    const sym::Env env{{X, 0.5}};
    CHECK(sym::eval_numeric(e, env) == doctest::Approx(2 * 0.5 / (0.25 - 1)));
}

TEST_CASE("differentiation rules") {
    CHECK(same(sym::differentiate(x * x * y, X), q(2) * x * y));
    CHECK(same(sym::differentiate(sym::sin(x * y), X), y * sym::cos(x * y)));
    CHECK(same(sym::differentiate(sym::cos(x), X), -sym::sin(x)));
    CHECK(same(sym::differentiate(Expr::pow(x, -2), X), q(-2) * Expr::pow(x, -3)));
    CHECK(same(sym::differentiate(Expr(7), X), Expr(0)));
    CHECK(same(sym::differentiate(y, X), Expr(0)));
}

TEST_CASE("substitution is simultaneous") {
    sym::Substitution swap{{X, y}, {Y, x}};
    CHECK(same(sym::substitute(x - q(2) * y, swap), y - q(2) * x));
    CHECK(same(sym::substitute(sym::sin(x), {{X, Expr(0)}}), Expr(0)));
}

TEST_CASE("split_affine separates the linear coefficient") {
    const auto s = sym::split_affine(sym::canonicalize(q(3) * x * y + y + Expr(2)), X);
    CHECK(same(s.coefficient, q(3) * y));
    CHECK(same(s.remainder, y + Expr(2)));
    CHECK_THROWS_AS(sym::split_affine(sym::canonicalize(x * x), X), std::domain_error);
}

TEST_CASE("equality verdicts") {
    CHECK(sym::equals(x + y, y + x) == sym::Equality::ProvedEqual);
    const Expr pyth = Expr::pow(sym::sin(x), 2) + Expr::pow(sym::cos(x), 2);
    CHECK(sym::equals(pyth, Expr(1)) == sym::Equality::NumericallyEqual);
    CHECK(sym::equals(sym::sin(q(2) * x), q(2) * sym::sin(x) * sym::cos(x)) == sym::Equality::NumericallyEqual);
    CHECK(sym::equals(x, x + q(1, 1000000)) == sym::Equality::ProvedUnequal);
    const auto r = sym::compare_exprs(x * y, x + y);
    CHECK(r.verdict == sym::Equality::ProvedUnequal);
    REQUIRE(r.sampling.witness);
    CHECK(r.sampling.witness->count(X) == 1);
}

TEST_CASE("sampling is reproducible for a fixed seed") {
    sym::SampleOptions a, b;
    a.seed = b.seed = 12345;
    const auto r1 = sym::sample_vanishing(x - y, a);
    const auto r2 = sym::sample_vanishing(x - y, b);
    REQUIRE(r1.witness);
    REQUIRE(r2.witness);
    CHECK(*r1.witness == *r2.witness);
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(sym::eval_numeric(x + y, {{X, 1.0}}), sym::UnboundSymbol);
    CHECK_THROWS_AS(sym::eval_numeric(Expr::pow(x, -1), {{X, 1e-6}}), sym::NearSingularEvaluation);
    CHECK(sym::eval_numeric(Expr::pow(x, -1), {{X, 0.5}}) == doctest::Approx(2.0));
}

TEST_CASE("an expression vanishing only off the sample box is rejected, not accepted") {
    // 1/x is never zero; heavy guard forces many rejections but a verdict still comes back
    sym::SampleOptions o;
    o.guard = 1.5;
    const auto r = sym::sample_vanishing(Expr::pow(x, -1), o);
    CHECK_FALSE(r.vanishes);
    CHECK(r.rejected > 0);
}

TEST_CASE("property: finite differences agree with symbolic derivatives (50 cases)") {
    ExprGen gen(20240601);
    int checked = 0;
    for (int attempt = 0; checked < 50 && attempt < 500; ++attempt) {
        const Expr e = gen(3);
        const auto env = gen.point();
        const Symbol s = gen.symbols()[static_cast<std::size_t>(attempt) % 3];
        const Expr d = sym::differentiate(e, s);
        const double h = 1e-5;
        double exact = 0, fd = 0;
        try {
            auto up = env, down = env;
            up[s] += h;
            down[s] -= h;
            exact = sym::eval_numeric(d, env, 1e-2);
            fd = (sym::eval_numeric(e, up, 1e-2) - sym::eval_numeric(e, down, 1e-2)) / (2 * h);
        } catch (const sym::NearSingularEvaluation&) {
            continue;
        }
        INFO(sym::to_prefix(e), " d/d", s.name);
        CHECK(rel_err(fd, exact) <= 1e-5);
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("property: canonicalization is idempotent and value preserving (100 expressions)") {
    ExprGen gen(777);
    for (int i = 0; i < 100; ++i) {
        const Expr e = gen(3);
        const Expr c = sym::canonicalize(e);
        INFO(sym::to_prefix(e));
        CHECK(sym::identical(sym::canonicalize(c), c));
        const auto env = gen.point();
        try {
            const double ve = sym::eval_numeric(e, env, 1e-6);
            const double vc = sym::eval_numeric(c, env, 1e-6);
            CHECK(std::abs(ve - vc) <= 1e-9 * std::max(1.0, std::abs(ve)));
        } catch (const sym::NearSingularEvaluation&) {
        }
    }
}

TEST_CASE("property: differentiation is linear") {
    ExprGen gen(99);
    for (int i = 0; i < 30; ++i) {
        const Expr e1 = gen(2), e2 = gen(2);
        const Expr a = q(3, 2), b = q(-2);
        const Expr lhs = sym::differentiate(a * e1 + b * e2, X);
        const Expr rhs = a * sym::differentiate(e1, X) + b * sym::differentiate(e2, X);
        INFO(sym::to_prefix(e1), " , ", sym::to_prefix(e2));
        CHECK(same(lhs, rhs));
    }
}

TEST_CASE("rational arithmetic stays exact") {
    Expr acc(0);
    for (int k = 1; k <= 20; ++k) acc = acc + q(1, k * (k + 1));
    CHECK(same(acc, q(20, 21)));
    CHECK(sym::canonicalize(acc).is_const());
}

TEST_CASE("latex rendering of jets and parameters") {
    const Expr v = jet("X1", "g");
    sym::LatexStyle dots{true};
    CHECK(sym::to_latex(v, dots) == "\\dot{X}'^{1}");
    CHECK(sym::to_latex(param(2)) == "\\alpha_{2}");
    CHECK(sym::to_latex(field("X2")) == "X'^{2}");
}
