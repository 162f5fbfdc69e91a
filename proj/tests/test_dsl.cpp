#include <doctest.h>

#include "support.hpp"

using namespace testing;
using dsl::DslError;

namespace {

const char* kRotation = R"(group Rot {
  params: t;
  coords: A, B;
  identity: (0);
  inverse: (-t);
  multiply: (lhs.t + rhs.t);
  action: (A*cos(t) - B*sin(t), A*sin(t) + B*cos(t));
})";

DslError parse_error(const std::string& src) {
    try {
        dsl::parse_group(src);
    } catch (const DslError& e) {
        return e;
    }
    FAIL("expected a DslError for: " << src);
    return DslError(DslError::Kind::Syntax, {}, "unreachable");
}

std::string with_clause(const std::string& name, const std::string& replacement) {
    std::string s = kRotation;
    const auto at = s.find("  " + name + ":");
    const auto end = s.find('\n', at);
    return s.replace(at, end - at, "  " + name + ": " + replacement);
}

}  // namespace

TEST_CASE("bundled groups parse") {
    const auto so2 = dsl::parse_group(*dsl::bundled_group_source("so2"));
    CHECK(so2.name == "SO2");
    CHECK(so2.r() == 1);
    CHECK(so2.n() == 2);
    CHECK(same(so2.action[0], base("X1") * sym::cos(gp("g")) - base("X2") * sym::sin(gp("g"))));

    const auto aff = dsl::parse_group(*dsl::bundled_group_source("affine1"));
    CHECK(aff.r() == 2);
    CHECK(aff.n() == 2);
    CHECK(same(aff.identity[0], Expr(1)));
    CHECK(same(aff.inverse[1], -gp("g2") / gp("g1")));
    CHECK(same(aff.action[1], Expr(1)));
    CHECK_FALSE(dsl::bundled_group_source("nope").has_value());
}

TEST_CASE("round trip through the pretty printer") {
    for (const char* name : {"so2", "affine1"}) {
        const auto spec = dsl::parse_group(*dsl::bundled_group_source(name));
        const auto text = dsl::pretty_print(spec);
        const auto again = dsl::parse_group(text);
        CHECK(dsl::same_spec(spec, again));
        CHECK(dsl::pretty_print(again) == text);
    }
    CHECK(dsl::same_spec(dsl::parse_group(kRotation), dsl::parse_group(dsl::pretty_print(dsl::parse_group(kRotation)))));
}

TEST_CASE("comments, whitespace and exponent forms") {
    const auto spec = dsl::parse_group(R"(# leading comment
group P { params: a; coords: U;
  identity: (0); inverse: (-a);   # trailing
  multiply: (lhs.a + rhs.a);
  action: (U + a^2 - a^(-1)*a^2 + a^-2*a^2 - 1 + a - a^2); })");
    CHECK(same(spec.action[0], base("U")));
}

TEST_CASE("syntax errors carry a position and the expected tokens") {
    const auto e = parse_error("group G {\n  params: g;\n  coords: X1\n  identity: (0);\n}");
    CHECK(e.kind() == DslError::Kind::Syntax);
    CHECK(e.pos().line == 4);
    CHECK(e.pos().column == 3);
    CHECK_FALSE(e.expected().empty());

    CHECK(parse_error(with_clause("action", "(A*, B);")).kind() == DslError::Kind::Syntax);
    CHECK(parse_error(with_clause("action", "(A, B)")).kind() == DslError::Kind::Syntax);
    CHECK(parse_error("group { }").kind() == DslError::Kind::Syntax);
    CHECK(parse_error(with_clause("action", "(A^x, B);")).kind() == DslError::Kind::Syntax);
}

TEST_CASE("undeclared symbols are rejected per clause") {
    auto e = parse_error(with_clause("action", "(A + C, B);"));
    CHECK(e.kind() == DslError::Kind::UndeclaredSymbol);
    CHECK(e.pos().line == 7);
    CHECK(parse_error(with_clause("inverse", "(-A);")).kind() == DslError::Kind::UndeclaredSymbol);
    CHECK(parse_error(with_clause("identity", "(t);")).kind() == DslError::Kind::UndeclaredSymbol);
    CHECK(parse_error(with_clause("multiply", "(t + rhs.t);")).kind() == DslError::Kind::UndeclaredSymbol);
    CHECK(parse_error(with_clause("action", "(lhs.t, B);")).kind() == DslError::Kind::UndeclaredSymbol);
    CHECK(parse_error(with_clause("action", "(tan(A), B);")).kind() == DslError::Kind::UndeclaredSymbol);
}

TEST_CASE("arity mismatches") {
    CHECK(parse_error(with_clause("identity", "(0, 0);")).kind() == DslError::Kind::ArityMismatch);
    CHECK(parse_error(with_clause("action", "(A,);")).kind() == DslError::Kind::ArityMismatch);
    CHECK(parse_error(with_clause("multiply", "(lhs.t, rhs.t);")).kind() == DslError::Kind::ArityMismatch);
}

TEST_CASE("duplicate and missing clauses") {
    std::string dup = kRotation;
    dup.insert(dup.find("  action"), "  inverse: (-t);\n");
    CHECK(parse_error(dup).kind() == DslError::Kind::DuplicateClause);

    std::string missing = kRotation;
    const auto at = missing.find("  inverse");
    missing.erase(at, missing.find('\n', at) - at + 1);
    CHECK(parse_error(missing).kind() == DslError::Kind::MissingClause);
}

TEST_CASE("error messages name the kind and position") {
    const auto e = parse_error(with_clause("action", "(A + C, B);"));
    const std::string what = e.what();
    CHECK(what.find("line 7") != std::string::npos);
    CHECK(what.find("C") != std::string::npos);
}

TEST_CASE("property: group axioms hold on both bundled groups (100 points, 1e-9)") {
    for (const char* name : {"so2", "affine1"}) {
        const auto spec = dsl::parse_group(*dsl::bundled_group_source(name));
        const auto rep = dsl::validate_axioms(spec, 100, sym::kDefaultSeed, 1e-9);
        CHECK(rep.checks.size() == 4);
        for (const auto& c : rep.checks) {
            INFO(name, " ", c.name);
            CHECK(c.outcome != dsl::AxiomCheck::Outcome::Failed);
            CHECK(c.max_residual <= 1e-9);
        }
        CHECK(rep.ok());
    }
}

TEST_CASE("a wrong inverse fails the axiom check with a witness") {
    const auto spec = dsl::parse_group(with_clause("inverse", "(t);"));
    const auto rep = dsl::validate_axioms(spec, 100);
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (const auto& c : rep.checks)
        if (c.name == "inverse") {
            found = true;
            CHECK(c.outcome == dsl::AxiomCheck::Outcome::Failed);
            CHECK(c.witness.has_value());
        }
    CHECK(found);
}
