#include <set>

#include "lagrforge/symexpr/calculus.hpp"
#include "lexer.hpp"

namespace lagrforge::dsl {

namespace {

// Formula syntax tree; names are resolved once all clauses are known.
struct Ast {
    enum class K { Int, Name, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos };
    K kind = K::Int;
    std::string text;    // integer digits or identifier
    std::string prefix;  // "lhs" / "rhs" for qualified names
    int exponent = 0;
    SourcePos pos;
    std::vector<Ast> kids;
};

struct Clause {
    std::string keyword;
    SourcePos pos;
    std::vector<Token> names;  // params / coords
    std::vector<Ast> tuple;    // formula clauses
};

const std::set<std::string> kFormulaClauses{"identity", "inverse", "multiply", "action"};
const std::set<std::string> kReserved{"group", "params", "coords", "identity", "inverse",
                                      "multiply", "action", "sin", "cos", "lhs", "rhs"};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    GroupActionSpec run();

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
    bool at_punct(const char* p) const { return peek().kind == Token::Kind::Punct && peek().text == p; }
    bool at_ident(const char* s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::string msg = "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", found " + describe(peek());
        throw DslError(DslError::Kind::Syntax, peek().pos, msg, std::move(expected));
    }

    const Token& expect_punct(const char* p) {
        if (!at_punct(p)) fail({std::string("'") + p + "'"});
        return take();
    }

    const Token& expect_ident() {
        if (peek().kind != Token::Kind::Ident) fail({"identifier"});
        return take();
    }

    Clause clause();
    Ast expr();
    Ast term();
    Ast unary();
    Ast power();
    Ast primary();

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

Clause Parser::clause() {
    static const std::vector<std::string> keywords{"'params'", "'coords'", "'identity'",
                                                   "'inverse'", "'multiply'", "'action'"};
    if (peek().kind != Token::Kind::Ident) fail(keywords);
    const std::string kw = peek().text;
    if (kw != "params" && kw != "coords" && !kFormulaClauses.count(kw)) fail(keywords);
    Clause c;
    c.keyword = kw;
    c.pos = take().pos;
    expect_punct(":");
    if (kw == "params" || kw == "coords") {
        c.names.push_back(expect_ident());
        while (at_punct(",")) {
            take();
            c.names.push_back(expect_ident());
        }
    } else {
        expect_punct("(");
        c.tuple.push_back(expr());
        while (at_punct(",")) {
            take();
            if (at_punct(")")) break;  // trailing comma
            c.tuple.push_back(expr());
        }
        if (!at_punct(")")) fail({"','", "')'"});
        take();
    }
    if (!at_punct(";")) fail({"';'"});
    take();
    return c;
}

Ast Parser::expr() {
    Ast lhs = term();
    while (at_punct("+") || at_punct("-")) {
        const Token& op = take();
        Ast node;
        node.kind = op.text == "+" ? Ast::K::Add : Ast::K::Sub;
        node.pos = op.pos;
        node.kids.push_back(std::move(lhs));
        node.kids.push_back(term());
        lhs = std::move(node);
    }
    return lhs;
}

Ast Parser::term() {
    Ast lhs = unary();
    while (at_punct("*") || at_punct("/")) {
        const Token& op = take();
        Ast node;
        node.kind = op.text == "*" ? Ast::K::Mul : Ast::K::Div;
        node.pos = op.pos;
        node.kids.push_back(std::move(lhs));
        node.kids.push_back(unary());
        lhs = std::move(node);
    }
    return lhs;
}

Ast Parser::unary() {
    if (at_punct("-")) {
        Ast node;
        node.kind = Ast::K::Neg;
        node.pos = take().pos;
        node.kids.push_back(unary());
        return node;
    }
    return power();
}

Ast Parser::power() {
    Ast base = primary();
    if (!at_punct("^")) return base;
    Ast node;
    node.kind = Ast::K::Pow;
    node.pos = take().pos;
    const bool paren = at_punct("(");
    if (paren) take();
    bool negative = false;
    if (at_punct("-")) {
        take();
        negative = true;
    }
    if (peek().kind != Token::Kind::Integer) fail({"integer exponent"});
    const Token& t = take();
    if (t.text.size() > 6) throw DslError(DslError::Kind::Syntax, t.pos, "exponent too large");
    node.exponent = std::stoi(t.text) * (negative ? -1 : 1);
    if (paren) expect_punct(")");
    if (node.exponent == 0) throw DslError(DslError::Kind::Syntax, t.pos, "exponent must be nonzero");
    node.kids.push_back(std::move(base));
    return node;
}

Ast Parser::primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Integer) {
        Ast node;
        node.kind = Ast::K::Int;
        node.text = t.text;
        node.pos = t.pos;
        take();
        return node;
    }
    if (t.kind == Token::Kind::Ident) {
        Ast node;
        node.pos = t.pos;
        if (t.text == "sin" || t.text == "cos") {
            node.kind = t.text == "sin" ? Ast::K::Sin : Ast::K::Cos;
            take();
            expect_punct("(");
            node.kids.push_back(expr());
            expect_punct(")");
            return node;
        }
        node.kind = Ast::K::Name;
        if (t.text == "lhs" || t.text == "rhs") {
            node.prefix = t.text;
            take();
            expect_punct(".");
            node.text = expect_ident().text;
            return node;
        }
        node.text = t.text;
        take();
        if (at_punct("("))
            throw DslError(DslError::Kind::UndeclaredSymbol, node.pos,
                           "unknown function '" + node.text + "'; only sin and cos are available");
        return node;
    }
    if (at_punct("(")) {
        take();
        Ast inner = expr();
        expect_punct(")");
        return inner;
    }
    fail({"integer", "identifier", "'sin'", "'cos'", "'lhs.'", "'rhs.'", "'('", "'-'"});
}

Expr resolve(const Ast& a, const std::map<std::string, Symbol>& allowed, const std::string& clause) {
    switch (a.kind) {
    case Ast::K::Int:
        return Expr(sym::Rational(mpz_class(a.text)));
    case Ast::K::Name: {
        const std::string full = a.prefix.empty() ? a.text : a.prefix + "." + a.text;
        auto it = allowed.find(full);
        if (it == allowed.end())
            throw DslError(DslError::Kind::UndeclaredSymbol, a.pos,
                           "symbol '" + full + "' is not declared or not permitted in '" + clause + "'");
        return Expr(it->second);
    }
    case Ast::K::Neg:
        return -resolve(a.kids[0], allowed, clause);
    case Ast::K::Add:
        return resolve(a.kids[0], allowed, clause) + resolve(a.kids[1], allowed, clause);
    case Ast::K::Sub:
        return resolve(a.kids[0], allowed, clause) - resolve(a.kids[1], allowed, clause);
    case Ast::K::Mul:
        return resolve(a.kids[0], allowed, clause) * resolve(a.kids[1], allowed, clause);
    case Ast::K::Div: {
        const Expr den = sym::canonicalize(resolve(a.kids[1], allowed, clause));
        if (den.is_zero()) throw DslError(DslError::Kind::Syntax, a.pos, "division by zero");
        return resolve(a.kids[0], allowed, clause) / den;
    }
    case Ast::K::Pow: {
        const Expr base = sym::canonicalize(resolve(a.kids[0], allowed, clause));
        if (base.is_zero() && a.exponent < 0) throw DslError(DslError::Kind::Syntax, a.pos, "division by zero");
        return sym::pow(base, a.exponent);
    }
    case Ast::K::Sin:
        return sym::sin(resolve(a.kids[0], allowed, clause));
    case Ast::K::Cos:
        return sym::cos(resolve(a.kids[0], allowed, clause));
    }
    return Expr(0);
}

GroupActionSpec Parser::run() {
    GroupActionSpec spec;
    if (!at_ident("group")) fail({"'group'"});
    take();
    spec.name = expect_ident().text;
    expect_punct("{");

    std::map<std::string, Clause> clauses;
    do {
        Clause c = clause();
        if (clauses.count(c.keyword))
            throw DslError(DslError::Kind::DuplicateClause, c.pos, "duplicate clause '" + c.keyword + "'");
        spec.clause_positions[c.keyword] = c.pos;
        std::string kw = c.keyword;
        clauses.emplace(std::move(kw), std::move(c));
    } while (!at_punct("}"));
    const SourcePos close = take().pos;
    if (peek().kind != Token::Kind::End) fail({"end of input"});

    for (const char* kw : {"params", "coords", "identity", "inverse", "multiply", "action"})
        if (!clauses.count(kw))
            throw DslError(DslError::Kind::MissingClause, close, std::string("missing clause '") + kw + "'");

    std::set<std::string> seen;
    auto declare = [&](const Token& t) {
        if (kReserved.count(t.text))
            throw DslError(DslError::Kind::Syntax, t.pos, "'" + t.text + "' is a reserved word");
        if (!seen.insert(t.text).second)
            throw DslError(DslError::Kind::Syntax, t.pos, "duplicate name '" + t.text + "'");
    };
    for (const auto& t : clauses.at("params").names) {
        declare(t);
        Symbol s{t.text, sym::Role::GroupParam, -1, static_cast<int>(spec.params.size())};
        spec.params.push_back(s);
    }
    for (const auto& t : clauses.at("coords").names) {
        declare(t);
        Symbol s{t.text, sym::Role::BaseCoord, static_cast<int>(spec.coords.size()), -1};
        spec.coords.push_back(s);
    }

    std::map<std::string, std::map<std::string, Symbol>> allowed;
    allowed["identity"];
    for (const auto& p : spec.params) allowed["inverse"][p.name] = p;
    for (std::size_t i = 0; i < spec.r(); ++i) {
        allowed["multiply"][spec.lhs(i).name] = spec.lhs(i);
        allowed["multiply"][spec.rhs(i).name] = spec.rhs(i);
    }
    for (const auto& p : spec.params) allowed["action"][p.name] = p;
    for (const auto& x : spec.coords) allowed["action"][x.name] = x;

    auto build = [&](const char* kw, std::size_t arity, std::vector<Expr>& out) {
        const Clause& c = clauses.at(kw);
        if (c.tuple.size() != arity)
            throw DslError(DslError::Kind::ArityMismatch, c.pos,
                           std::string("clause '") + kw + "' has " + std::to_string(c.tuple.size()) +
                               " entries, expected " + std::to_string(arity));
        for (const auto& a : c.tuple) out.push_back(sym::canonicalize(resolve(a, allowed.at(kw), kw)));
    };
    build("identity", spec.r(), spec.identity);
    build("inverse", spec.r(), spec.inverse);
    build("multiply", spec.r(), spec.multiply);
    build("action", spec.n(), spec.action);
    return spec;
}

}  // namespace

GroupActionSpec parse_group(std::string_view source) { return Parser(tokenize(source)).run(); }

}  // namespace lagrforge::dsl
