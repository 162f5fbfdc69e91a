#include "lagrforge/symexpr/expr.hpp"

#include <functional>
#include <stdexcept>

#include "node.hpp"

namespace lagrforge::sym {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::shared_ptr<const Node> finish(Node n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 1000003u;
    switch (n.kind) {
    case Kind::Const:
        h = mix(h, std::hash<std::string>{}(n.value.get_str()));
        break;
    case Kind::Sym:
        h = mix(h, std::hash<std::string>{}(n.symbol.name));
        h = mix(h, static_cast<std::size_t>(n.symbol.role));
        break;
    case Kind::Pow:
        h = mix(h, static_cast<std::size_t>(n.exponent + 7919));
        [[fallthrough]];
    default:
        for (const auto& a : n.args) h = mix(h, a.hash());
    }
    n.hash = h;
    return std::make_shared<const Node>(std::move(n));
}

const std::shared_ptr<const Node>& zero_node() {
    static const auto z = [] {
        Node n;
        n.kind = Kind::Const;
        n.value = 0;
        return finish(std::move(n));
    }();
    return z;
}

}  // namespace

const char* role_name(Role role) {
    switch (role) {
    case Role::FreeParam: return "free-parameter";
    case Role::Unknown: return "ansatz-unknown";
    case Role::GroupParam: return "group-parameter";
    case Role::BaseCoord: return "base-coordinate";
    case Role::FieldVar: return "field-variable";
    case Role::JetVar: return "jet-variable";
    }
    return "?";
}

Expr::Expr() : node_(zero_node()) {}
Expr::Expr(int value) : Expr(Rational(value)) {}
Expr::Expr(long value) : Expr(Rational(value)) {}
Expr::Expr(const Rational& value) {
    if (value == 0) {
        node_ = zero_node();
        return;
    }
    Node n;
    n.kind = Kind::Const;
    n.value = value;
    n.value.canonicalize();
    node_ = finish(std::move(n));
}
Expr::Expr(const Symbol& symbol) {
    Node n;
    n.kind = Kind::Sym;
    n.symbol = symbol;
    node_ = finish(std::move(n));
}

Expr Expr::constant(const Rational& value) { return Expr(value); }
Expr Expr::symbol(Symbol symbol) { return Expr(symbol); }
Expr Expr::symbol(std::string name, Role role) {
    Symbol s;
    s.name = std::move(name);
    s.role = role;
    return Expr(s);
}

Expr Expr::add(std::vector<Expr> operands) {
    if (operands.empty()) return Expr(0);
    if (operands.size() == 1) return operands.front();
    Node n;
    n.kind = Kind::Add;
    n.args = std::move(operands);
    return Expr(finish(std::move(n)));
}

Expr Expr::mul(std::vector<Expr> operands) {
    if (operands.empty()) return Expr(1);
    if (operands.size() == 1) return operands.front();
    Node n;
    n.kind = Kind::Mul;
    n.args = std::move(operands);
    return Expr(finish(std::move(n)));
}

Expr Expr::pow(Expr base, int exponent) {
    if (exponent == 0) throw std::invalid_argument("Expr::pow: exponent must be nonzero");
    if (exponent == 1) return base;
    Node n;
    n.kind = Kind::Pow;
    n.exponent = exponent;
    n.args.push_back(std::move(base));
    return Expr(finish(std::move(n)));
}

Expr Expr::sin(Expr arg) {
    Node n;
    n.kind = Kind::Sin;
    n.args.push_back(std::move(arg));
    return Expr(finish(std::move(n)));
}

Expr Expr::cos(Expr arg) {
    Node n;
    n.kind = Kind::Cos;
    n.args.push_back(std::move(arg));
    return Expr(finish(std::move(n)));
}

Kind Expr::kind() const { return node_->kind; }
bool Expr::is_zero() const { return node_->kind == Kind::Const && node_->value == 0; }
bool Expr::is_one() const { return node_->kind == Kind::Const && node_->value == 1; }
const Rational& Expr::value() const { return node_->value; }
const Symbol& Expr::sym() const { return node_->symbol; }
int Expr::exponent() const { return node_->exponent; }
const Expr& Expr::base() const { return node_->args.at(0); }
const Expr& Expr::arg() const { return node_->args.at(0); }
const std::vector<Expr>& Expr::operands() const { return node_->args; }
std::size_t Expr::hash() const { return node_->hash; }

int compare(const Expr& a, const Expr& b) {
    if (a.node() == b.node()) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
    case Kind::Const:
        return cmp(a.value(), b.value());
    case Kind::Sym:
        if (a.sym().role != b.sym().role) return a.sym().role < b.sym().role ? -1 : 1;
        return a.sym().name.compare(b.sym().name) < 0 ? -1 : (a.sym().name == b.sym().name ? 0 : 1);
    case Kind::Pow: {
        int c = compare(a.base(), b.base());
        if (c != 0) return c;
        return a.exponent() < b.exponent() ? -1 : (a.exponent() > b.exponent() ? 1 : 0);
    }
    case Kind::Sin:
    case Kind::Cos:
        return compare(a.arg(), b.arg());
    case Kind::Mul:
    case Kind::Add: {
        const auto& x = a.operands();
        const auto& y = b.operands();
        const std::size_t m = std::min(x.size(), y.size());
        for (std::size_t i = 0; i < m; ++i) {
            int c = compare(x[i], y[i]);
            if (c != 0) return c;
        }
        if (x.size() == y.size()) return 0;
        return x.size() < y.size() ? -1 : 1;
    }
    }
    return 0;
}

bool identical(const Expr& a, const Expr& b) {
    if (a.node() == b.node()) return true;
    if (a.hash() != b.hash()) return false;
    return compare(a, b) == 0;
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::add({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::add({a, -b}); }
Expr operator-(const Expr& a) {
    if (a.is_const()) return Expr(Rational(-a.value()));
    return Expr::mul({Expr(-1), a});
}
Expr operator*(const Expr& a, const Expr& b) { return Expr::mul({a, b}); }
Expr operator/(const Expr& a, const Expr& b) {
    if (b.is_const()) {
        if (b.value() == 0) throw std::domain_error("division by the constant 0");
        return Expr::mul({a, Expr(Rational(1 / b.value()))});
    }
    return Expr::mul({a, Expr::pow(b, -1)});
}
Expr pow(const Expr& base, int exponent) {
    if (exponent == 0) return Expr(1);
    return Expr::pow(base, exponent);
}
Expr sin(const Expr& arg) { return Expr::sin(arg); }
Expr cos(const Expr& arg) { return Expr::cos(arg); }

namespace {
void collect(const Expr& e, std::set<Symbol>& out) {
    if (e.kind() == Kind::Sym) {
        out.insert(e.sym());
        return;
    }
    for (const auto& c : e.operands()) collect(c, out);
}
}  // namespace

std::set<Symbol> free_symbols(const Expr& e) {
    std::set<Symbol> out;
    collect(e, out);
    return out;
}

bool depends_on(const Expr& e, const Symbol& s) {
    if (e.kind() == Kind::Sym) return e.sym() == s;
    for (const auto& c : e.operands())
        if (depends_on(c, s)) return true;
    return false;
}

std::size_t tree_size(const Expr& e) {
    std::size_t n = 1;
    for (const auto& c : e.operands()) n += tree_size(c);
    return n;
}

}  // namespace lagrforge::sym
