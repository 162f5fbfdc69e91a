#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lagrforge::sym {

using Rational = mpq_class;

/// Role of a symbol inside a derivation context. The enumeration order is the
/// order used when sorting symbols in canonical products and sums.
enum class Role : std::uint8_t {
    FreeParam,     ///< free parameter of a Lagrangian family (a1, a2, ...)
    Unknown,       ///< ansatz coefficient
    GroupParam,    ///< group parameter g^i (also lhs./rhs. factors)
    BaseCoord,     ///< base coordinate X^alpha
    FieldVar,      ///< field variable X'^alpha
    JetVar,        ///< jet variable X'^alpha_i
};

const char* role_name(Role role);

struct Symbol {
    std::string name;
    Role role = Role::BaseCoord;
    int alpha = -1;  ///< coordinate index (field and jet variables), 0-based
    int index = -1;  ///< parameter index (jet variables and group params), 0-based

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.role == b.role && a.name == b.name;
    }
    friend bool operator<(const Symbol& a, const Symbol& b) {
        if (a.role != b.role) return a.role < b.role;
        return a.name < b.name;
    }
};

/// Node kinds, listed in canonical order: constants < symbols < powers <
/// trig atoms < products < sums.
enum class Kind : std::uint8_t { Const, Sym, Pow, Sin, Cos, Mul, Add };

class Expr;
struct Node;

/// Immutable expression tree. Copies share structure.
class Expr {
public:
    Expr();  // zero
    Expr(int value);  // NOLINT(google-explicit-constructor)
    Expr(long value);  // NOLINT(google-explicit-constructor)
    Expr(const Rational& value);  // NOLINT(google-explicit-constructor)
    explicit Expr(const Symbol& symbol);

    static Expr constant(const Rational& value);
    static Expr symbol(Symbol symbol);
    static Expr symbol(std::string name, Role role);
    static Expr add(std::vector<Expr> operands);
    static Expr mul(std::vector<Expr> operands);
    static Expr pow(Expr base, int exponent);
    static Expr sin(Expr arg);
    static Expr cos(Expr arg);

    Kind kind() const;
    bool is_const() const { return kind() == Kind::Const; }
    bool is_symbol() const { return kind() == Kind::Sym; }
    bool is_zero() const;
    bool is_one() const;

    const Rational& value() const;             // Const
    const Symbol& sym() const;                 // Sym
    int exponent() const;                      // Pow
    const Expr& base() const;                  // Pow
    const Expr& arg() const;                   // Sin, Cos
    const std::vector<Expr>& operands() const; // Add, Mul (and the single child of Pow/Sin/Cos)

    std::size_t hash() const;
    const Node* node() const { return node_.get(); }

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Total order on expression trees (structural). Returns <0, 0, >0.
int compare(const Expr& a, const Expr& b);

/// Structural identity.
bool identical(const Expr& a, const Expr& b);

struct ExprLess {
    bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};

// Raw (non-canonical) builders; canonicalize() normalizes the result.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr pow(const Expr& base, int exponent);
Expr sin(const Expr& arg);
Expr cos(const Expr& arg);

/// Symbols occurring in `e`, ordered by (role, name).
std::set<Symbol> free_symbols(const Expr& e);
bool depends_on(const Expr& e, const Symbol& s);

/// Number of nodes in the tree.
std::size_t tree_size(const Expr& e);

// Printers (print.cpp).

/// Stable parenthesized prefix notation, e.g. "(+ (* -1 X2') X1'_g)".
std::string to_prefix(const Expr& e);

/// Human-readable infix that the group DSL parser accepts back.
std::string to_infix(const Expr& e);

struct LatexStyle {
    bool dot_jets = false;  ///< render jets of one-parameter groups as \dot{X}'^{a}
};
std::string to_latex(const Expr& e, const LatexStyle& style = {});
std::string latex_symbol(const Symbol& s, const LatexStyle& style = {});

std::string rational_to_string(const Rational& q);

}  // namespace lagrforge::sym
