#pragma once

// Sparse multivariate polynomials over Q whose generators are canonical atoms
// (symbols, sin(.), cos(.), and irreducible-looking compound denominators are
// never generators). This is the normal form behind canonicalize().

#include <map>
#include <utility>
#include <vector>

#include "lagrforge/symexpr/expr.hpp"

namespace lagrforge::sym {

/// Product of atoms raised to integer powers; factors sorted by atom order,
/// no zero exponents.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(const Expr& atom, int exponent = 1);

    const std::vector<std::pair<Expr, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree(const Expr& atom) const;
    int total_degree() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// a / b; exponents may become negative.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    bool divides(const Monomial& other) const;
    /// Componentwise minimum of exponents (negative exponents allowed).
    static Monomial min(const Monomial& a, const Monomial& b);
    Monomial without(const Expr& atom) const;

    /// Lexicographic order with the largest atom most significant.
    friend bool operator<(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<Expr, int>> factors_;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    static Polynomial constant(const Rational& c);
    static Polynomial atom(const Expr& atom);
    static Polynomial term(const Monomial& m, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_value() const;  // requires is_constant()

    /// Largest term under the lex order.
    const std::pair<const Monomial, Rational>& leading() const;
    int degree(const Expr& atom) const;
    bool has(const Expr& atom) const { return degree(atom) > 0; }
    /// Largest atom occurring, or nullptr-equivalent (false) when constant.
    bool max_atom(Expr& out) const;
    /// Monomial gcd of all terms.
    Monomial monomial_content() const;
    /// Coefficients as a polynomial in `atom`: degree -> coefficient.
    std::map<int, Polynomial> coefficients(const Expr& atom) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial times(const Monomial& m) const;
    Polynomial power(unsigned n) const;
    void add_term(const Monomial& m, const Rational& c);

    /// Divides by the leading coefficient.
    Polynomial monic() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    Terms terms_;
};

/// Exact division; throws std::domain_error when `b` does not divide `a`.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor over Q (gcd(0,0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// num/den with gcd(num, den) = 1, den monic, den = 1 when num = 0.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    explicit RationalFunction(Polynomial num);
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction power(int n) const;

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

/// Expression -> normal form. Sums, products and powers are expanded; sin/cos
/// arguments are canonicalized recursively and the trig node becomes an atom.
RationalFunction to_rational_function(const Expr& e);

/// Normal form -> canonical expression tree.
Expr from_rational_function(const RationalFunction& f);

/// Tree for a polynomial whose monomials may carry negative exponents.
Expr laurent_to_expr(const Polynomial& p, const Monomial& divisor);

}  // namespace lagrforge::sym
