#include "lagrforge/symexpr/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "lagrforge/symexpr/calculus.hpp"

namespace lagrforge::sym {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(const Expr& atom, int exponent) {
    Monomial m;
    if (exponent != 0) m.factors_.emplace_back(atom, exponent);
    return m;
}

int Monomial::degree(const Expr& atom) const {
    for (const auto& [a, e] : factors_)
        if (identical(a, atom)) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

namespace {

template <typename Combine>
Monomial merge(const std::vector<std::pair<Expr, int>>& x, const std::vector<std::pair<Expr, int>>& y,
               Combine combine) {
    std::vector<std::pair<Expr, int>> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        int c;
        if (i == x.size()) c = 1;
        else if (j == y.size()) c = -1;
        else c = compare(x[i].first, y[j].first);
        int e;
        Expr atom;
        if (c < 0) {
            atom = x[i].first;
            e = combine(x[i].second, 0);
            ++i;
        } else if (c > 0) {
            atom = y[j].first;
            e = combine(0, y[j].second);
            ++j;
        } else {
            atom = x[i].first;
            e = combine(x[i].second, y[j].second);
            ++i;
            ++j;
        }
        if (e != 0) out.emplace_back(std::move(atom), e);
    }
    Monomial m;
    for (auto& f : out) m = m * Monomial::of(f.first, f.second);
    return m;
}

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.factors_.empty()) return b;
    if (b.factors_.empty()) return a;
    Monomial m;
    const auto& x = a.factors_;
    const auto& y = b.factors_;
    std::size_t i = 0, j = 0;
    m.factors_.reserve(x.size() + y.size());
    while (i < x.size() || j < y.size()) {
        int c;
        if (i == x.size()) c = 1;
        else if (j == y.size()) c = -1;
        else c = compare(x[i].first, y[j].first);
        if (c < 0) {
            m.factors_.push_back(x[i++]);
        } else if (c > 0) {
            m.factors_.push_back(y[j++]);
        } else {
            const int e = x[i].second + y[j].second;
            if (e != 0) m.factors_.emplace_back(x[i].first, e);
            ++i;
            ++j;
        }
    }
    return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial inv;
    inv.factors_ = b.factors_;
    for (auto& f : inv.factors_) f.second = -f.second;
    return a * inv;
}

bool Monomial::divides(const Monomial& other) const {
    for (const auto& [a, e] : factors_)
        if (other.degree(a) < e) return false;
    return true;
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
    return merge(a.factors_, b.factors_, [](int x, int y) { return std::min(x, y); });
}

Monomial Monomial::without(const Expr& atom) const {
    Monomial m;
    for (const auto& f : factors_)
        if (!identical(f.first, atom)) m.factors_.push_back(f);
    return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
    const auto& x = a.factors_;
    const auto& y = b.factors_;
    auto i = static_cast<std::ptrdiff_t>(x.size()) - 1;
    auto j = static_cast<std::ptrdiff_t>(y.size()) - 1;
    while (i >= 0 && j >= 0) {
        const int c = compare(x[i].first, y[j].first);
        if (c > 0) return x[i].second < 0;
        if (c < 0) return y[j].second > 0;
        if (x[i].second != y[j].second) return x[i].second < y[j].second;
        --i;
        --j;
    }
    if (i >= 0) return x[i].second < 0;
    if (j >= 0) return y[j].second > 0;
    return false;
}

bool operator==(const Monomial& a, const Monomial& b) {
    if (a.factors_.size() != b.factors_.size()) return false;
    for (std::size_t i = 0; i < a.factors_.size(); ++i)
        if (a.factors_[i].second != b.factors_[i].second || !identical(a.factors_[i].first, b.factors_[i].first))
            return false;
    return true;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
}

Polynomial Polynomial::atom(const Expr& atom) { return term(Monomial::of(atom), 1); }

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second;
}

const std::pair<const Monomial, Rational>& Polynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return *terms_.rbegin();
}

int Polynomial::degree(const Expr& atom) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree(atom));
    return d;
}

bool Polynomial::max_atom(Expr& out) const {
    bool found = false;
    for (const auto& t : terms_) {
        if (t.first.is_one()) continue;
        const Expr& a = t.first.factors().back().first;
        if (!found || compare(a, out) > 0) {
            out = a;
            found = true;
        }
    }
    return found;
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial m = terms_.begin()->first;
    for (const auto& t : terms_) m = Monomial::min(m, t.first);
    return m;
}

std::map<int, Polynomial> Polynomial::coefficients(const Expr& atom) const {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : terms_) out[m.degree(atom)].add_term(m.without(atom), c);
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() < b.terms_.size()) return b + a;
    Polynomial p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, c);
    return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, -c);
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return {};
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second *= c;
    return p;
}

Polynomial Polynomial::times(const Monomial& m) const {
    if (m.is_one()) return *this;
    Polynomial p;
    for (const auto& [mm, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), mm * m, c);
    return p;
}

Polynomial Polynomial::power(unsigned n) const {
    Polynomial result = constant(1);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return {};
    const Rational lc = leading().second;
    if (lc == 1) return *this;
    return scaled(1 / lc);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end(); ++i, ++j)
        if (i->second != j->second || !(i->first == j->first)) return false;
    return true;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (b.is_constant()) return a.scaled(1 / b.constant_value());
    if (b.is_monomial()) {
        const auto& [mb, cb] = b.leading();
        Polynomial q;
        for (const auto& [m, c] : a.terms()) {
            if (!mb.divides(m)) throw std::domain_error("inexact polynomial division");
            q.add_term(m / mb, c / cb);
        }
        return q;
    }
    const auto& [lm, lc] = b.leading();
    Polynomial q;
    Polynomial r = a;
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading();
        if (!lm.divides(rm)) throw std::domain_error("inexact polynomial division");
        const Monomial m = rm / lm;
        const Rational c = rc / lc;
        q.add_term(m, c);
        r = r - b.times(m).scaled(c);
    }
    return q;
}

namespace {

Polynomial content_in(const Polynomial& p, const Expr& v) {
    Polynomial g;
    for (const auto& [deg, coeff] : p.coefficients(v)) {
        g = gcd(g, coeff);
        if (g.is_constant()) return Polynomial::constant(1);
    }
    return g;
}

Polynomial primitive_in(const Polynomial& p, const Expr& v) {
    const Polynomial c = content_in(p, v);
    if (c.is_constant()) return p;
    return exact_divide(p, c);
}

Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g, const Expr& v) {
    const int dg = g.degree(v);
    const Polynomial lcg = g.coefficients(v).rbegin()->second;
    Polynomial r = f;
    while (!r.is_zero()) {
        const int dr = r.degree(v);
        if (dr < dg) break;
        const Polynomial lcr = r.coefficients(v).rbegin()->second;
        r = r * lcg - (lcr * g).times(Monomial::of(v, dr - dg));
    }
    return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(1);
    if (a.is_monomial() || b.is_monomial())
        return Polynomial::term(Monomial::min(a.monomial_content(), b.monomial_content()), 1);

    Expr va, vb;
    a.max_atom(va);
    b.max_atom(vb);
    const Expr v = compare(va, vb) >= 0 ? va : vb;
    if (!a.has(v)) return gcd(a, content_in(b, v));
    if (!b.has(v)) return gcd(content_in(a, v), b);

    const Polynomial ca = content_in(a, v);
    const Polynomial cb = content_in(b, v);
    Polynomial f = ca.is_constant() ? a : exact_divide(a, ca);
    Polynomial g = cb.is_constant() ? b : exact_divide(b, cb);
    const Polynomial c = gcd(ca, cb);
    if (f.degree(v) < g.degree(v)) std::swap(f, g);
    while (true) {
        const Polynomial r = pseudo_remainder(f, g, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            g = Polynomial::constant(1);
            break;
        }
        f = g;
        g = primitive_in(r, v);
    }
    g = primitive_in(g, v);
    return (c * g).monic();
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    if (!den_.is_constant()) {
        const Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
    }
    const Rational lc = den_.leading().second;
    if (lc != 1) {
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_constant()) return RationalFunction(a.num_ + b.num_);
        return RationalFunction(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_monomial() && b.den_.is_monomial()) {
        const Monomial& da = a.den_.leading().first;
        const Monomial& db = b.den_.leading().first;
        // lcm = da * db / min(da, db)
        const Monomial lcm = (da * db) / Monomial::min(da, db);
        return RationalFunction(a.num_.times(lcm / da) + b.num_.times(lcm / db), Polynomial::term(lcm, 1));
    }
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_constant() && b.den_.is_constant()) return RationalFunction(a.num_ * b.num_);
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw std::domain_error("division by zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::power(int n) const {
    if (n == 0) return RationalFunction(Polynomial::constant(1));
    if (n < 0) return inverse().power(-n);
    RationalFunction r;
    r.num_ = num_.power(static_cast<unsigned>(n));
    r.den_ = den_.power(static_cast<unsigned>(n));
    return r;
}

// ------------------------------------------------------ tree <-> normal form

RationalFunction to_rational_function(const Expr& e) {
    switch (e.kind()) {
    case Kind::Const:
        return RationalFunction(Polynomial::constant(e.value()));
    case Kind::Sym:
        return RationalFunction(Polynomial::atom(e));
    case Kind::Sin:
    case Kind::Cos: {
        const Expr a = canonicalize(e.arg());
        if (a.is_zero())
            return RationalFunction(Polynomial::constant(e.kind() == Kind::Sin ? 0 : 1));
        return RationalFunction(Polynomial::atom(e.kind() == Kind::Sin ? Expr::sin(a) : Expr::cos(a)));
    }
    case Kind::Pow:
        return to_rational_function(e.base()).power(e.exponent());
    case Kind::Add: {
        Polynomial plain;
        RationalFunction rest;
        for (const auto& op : e.operands()) {
            RationalFunction f = to_rational_function(op);
            if (f.den().is_constant()) plain = plain + f.num();
            else rest = rest + f;
        }
        return RationalFunction(plain) + rest;
    }
    case Kind::Mul: {
        RationalFunction acc(Polynomial::constant(1));
        for (const auto& op : e.operands()) {
            acc = acc * to_rational_function(op);
            if (acc.is_zero()) break;
        }
        return acc;
    }
    }
    return {};
}

namespace {

Expr term_to_expr(const Monomial& m, const Rational& c) {
    std::vector<Expr> factors;
    if (c != 1) factors.emplace_back(c);
    for (const auto& [atom, exp] : m.factors()) factors.push_back(exp == 1 ? atom : Expr::pow(atom, exp));
    if (factors.empty()) return Expr(1);
    std::sort(factors.begin(), factors.end(), ExprLess{});
    return Expr::mul(std::move(factors));
}

}  // namespace

Expr laurent_to_expr(const Polynomial& p, const Monomial& divisor) {
    std::vector<Expr> terms;
    terms.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) terms.push_back(term_to_expr(m / divisor, c));
    std::sort(terms.begin(), terms.end(), ExprLess{});
    return Expr::add(std::move(terms));
}

Expr from_rational_function(const RationalFunction& f) {
    if (f.is_zero()) return Expr(0);
    const Monomial m = f.den().monomial_content();
    const Expr numerator = laurent_to_expr(f.num(), m);
    if (f.den().is_monomial()) return numerator;
    const Polynomial rest = exact_divide(f.den(), Polynomial::term(m, 1));
    std::vector<Expr> factors;
    if (numerator.kind() == Kind::Mul) factors = numerator.operands();
    else if (!numerator.is_one()) factors.push_back(numerator);
    factors.push_back(Expr::pow(laurent_to_expr(rest, Monomial{}), -1));
    std::sort(factors.begin(), factors.end(), ExprLess{});
    return Expr::mul(std::move(factors));
}

}  // namespace lagrforge::sym
