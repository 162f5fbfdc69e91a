#include "lagrforge/symexpr/calculus.hpp"

#include <stdexcept>

#include "lagrforge/symexpr/polynomial.hpp"

namespace lagrforge::sym {

Expr canonicalize(const Expr& e) {
    if (e.kind() == Kind::Const || e.kind() == Kind::Sym) return e;
    return from_rational_function(to_rational_function(e));
}

namespace {

Expr diff_raw(const Expr& e, const Symbol& s) {
    switch (e.kind()) {
    case Kind::Const:
        return Expr(0);
    case Kind::Sym:
        return Expr(e.sym() == s ? 1 : 0);
    case Kind::Add: {
        std::vector<Expr> terms;
        for (const auto& op : e.operands()) {
            if (!depends_on(op, s)) continue;
            terms.push_back(diff_raw(op, s));
        }
        return Expr::add(std::move(terms));
    }
    case Kind::Mul: {
        const auto& ops = e.operands();
        std::vector<Expr> terms;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (!depends_on(ops[i], s)) continue;
            std::vector<Expr> factors;
            factors.reserve(ops.size());
            for (std::size_t j = 0; j < ops.size(); ++j) factors.push_back(i == j ? diff_raw(ops[j], s) : ops[j]);
            terms.push_back(Expr::mul(std::move(factors)));
        }
        return Expr::add(std::move(terms));
    }
    case Kind::Pow: {
        if (!depends_on(e.base(), s)) return Expr(0);
        const int n = e.exponent();
        std::vector<Expr> factors{Expr(n), diff_raw(e.base(), s)};
        if (n - 1 != 0) factors.push_back(Expr::pow(e.base(), n - 1));
        return Expr::mul(std::move(factors));
    }
    case Kind::Sin:
        if (!depends_on(e.arg(), s)) return Expr(0);
        return Expr::mul({Expr::cos(e.arg()), diff_raw(e.arg(), s)});
    case Kind::Cos:
        if (!depends_on(e.arg(), s)) return Expr(0);
        return Expr::mul({Expr(-1), Expr::sin(e.arg()), diff_raw(e.arg(), s)});
    }
    return Expr(0);
}

Expr subst_raw(const Expr& e, const Substitution& map) {
    switch (e.kind()) {
    case Kind::Const:
        return e;
    case Kind::Sym: {
        auto it = map.find(e.sym());
        return it == map.end() ? e : it->second;
    }
    case Kind::Pow:
        return Expr::pow(subst_raw(e.base(), map), e.exponent());
    case Kind::Sin:
        return Expr::sin(subst_raw(e.arg(), map));
    case Kind::Cos:
        return Expr::cos(subst_raw(e.arg(), map));
    case Kind::Add:
    case Kind::Mul: {
        std::vector<Expr> ops;
        ops.reserve(e.operands().size());
        for (const auto& op : e.operands()) ops.push_back(subst_raw(op, map));
        return e.kind() == Kind::Add ? Expr::add(std::move(ops)) : Expr::mul(std::move(ops));
    }
    }
    return e;
}

}  // namespace

Expr differentiate(const Expr& e, const Symbol& s) {
    if (!depends_on(e, s)) return Expr(0);
    return canonicalize(diff_raw(e, s));
}

Expr substitute(const Expr& e, const Substitution& map) {
    if (map.empty()) return canonicalize(e);
    return canonicalize(subst_raw(e, map));
}

AffineSplit split_affine(const Expr& e, const Symbol& s) {
    const Expr coefficient = differentiate(e, s);
    if (depends_on(coefficient, s))
        throw std::domain_error("expression is not affine-linear in " + s.name);
    return {coefficient, substitute(e, {{s, Expr(0)}})};
}

}  // namespace lagrforge::sym
