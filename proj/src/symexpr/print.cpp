#include <cctype>
#include <sstream>

#include "lagrforge/symexpr/expr.hpp"

namespace lagrforge::sym {

std::string rational_to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

// ------------------------------------------------------------------ prefix

namespace {

void prefix(const Expr& e, std::ostringstream& os) {
    switch (e.kind()) {
    case Kind::Const:
        os << rational_to_string(e.value());
        return;
    case Kind::Sym:
        os << e.sym().name;
        return;
    case Kind::Pow:
        os << "(^ ";
        prefix(e.base(), os);
        os << ' ' << e.exponent() << ')';
        return;
    case Kind::Sin:
    case Kind::Cos:
        os << (e.kind() == Kind::Sin ? "(sin " : "(cos ");
        prefix(e.arg(), os);
        os << ')';
        return;
    case Kind::Add:
    case Kind::Mul:
        os << (e.kind() == Kind::Add ? "(+" : "(*");
        for (const auto& op : e.operands()) {
            os << ' ';
            prefix(op, os);
        }
        os << ')';
        return;
    }
}

// -------------------------------------------------- shared infix machinery

// A product split into sign, |coefficient|, and factors above/below the bar.
struct Fraction {
    bool negative = false;
    Rational coeff = 1;
    std::vector<Expr> upper;
    std::vector<Expr> lower;  // stored with positive exponents
};

Fraction split_product(const Expr& e) {
    Fraction f;
    auto absorb = [&f](const Expr& x) {
        if (x.kind() == Kind::Const) {
            f.coeff *= x.value();
        } else if (x.kind() == Kind::Pow && x.exponent() < 0) {
            f.lower.push_back(pow(x.base(), -x.exponent()));
        } else {
            f.upper.push_back(x);
        }
    };
    if (e.kind() == Kind::Mul) {
        for (const auto& op : e.operands()) absorb(op);
    } else {
        absorb(e);
    }
    if (f.coeff < 0) {
        f.negative = true;
        f.coeff = -f.coeff;
    }
    return f;
}

bool is_negative_term(const Expr& e) {
    if (e.kind() == Kind::Const) return e.value() < 0;
    if (e.kind() == Kind::Mul) return split_product(e).negative;
    return false;
}

Expr negate_term(const Expr& e) {
    if (e.kind() == Kind::Const) return Expr(Rational(-e.value()));
    std::vector<Expr> ops;
    for (const auto& op : e.operands()) {
        if (op.kind() == Kind::Const) {
            if (op.value() != -1) ops.emplace_back(Rational(-op.value()));
        } else {
            ops.push_back(op);
        }
    }
    return Expr::mul(std::move(ops));
}

// ------------------------------------------------------------------- infix

int infix_prec(const Expr& e) {
    switch (e.kind()) {
    case Kind::Add: return 1;
    case Kind::Mul: return 2;
    case Kind::Const: return e.value().get_den() == 1 && e.value() >= 0 ? 4 : 2;
    case Kind::Pow: return e.exponent() < 0 ? 2 : 3;
    default: return 4;
    }
}

std::string infix(const Expr& e);

std::string infix_wrapped(const Expr& e, int min_prec) {
    const std::string s = infix(e);
    return infix_prec(e) < min_prec ? "(" + s + ")" : s;
}

std::string infix_factors(const std::vector<Expr>& fs) {
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += "*";
        out += infix_wrapped(fs[i], 3);
    }
    return out;
}

std::string infix_product(const Fraction& f) {
    std::string num;
    if (!f.upper.empty()) {
        num = infix_factors(f.upper);
        if (f.coeff.get_num() != 1) num = f.coeff.get_num().get_str() + "*" + num;
    } else {
        num = f.coeff.get_num().get_str();
    }
    std::vector<std::string> den_parts;
    if (f.coeff.get_den() != 1) den_parts.push_back(f.coeff.get_den().get_str());
    for (const auto& x : f.lower) den_parts.push_back(infix_wrapped(x, 3));
    std::string out = (f.negative ? "-" : "") + num;
    if (!den_parts.empty()) {
        std::string den;
        for (std::size_t i = 0; i < den_parts.size(); ++i) den += (i ? "*" : "") + den_parts[i];
        out += "/" + (den_parts.size() > 1 ? "(" + den + ")" : den);
    }
    return out;
}

std::string infix(const Expr& e) {
    switch (e.kind()) {
    case Kind::Const:
        return rational_to_string(e.value());
    case Kind::Sym:
        return e.sym().name;
    case Kind::Pow:
        if (e.exponent() < 0) return infix_product(split_product(e));
        return infix_wrapped(e.base(), 4) + "^" + std::to_string(e.exponent());
    case Kind::Sin:
        return "sin(" + infix(e.arg()) + ")";
    case Kind::Cos:
        return "cos(" + infix(e.arg()) + ")";
    case Kind::Mul:
        return infix_product(split_product(e));
    case Kind::Add: {
        std::string out;
        bool first = true;
        for (const auto& op : e.operands()) {
            if (first) {
                out = infix(op);
                first = false;
            } else if (is_negative_term(op)) {
                out += " - " + infix_wrapped(negate_term(op), 2);
            } else {
                out += " + " + infix_wrapped(op, 2);
            }
        }
        return out;
    }
    }
    return {};
}

// ------------------------------------------------------------------- latex

std::pair<std::string, std::string> split_digits(const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    if (k == 0 || k == s.size()) return {s, ""};
    return {s.substr(0, k), s.substr(k)};
}

std::string latex(const Expr& e, const LatexStyle& st);

std::string latex_wrapped(const Expr& e, int min_prec, const LatexStyle& st) {
    const std::string s = latex(e, st);
    return infix_prec(e) < min_prec ? "\\left(" + s + "\\right)" : s;
}

std::string latex_factors(const std::vector<Expr>& fs, const LatexStyle& st) {
    std::string out;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) out += " ";
        out += latex_wrapped(fs[i], 3, st);
    }
    return out;
}

std::string latex_product(const Fraction& f, const LatexStyle& st) {
    std::string num = latex_factors(f.upper, st);
    if (f.coeff.get_num() != 1 || num.empty()) num = f.coeff.get_num().get_str() + (num.empty() ? "" : " " + num);
    std::vector<Expr> lower = f.lower;
    std::string den = latex_factors(lower, st);
    if (f.coeff.get_den() != 1) den = f.coeff.get_den().get_str() + (den.empty() ? "" : " " + den);
    std::string out = f.negative ? "-" : "";
    if (den.empty()) return out + num;
    return out + "\\frac{" + num + "}{" + den + "}";
}

std::string latex(const Expr& e, const LatexStyle& st) {
    switch (e.kind()) {
    case Kind::Const: {
        const Rational& q = e.value();
        if (q.get_den() == 1) return q.get_num().get_str();
        return std::string(q < 0 ? "-" : "") + "\\frac{" + Rational(abs(q)).get_num().get_str() + "}{" +
               q.get_den().get_str() + "}";
    }
    case Kind::Sym:
        return latex_symbol(e.sym(), st);
    case Kind::Pow: {
        if (e.exponent() < 0) return latex_product(split_product(e), st);
        std::string b = latex_wrapped(e.base(), 4, st);
        if (e.base().kind() == Kind::Sym && b.find('^') != std::string::npos) b = "\\left(" + b + "\\right)";
        return b + "^{" + std::to_string(e.exponent()) + "}";
    }
    case Kind::Sin:
        return "\\sin\\left(" + latex(e.arg(), st) + "\\right)";
    case Kind::Cos:
        return "\\cos\\left(" + latex(e.arg(), st) + "\\right)";
    case Kind::Mul:
        return latex_product(split_product(e), st);
    case Kind::Add: {
        std::string out;
        bool first = true;
        for (const auto& op : e.operands()) {
            if (first) {
                out = latex(op, st);
                first = false;
            } else if (is_negative_term(op)) {
                out += " - " + latex_wrapped(negate_term(op), 2, st);
            } else {
                out += " + " + latex_wrapped(op, 2, st);
            }
        }
        return out;
    }
    }
    return {};
}

}  // namespace

std::string to_prefix(const Expr& e) {
    std::ostringstream os;
    prefix(e, os);
    return os.str();
}

std::string to_infix(const Expr& e) { return infix(e); }

std::string to_latex(const Expr& e, const LatexStyle& style) { return latex(e, style); }

std::string latex_symbol(const Symbol& s, const LatexStyle& style) {
    switch (s.role) {
    case Role::FreeParam: {
        auto [stem, digits] = split_digits(s.name);
        if (stem == "a" && !digits.empty()) return "\\alpha_{" + digits + "}";
        return digits.empty() ? stem : stem + "_{" + digits + "}";
    }
    case Role::FieldVar:
    case Role::JetVar: {
        const auto tick = s.name.find('\'');
        auto [stem, digits] = split_digits(s.name.substr(0, tick));
        std::string core = stem + "'" + (digits.empty() ? "" : "^{" + digits + "}");
        if (s.role == Role::FieldVar) return core;
        if (style.dot_jets) return "\\dot{" + stem + "}'" + (digits.empty() ? "" : "^{" + digits + "}");
        return core + "_{" + std::to_string(s.index + 1) + "}";
    }
    case Role::Unknown:
        return "c_{" + s.name.substr(s.name.find('_') == std::string::npos ? 0 : s.name.find('_') + 1) + "}";
    default: {
        const auto dot = s.name.find('.');
        if (dot != std::string::npos) {
            auto [stem, digits] = split_digits(s.name.substr(dot + 1));
            return (digits.empty() ? stem : stem + "^{" + digits + "}") + "_{\\mathrm{" + s.name.substr(0, dot) + "}}";
        }
        auto [stem, digits] = split_digits(s.name);
        return digits.empty() ? stem : stem + "^{" + digits + "}";
    }
    }
}

}  // namespace lagrforge::sym
