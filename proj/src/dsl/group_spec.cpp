#include "lagrforge/dsl/group_spec.hpp"

#include <sstream>

namespace lagrforge::dsl {

namespace {

std::string format_error(DslError::Kind kind, SourcePos pos, const std::string& message) {
    return std::string(dsl_error_kind_name(kind)) + " at line " + std::to_string(pos.line) + ", column " +
           std::to_string(pos.column) + ": " + message;
}

}  // namespace

DslError::DslError(Kind kind, SourcePos pos, const std::string& message, std::vector<std::string> expected)
    : std::runtime_error(format_error(kind, pos, message)),
      kind_(kind),
      pos_(pos),
      detail_(message),
      expected_(std::move(expected)) {}

const char* dsl_error_kind_name(DslError::Kind kind) {
    switch (kind) {
    case DslError::Kind::Syntax: return "SyntaxError";
    case DslError::Kind::UndeclaredSymbol: return "UndeclaredSymbol";
    case DslError::Kind::ArityMismatch: return "ArityMismatch";
    case DslError::Kind::DuplicateClause: return "DuplicateClause";
    case DslError::Kind::MissingClause: return "MissingClause";
    }
    return "?";
}

Symbol GroupActionSpec::lhs(std::size_t i) const {
    return Symbol{"lhs." + params.at(i).name, sym::Role::GroupParam, -1, static_cast<int>(i)};
}

Symbol GroupActionSpec::rhs(std::size_t i) const {
    return Symbol{"rhs." + params.at(i).name, sym::Role::GroupParam, -1, static_cast<int>(i)};
}

std::string pretty_print(const GroupActionSpec& spec) {
    std::ostringstream os;
    auto names = [&os](const std::vector<Symbol>& xs) {
        for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i].name;
    };
    auto tuple = [&os](const std::vector<Expr>& xs) {
        os << '(';
        for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << sym::to_infix(xs[i]);
        os << ')';
    };
    os << "group " << spec.name << " {\n  params: ";
    names(spec.params);
    os << ";\n  coords: ";
    names(spec.coords);
    os << ";\n  identity: ";
    tuple(spec.identity);
    os << ";\n  inverse: ";
    tuple(spec.inverse);
    os << ";\n  multiply: ";
    tuple(spec.multiply);
    os << ";\n  action: ";
    tuple(spec.action);
    os << ";\n}\n";
    return os.str();
}

bool same_spec(const GroupActionSpec& a, const GroupActionSpec& b) {
    auto same_syms = [](const std::vector<Symbol>& x, const std::vector<Symbol>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!(x[i] == y[i]) || x[i].index != y[i].index || x[i].alpha != y[i].alpha) return false;
        return true;
    };
    auto same_exprs = [](const std::vector<Expr>& x, const std::vector<Expr>& y) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!sym::identical(x[i], y[i])) return false;
        return true;
    };
    return a.name == b.name && same_syms(a.params, b.params) && same_syms(a.coords, b.coords) &&
           same_exprs(a.identity, b.identity) && same_exprs(a.inverse, b.inverse) &&
           same_exprs(a.multiply, b.multiply) && same_exprs(a.action, b.action);
}

}  // namespace lagrforge::dsl
