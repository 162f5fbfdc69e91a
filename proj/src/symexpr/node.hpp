#pragma once

#include "lagrforge/symexpr/expr.hpp"

namespace lagrforge::sym {

struct Node {
    Kind kind = Kind::Const;
    Rational value;
    Symbol symbol;
    int exponent = 0;
    std::vector<Expr> args;
    std::size_t hash = 0;
};

}  // namespace lagrforge::sym
