#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lagrforge/dsl/group_spec.hpp"

namespace lagrforge::dsl {

struct Token {
    enum class Kind { Ident, Integer, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    SourcePos pos;
};

/// Splits DSL source into tokens; `#` starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view source);

std::string describe(const Token& t);

}  // namespace lagrforge::dsl
