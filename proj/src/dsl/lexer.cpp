#include "lexer.hpp"

#include <cctype>

namespace lagrforge::dsl {

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    SourcePos pos;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k && i < src.size(); ++j, ++i) {
            if (src[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.pos = pos;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            t.kind = Token::Kind::Ident;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Token::Kind::Integer;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::string_view("+-*/^(),;:{}.").find(c) != std::string_view::npos) {
            t.kind = Token::Kind::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw DslError(DslError::Kind::Syntax, pos, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.pos = pos;
    out.push_back(end);
    return out;
}

std::string describe(const Token& t) {
    switch (t.kind) {
    case Token::Kind::End: return "end of input";
    case Token::Kind::Integer: return "integer '" + t.text + "'";
    case Token::Kind::Ident: return "identifier '" + t.text + "'";
    case Token::Kind::Punct: return "'" + t.text + "'";
    }
    return "?";
}

}  // namespace lagrforge::dsl
