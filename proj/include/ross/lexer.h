#pragma once

#include "ross/diagnostics.h"
#include "ross/value.h"

#include <string>
#include <vector>

namespace ross {

enum class TokenKind {
    End,
    Ident,      // bare identifier; may contain '-' before a letter; may end in '$'
    Number,     // integer or floating point literal
    String,     // quoted; text() holds the contents without quotes
    Include,    // #include <...>; text() holds the path
    LParen, RParen,
    LBrace, RBrace,
    LBracket, RBracket,
    Lt, Gt,
    Slash,
    Semi, Comma, Colon,
    Eq,                    // =
    EqEq, NotEq, Le, Ge,   // == != <= >=
    Plus, Minus, Star,
    Dot, DotDot,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;     // identifier text / string contents / include path
    Value number;         // for Number
    int line = 1;
    int column = 1;
};

const char* token_kind_name(TokenKind k);

// Lex a whole Star source buffer. Comments (// and /* */) are skipped.
// Errors are reported against `file`; lexing continues past bad characters.
std::vector<Token> lex(const std::string& source, const std::string& file, Diagnostics& diags);

} // namespace ross
