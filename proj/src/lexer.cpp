#include "ross/lexer.h"

#include <cctype>
#include <cstdlib>

namespace ross {

const char* token_kind_name(TokenKind k) {
    switch (k) {
    case TokenKind::End: return "end of input";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::Include: return "#include";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Gt: return "'>'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Semi: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::Colon: return "':'";
    case TokenKind::Eq: return "'='";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::NotEq: return "'!='";
    case TokenKind::Le: return "'<='";
    case TokenKind::Ge: return "'>='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::DotDot: return "'..'";
    }
    return "?";
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= src.size(); }
    char peek(std::size_t off = 0) const {
        return pos + off < src.size() ? src[pos + off] : '\0';
    }
    char advance() {
        char c = src[pos++];
        if (c == '\n') { ++line; col = 1; } else { ++col; }
        return c;
    }
};

} // namespace

std::vector<Token> lex(const std::string& source, const std::string& file, Diagnostics& diags) {
    std::vector<Token> out;
    Cursor cur{source};

    auto push = [&](TokenKind k, int line, int col, std::string text = {}, Value num = {}) {
        Token t;
        t.kind = k;
        t.text = std::move(text);
        t.number = num;
        t.line = line;
        t.column = col;
        out.push_back(std::move(t));
    };

    while (!cur.done()) {
        char c = cur.peek();
        int line = cur.line, col = cur.col;

        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            cur.advance();
            continue;
        }
        if (c == '/' && cur.peek(1) == '/') {
            while (!cur.done() && cur.peek() != '\n') cur.advance();
            continue;
        }
        if (c == '/' && cur.peek(1) == '*') {
            cur.advance(); cur.advance();
            while (!cur.done() && !(cur.peek() == '*' && cur.peek(1) == '/')) cur.advance();
            if (cur.done()) {
                diags.error(file, line, col, "lex", "unterminated block comment");
            } else {
                cur.advance(); cur.advance();
            }
            continue;
        }
        if (c == '#') {
            cur.advance();
            std::string word;
            while (ident_char(cur.peek())) word += cur.advance();
            if (word != "include") {
                diags.error(file, line, col, "lex", "unknown directive '#" + word + "'");
                continue;
            }
            while (cur.peek() == ' ' || cur.peek() == '\t') cur.advance();
            if (cur.peek() != '<') {
                diags.error(file, cur.line, cur.col, "lex", "expected '<' after #include");
                continue;
            }
            cur.advance();
            std::string path;
            while (!cur.done() && cur.peek() != '>' && cur.peek() != '\n') path += cur.advance();
            if (cur.peek() == '>') cur.advance();
            else diags.error(file, line, col, "lex", "unterminated #include path");
            push(TokenKind::Include, line, col, path);
            continue;
        }
        if (c == '"') {
            cur.advance();
            std::string text;
            while (!cur.done() && cur.peek() != '"' && cur.peek() != '\n') text += cur.advance();
            if (cur.peek() == '"') cur.advance();
            else diags.error(file, line, col, "lex", "unterminated string literal");
            push(TokenKind::String, line, col, std::move(text));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            bool is_float = false;
            while (std::isdigit(static_cast<unsigned char>(cur.peek()))) text += cur.advance();
            // '..' is a range, a single '.' before a digit continues the number
            if (cur.peek() == '.' && cur.peek(1) != '.' && std::isdigit(static_cast<unsigned char>(cur.peek(1)))) {
                is_float = true;
                text += cur.advance();
                while (std::isdigit(static_cast<unsigned char>(cur.peek()))) text += cur.advance();
            }
            Value v = is_float ? Value::floating(std::strtod(text.c_str(), nullptr))
                               : Value::integer(std::strtoll(text.c_str(), nullptr, 10));
            push(TokenKind::Number, line, col, text, v);
            continue;
        }
        if (ident_start(c)) {
            std::string text;
            text += cur.advance();
            for (;;) {
                if (ident_char(cur.peek())) {
                    text += cur.advance();
                } else if (cur.peek() == '-' && ident_start(cur.peek(1))) {
                    // hyphenated identifier such as X-Coordinate
                    text += cur.advance();
                    text += cur.advance();
                } else {
                    break;
                }
            }
            if (cur.peek() == '$') text += cur.advance(); // variable: x$, t1$, extra$
            push(TokenKind::Ident, line, col, std::move(text));
            continue;
        }

        cur.advance();
        switch (c) {
        case '(': push(TokenKind::LParen, line, col); break;
        case ')': push(TokenKind::RParen, line, col); break;
        case '{': push(TokenKind::LBrace, line, col); break;
        case '}': push(TokenKind::RBrace, line, col); break;
        case '[': push(TokenKind::LBracket, line, col); break;
        case ']': push(TokenKind::RBracket, line, col); break;
        case ';': push(TokenKind::Semi, line, col); break;
        case ',': push(TokenKind::Comma, line, col); break;
        case ':': push(TokenKind::Colon, line, col); break;
        case '+': push(TokenKind::Plus, line, col); break;
        case '-': push(TokenKind::Minus, line, col); break;
        case '*': push(TokenKind::Star, line, col); break;
        case '/': push(TokenKind::Slash, line, col); break;
        case '<':
            if (cur.peek() == '=') { cur.advance(); push(TokenKind::Le, line, col); }
            else push(TokenKind::Lt, line, col);
            break;
        case '>':
            if (cur.peek() == '=') { cur.advance(); push(TokenKind::Ge, line, col); }
            else push(TokenKind::Gt, line, col);
            break;
        case '=':
            if (cur.peek() == '=') { cur.advance(); push(TokenKind::EqEq, line, col); }
            else push(TokenKind::Eq, line, col);
            break;
        case '!':
            if (cur.peek() == '=') { cur.advance(); push(TokenKind::NotEq, line, col); }
            else diags.error(file, line, col, "lex", "unexpected '!'");
            break;
        case '.':
            if (cur.peek() == '.') { cur.advance(); push(TokenKind::DotDot, line, col); }
            else push(TokenKind::Dot, line, col);
            break;
        default:
            diags.error(file, line, col, "lex", std::string("unexpected character '") + c + "'");
            break;
        }
    }

    Token end;
    end.kind = TokenKind::End;
    end.line = cur.line;
    end.column = cur.col;
    out.push_back(end);
    return out;
}

} // namespace ross
