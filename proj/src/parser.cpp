#include "ross/parser.h"

#include "ross/lexer.h"

#include <optional>

namespace ross {

namespace {

// Recursive-descent parser over the token stream. Star is permissive about
// semicolons (listings omit them after some section closes), so `;` is
// consumed wherever it appears between statements rather than required.
class Parser {
public:
    Parser(std::vector<Token> toks, std::string file, Diagnostics& diags)
        : toks_(std::move(toks)), file_(std::move(file)), diags_(diags) {}

    Document run() {
        Document doc;
        doc.file = file_;
        while (!at(TokenKind::End) && !give_up()) {
            skip_semis();
            if (at(TokenKind::End)) break;
            if (auto n = parse_statement()) doc.statements.push_back(std::move(*n));
        }
        return doc;
    }

private:
    std::vector<Token> toks_;
    std::string file_;
    Diagnostics& diags_;
    std::size_t pos_ = 0;
    int errors_ = 0;

    static constexpr int kMaxErrors = 50;

    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(std::size_t off = 0) const {
        std::size_t i = pos_ + off;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at(TokenKind k) const { return cur().kind == k; }
    bool give_up() const { return errors_ >= kMaxErrors; }

    void advance() {
        if (pos_ + 1 < toks_.size()) ++pos_;
    }

    bool accept(TokenKind k) {
        if (!at(k)) return false;
        advance();
        return true;
    }

    bool expect(TokenKind k, const char* where) {
        if (accept(k)) return true;
        error(std::string("expected ") + token_kind_name(k) + " " + where + ", found " +
              token_kind_name(cur().kind));
        return false;
    }

    void error(const std::string& msg) {
        ++errors_;
        diags_.error(file_, cur().line, cur().column, "parse", msg);
    }

    void skip_semis() {
        while (accept(TokenKind::Semi)) {}
    }

    // Identifier, possibly dotted: RelativePosition.SpatialAttributeTypes
    std::string parse_dotted_ident() {
        std::string text = cur().text;
        advance();
        while (at(TokenKind::Dot) && peek(1).kind == TokenKind::Ident) {
            advance();
            text += '.';
            text += cur().text;
            advance();
        }
        return text;
    }

    std::optional<Node> parse_statement() {
        Node n;
        n.line = cur().line;
        n.column = cur().column;

        switch (cur().kind) {
        case TokenKind::Include:
            n.kind = Node::Kind::Include;
            n.head = cur().text;
            advance();
            return n;
        case TokenKind::Lt:
            return parse_element();
        case TokenKind::LBrace:
            n.kind = Node::Kind::Set;
            n.set = parse_set();
            skip_semis();
            return n;
        case TokenKind::LParen:
            n.kind = Node::Kind::Expr;
            n.expr = parse_expr(toks_, pos_, file_, diags_);
            if (!n.expr) {
                ++errors_;
                advance();
                return std::nullopt;
            }
            skip_semis();
            return n;
        case TokenKind::String:
            n.kind = Node::Kind::Section;
            n.name = cur().text;
            advance();
            return parse_section_body(std::move(n));
        case TokenKind::Ident:
            break;
        default:
            error(std::string("unexpected ") + token_kind_name(cur().kind));
            advance();
            return std::nullopt;
        }

        const std::string& id = cur().text;

        // Integer lenMax = 1000;
        if ((id == "Integer" || id == "FloatingPoint" || id == "String") &&
            peek(1).kind == TokenKind::Ident && peek(2).kind == TokenKind::Eq) {
            n.kind = Node::Kind::Scalar;
            n.head = id;
            advance();
            n.name = cur().text;
            advance();
            advance(); // '='
            bool neg = accept(TokenKind::Minus);
            if (at(TokenKind::Number)) {
                Value v = cur().number;
                if (neg) v = v.is_int() ? Value::integer(-v.as_int()) : Value::floating(-v.as_float());
                n.scalar_value = v;
                advance();
            } else if (at(TokenKind::String)) {
                n.scalar_value = Value::text(cur().text);
                advance();
            } else {
                error("expected literal after '='");
            }
            skip_semis();
            return n;
        }

        // bool Routine { ... }
        if (peek(1).kind == TokenKind::Ident && peek(1).text == "Routine" &&
            peek(2).kind == TokenKind::LBrace) {
            n.kind = Node::Kind::Routine;
            n.routine = parse_routine(id);
            skip_semis();
            return n;
        }

        if (peek(1).kind == TokenKind::String) {
            n.kind = Node::Kind::Section;
            n.head = id;
            advance();
            n.name = cur().text;
            advance();
            return parse_section_body(std::move(n));
        }

        if (peek(1).kind == TokenKind::LParen) {
            n.kind = Node::Kind::Section;
            n.head = id;
            advance();
            return parse_section_body(std::move(n));
        }

        // Bare reference statement: AttributeTypeName;
        n.kind = Node::Kind::Ref;
        n.head = parse_dotted_ident();
        if (!at(TokenKind::Semi) && !at(TokenKind::RParen)) {
            error("expected ';' after reference '" + n.head + "'");
        }
        skip_semis();
        return n;
    }

    // The '(' body of a section: empty, an argument list (renames, Merge,
    // Dictionary(nil)), or nested statements.
    std::optional<Node> parse_section_body(Node n) {
        if (!expect(TokenKind::LParen, "to open section")) return n;

        if (accept(TokenKind::RParen)) {
            skip_semis();
            return n;
        }

        if (at(TokenKind::Ident) &&
            (peek(1).kind == TokenKind::Comma || peek(1).kind == TokenKind::RParen)) {
            n.args.push_back(cur().text);
            advance();
            while (accept(TokenKind::Comma)) {
                if (!at(TokenKind::Ident)) {
                    error("expected identifier in argument list");
                    break;
                }
                n.args.push_back(cur().text);
                advance();
            }
            expect(TokenKind::RParen, "to close argument list");
            skip_semis();
            return n;
        }

        while (!at(TokenKind::RParen) && !at(TokenKind::End) && !give_up()) {
            skip_semis();
            if (at(TokenKind::RParen)) break;
            if (auto c = parse_statement()) n.children.push_back(std::move(*c));
        }
        expect(TokenKind::RParen, "to close section");
        skip_semis();
        return n;
    }

    std::optional<Node> parse_element() {
        Node n;
        n.kind = Node::Kind::Element;
        n.line = cur().line;
        n.column = cur().column;
        advance(); // '<'
        if (!at(TokenKind::Ident)) {
            error("expected element name after '<'");
            return std::nullopt;
        }
        n.head = cur().text;
        advance();

        while (at(TokenKind::Ident) && !give_up()) {
            Attr a;
            a.key = cur().text;
            advance();
            if (!expect(TokenKind::Eq, "after attribute key")) break;
            parse_attr_value(a);
            n.attrs.push_back(std::move(a));
        }

        expect(TokenKind::Slash, "to close element");
        expect(TokenKind::Gt, "to close element");
        return n;
    }

    void parse_attr_value(Attr& a) {
        switch (cur().kind) {
        case TokenKind::String:
            a.kind = Attr::Kind::Str;
            a.text = cur().text;
            advance();
            return;
        case TokenKind::Number:
            if (a.key == "expr") {
                a.kind = Attr::Kind::Expr;
                a.expr = Expr::number(cur().number);
            } else {
                a.kind = Attr::Kind::Num;
                a.num = cur().number;
            }
            advance();
            return;
        case TokenKind::Minus:
            advance();
            if (at(TokenKind::Number)) {
                Value v = cur().number;
                v = v.is_int() ? Value::integer(-v.as_int()) : Value::floating(-v.as_float());
                if (a.key == "expr") {
                    a.kind = Attr::Kind::Expr;
                    a.expr = Expr::number(v);
                } else {
                    a.kind = Attr::Kind::Num;
                    a.num = v;
                }
                advance();
            } else {
                error("expected number after '-'");
            }
            return;
        case TokenKind::LParen:
            a.kind = Attr::Kind::Expr;
            a.expr = parse_expr(toks_, pos_, file_, diags_);
            if (!a.expr) ++errors_;
            return;
        case TokenKind::LBrace:
            a.kind = Attr::Kind::Set;
            a.set = std::make_shared<SetDepiction>(parse_set());
            return;
        case TokenKind::Ident: {
            std::string text = parse_dotted_ident();
            if (text == "nil") {
                a.kind = Attr::Kind::Nil;
            } else if (a.key == "expr") {
                a.kind = Attr::Kind::Expr;
                a.expr = Expr::ident(std::move(text));
            } else {
                a.kind = Attr::Kind::Ident;
                a.text = std::move(text);
            }
            return;
        }
        default:
            error(std::string("unexpected ") + token_kind_name(cur().kind) +
                  " as value of attribute '" + a.key + "'");
            advance();
        }
    }

    bool parse_member_value(Value& out, bool& quoted) {
        if (at(TokenKind::String)) {
            out = Value::text(cur().text);
            quoted = true;
            advance();
            return true;
        }
        if (at(TokenKind::Number)) {
            out = cur().number;
            quoted = false;
            advance();
            return true;
        }
        if (at(TokenKind::Ident)) {
            out = Value::text(cur().text);
            quoted = false;
            advance();
            return true;
        }
        error("expected set member");
        return false;
    }

    SetDepiction parse_set() {
        SetDepiction s;
        expect(TokenKind::LBrace, "to open set");
        while (!at(TokenKind::RBrace) && !at(TokenKind::End) && !give_up()) {
            SetMember m;
            if (!parse_member_value(m.value, m.quoted)) {
                advance();
                continue;
            }
            if (accept(TokenKind::Colon)) {
                // "White" : Dictionary ( ... ); ,
                if (auto d = parse_statement())
                    m.dictionary = std::make_shared<Node>(std::move(*d));
            }
            s.members.push_back(std::move(m));
            skip_semis();

            bool comma = accept(TokenKind::Comma);
            if (accept(TokenKind::DotDot)) {
                s.has_range = true;
                s.range_comma = comma;
                if (!parse_member_value(s.range_hi, s.range_hi_quoted)) advance();
                break;
            }
            if (!comma) break;
        }
        expect(TokenKind::RBrace, "to close set");
        return s;
    }

    std::shared_ptr<RoutineDef> parse_routine(const std::string& return_type) {
        auto r = std::make_shared<RoutineDef>();
        r->return_type = return_type;
        advance(); // return type
        advance(); // 'Routine'
        expect(TokenKind::LBrace, "to open routine");

        while (!at(TokenKind::RBrace) && !at(TokenKind::End) && !give_up()) {
            skip_semis();
            if (!at(TokenKind::Ident)) {
                error("unexpected token in routine body");
                advance();
                continue;
            }
            const std::string kw = cur().text;
            if (kw == "Parameters") {
                advance();
                parse_routine_params(*r);
            } else if (kw == "Locals") {
                advance();
                parse_routine_locals(*r);
            } else if (kw == "if" || kw == "else") {
                parse_routine_branch(*r, kw);
            } else if (kw == "Return") {
                advance();
                if (at(TokenKind::Ident)) {
                    r->return_true = cur().text == "true";
                    advance();
                } else {
                    error("expected 'true' or 'false' after Return");
                }
                skip_semis();
            } else {
                error("unexpected '" + kw + "' in routine body");
                advance();
            }
        }
        expect(TokenKind::RBrace, "to close routine");
        return r;
    }

    void parse_routine_params(RoutineDef& r) {
        expect(TokenKind::LParen, "after Parameters");
        while (at(TokenKind::Ident) && !give_up()) {
            RoutineParam p;
            p.type = cur().text;
            advance();
            if (at(TokenKind::Ident)) {
                p.name = cur().text;
                advance();
            } else {
                error("expected parameter name");
            }
            if (accept(TokenKind::LBracket)) {
                if (at(TokenKind::Number)) {
                    p.array_size = static_cast<int>(cur().number.as_int());
                    advance();
                }
                expect(TokenKind::RBracket, "to close array size");
            }
            r.params.push_back(std::move(p));
            skip_semis();
        }
        expect(TokenKind::RParen, "to close Parameters");
        skip_semis();
    }

    void parse_routine_locals(RoutineDef& r) {
        expect(TokenKind::LParen, "after Locals");
        while (at(TokenKind::Ident) && !give_up()) {
            advance(); // type, always int
            RoutineLocal l;
            if (at(TokenKind::Ident)) {
                l.name = cur().text;
                advance();
            } else {
                error("expected local name");
            }
            expect(TokenKind::Eq, "in local initializer");
            bool neg = accept(TokenKind::Minus);
            if (at(TokenKind::Number)) {
                l.value = cur().number.as_int();
                if (neg) l.value = -l.value;
                advance();
            } else {
                error("expected number in local initializer");
            }
            r.locals.push_back(std::move(l));
            skip_semis();
        }
        expect(TokenKind::RParen, "to close Locals");
        skip_semis();
    }

    void parse_routine_branch(RoutineDef& r, const std::string& kw) {
        advance(); // 'if' or 'else'
        if (kw == "else") {
            if (at(TokenKind::Ident) && cur().text == "if") advance();
            else error("expected 'if' after 'else'");
        }
        RoutineBranch b;
        expect(TokenKind::LParen, "after if");
        if (at(TokenKind::Ident)) {
            b.param = cur().text;
            advance();
        }
        expect(TokenKind::EqEq, "in if condition");
        if (at(TokenKind::String)) {
            b.match = cur().text;
            advance();
        } else {
            error("expected string in if condition");
        }
        expect(TokenKind::RParen, "to close if condition");
        expect(TokenKind::LBrace, "to open if body");
        while (at(TokenKind::Ident) && !give_up()) {
            RoutineAssign a;
            a.target = cur().text;
            advance();
            expect(TokenKind::LBracket, "in assignment");
            if (at(TokenKind::Ident)) {
                a.slot = cur().text;
                advance();
            } else {
                error("expected index name in assignment");
            }
            expect(TokenKind::RBracket, "in assignment");
            expect(TokenKind::Eq, "in assignment");
            bool neg = accept(TokenKind::Minus);
            if (at(TokenKind::Number)) {
                a.value = cur().number.as_int();
                if (neg) a.value = -a.value;
                advance();
            } else {
                error("expected number in assignment");
            }
            b.assigns.push_back(std::move(a));
            skip_semis();
        }
        expect(TokenKind::RBrace, "to close if body");
        r.branches.push_back(std::move(b));
    }
};

} // namespace

Document parse(const std::string& source, const std::string& file, Diagnostics& diags) {
    auto toks = lex(source, file, diags);
    Parser p(std::move(toks), file, diags);
    return p.run();
}

} // namespace ross
