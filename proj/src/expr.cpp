#include "ross/expr.h"

#include "ross/value_set.h"

namespace ross {

ExprPtr Expr::number(Value v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Num;
    e->num = v;
    return e;
}

ExprPtr Expr::str(std::string s) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Str;
    e->text = std::move(s);
    return e;
}

ExprPtr Expr::ident(std::string s) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Ident;
    e->text = std::move(s);
    return e;
}

ExprPtr Expr::binary(std::string op, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Binary;
    e->op = std::move(op);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case Expr::Kind::Num: return a->num == b->num;
    case Expr::Kind::Str:
    case Expr::Kind::Ident: return a->text == b->text;
    case Expr::Kind::Binary:
        return a->op == b->op && expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
    }
    return false;
}

std::string expr_to_string(const ExprPtr& e) {
    if (!e) return "";
    switch (e->kind) {
    case Expr::Kind::Num: return e->num.to_string();
    case Expr::Kind::Str: return '"' + e->text + '"';
    case Expr::Kind::Ident: return e->text;
    case Expr::Kind::Binary:
        return '(' + expr_to_string(e->lhs) + ' ' + e->op + ' ' + expr_to_string(e->rhs) + ')';
    }
    return "";
}

namespace {

struct ExprParser {
    const std::vector<Token>& toks;
    std::size_t& pos;
    const std::string& file;
    Diagnostics& diags;

    const Token& cur() const { return toks[pos]; }
    bool at(TokenKind k) const { return cur().kind == k; }

    ExprPtr primary() {
        const Token& t = cur();
        switch (t.kind) {
        case TokenKind::Number:
            ++pos;
            return Expr::number(t.number);
        case TokenKind::String:
            ++pos;
            return Expr::str(t.text);
        case TokenKind::Ident:
            ++pos;
            return Expr::ident(t.text);
        case TokenKind::Minus: {
            ++pos;
            if (at(TokenKind::Number)) {
                const Token& n = cur();
                ++pos;
                Value v = n.number.is_int() ? Value::integer(-n.number.as_int())
                                            : Value::floating(-n.number.as_float());
                return Expr::number(v);
            }
            diags.error(file, t.line, t.column, "parse", "expected number after unary '-'");
            return nullptr;
        }
        case TokenKind::LParen: {
            ++pos;
            ExprPtr inner = comparison();
            if (!inner) return nullptr;
            if (!at(TokenKind::RParen)) {
                diags.error(file, cur().line, cur().column, "parse",
                            "expected ')' in expression, found " + std::string(token_kind_name(cur().kind)));
                return nullptr;
            }
            ++pos;
            return inner;
        }
        default:
            diags.error(file, t.line, t.column, "parse",
                        "expected expression, found " + std::string(token_kind_name(t.kind)));
            return nullptr;
        }
    }

    // '/' directly before '>' is an element terminator, not division
    bool at_division() const {
        return at(TokenKind::Slash) &&
               (pos + 1 >= toks.size() || toks[pos + 1].kind != TokenKind::Gt);
    }

    ExprPtr product() {
        ExprPtr lhs = primary();
        while (lhs && (at(TokenKind::Star) || at_division())) {
            std::string op = at(TokenKind::Star) ? "*" : "/";
            ++pos;
            ExprPtr rhs = primary();
            if (!rhs) return nullptr;
            lhs = Expr::binary(op, lhs, rhs);
        }
        return lhs;
    }

    ExprPtr sum() {
        ExprPtr lhs = product();
        while (lhs && (at(TokenKind::Plus) || at(TokenKind::Minus))) {
            std::string op = at(TokenKind::Plus) ? "+" : "-";
            ++pos;
            ExprPtr rhs = product();
            if (!rhs) return nullptr;
            lhs = Expr::binary(op, lhs, rhs);
        }
        return lhs;
    }

    ExprPtr comparison() {
        ExprPtr lhs = sum();
        for (;;) {
            std::string op;
            switch (cur().kind) {
            case TokenKind::Lt: op = "<"; break;
            case TokenKind::Gt: op = ">"; break;
            case TokenKind::Le: op = "<="; break;
            case TokenKind::Ge: op = ">="; break;
            case TokenKind::EqEq: op = "=="; break;
            case TokenKind::NotEq: op = "!="; break;
            default: return lhs;
            }
            if (!lhs) return nullptr;
            ++pos;
            ExprPtr rhs = sum();
            if (!rhs) return nullptr;
            lhs = Expr::binary(op, lhs, rhs);
        }
    }
};

bool numeric(const BoundValue& b) { return b.value.is_number(); }

} // namespace

ExprPtr parse_expr(const std::vector<Token>& toks, std::size_t& pos,
                   const std::string& file, Diagnostics& diags) {
    ExprParser p{toks, pos, file, diags};
    return p.comparison();
}

BoundValue eval_expr(const ExprPtr& e, const EvalEnv& env, std::string& err) {
    if (!e) {
        err = "empty expression";
        return {};
    }
    switch (e->kind) {
    case Expr::Kind::Num: return {e->num, nullptr};
    case Expr::Kind::Str: return {Value::text(e->text), nullptr};
    case Expr::Kind::Ident: {
        auto it = env.find(e->text);
        if (it == env.end()) {
            err = "unbound variable '" + e->text + "'";
            return {};
        }
        return it->second;
    }
    case Expr::Kind::Binary: break;
    }

    BoundValue l = eval_expr(e->lhs, env, err);
    if (!err.empty()) return {};
    BoundValue r = eval_expr(e->rhs, env, err);
    if (!err.empty()) return {};
    const std::string& op = e->op;

    auto as_double = [](const BoundValue& b) { return b.value.as_number(); };

    if (op == "==" || op == "!=") {
        bool eq;
        if (numeric(l) && numeric(r)) eq = as_double(l) == as_double(r);
        else if (l.value.is_text() && r.value.is_text()) eq = l.value.as_text() == r.value.as_text();
        else eq = l.value == r.value;
        return {Value::integer((op == "==") == eq ? 1 : 0), nullptr};
    }
    if (op == "<" || op == ">" || op == "<=" || op == ">=") {
        double a, b;
        if (numeric(l) && numeric(r)) {
            a = as_double(l);
            b = as_double(r);
        } else if (l.value.is_text() && l.ordinals && r.value.is_text() && r.ordinals) {
            auto oa = l.ordinals->ordinal(l.value), ob = r.ordinals->ordinal(r.value);
            if (!oa || !ob) {
                err = "value not a member of its ordinal set";
                return {};
            }
            a = *oa;
            b = *ob;
        } else {
            err = "cannot order operands of '" + op + "'";
            return {};
        }
        bool res = op == "<" ? a < b : op == ">" ? a > b : op == "<=" ? a <= b : a >= b;
        return {Value::integer(res ? 1 : 0), nullptr};
    }

    // arithmetic: symbolic value +/- integer steps through its ordinal set
    if ((op == "+" || op == "-") && l.value.is_text()) {
        if (!l.ordinals) {
            err = "'" + l.value.as_text() + "' has no ordinal set for arithmetic";
            return {};
        }
        if (!r.value.is_int()) {
            err = "ordinal arithmetic needs an integer step";
            return {};
        }
        std::int64_t step = op == "+" ? r.value.as_int() : -r.value.as_int();
        auto next = l.ordinals->successor(l.value, step);
        if (!next) {
            bool timelineish = !l.ordinals->members.empty() && l.ordinals->ordered;
            err = timelineish ? "end of timeline: no time point after '" + l.value.as_text() +
                                    "' + " + std::to_string(step) + " in " + l.ordinals->name
                              : "no member at offset " + std::to_string(step) + " from '" +
                                    l.value.as_text() + "' in " + l.ordinals->name;
            return {};
        }
        return {*next, l.ordinals};
    }
    if (!numeric(l) || !numeric(r)) {
        err = "cannot apply '" + op + "' to non-numeric operands";
        return {};
    }
    if (l.value.is_int() && r.value.is_int() && op != "/") {
        std::int64_t a = l.value.as_int(), b = r.value.as_int();
        std::int64_t v = op == "+" ? a + b : op == "-" ? a - b : a * b;
        return {Value::integer(v), nullptr};
    }
    double a = as_double(l), b = as_double(r);
    if (op == "/" && b == 0) {
        err = "division by zero";
        return {};
    }
    double v = op == "+" ? a + b : op == "-" ? a - b : op == "*" ? a * b : a / b;
    return {Value::floating(v), nullptr};
}

} // namespace ross
