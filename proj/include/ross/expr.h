#pragma once

#include "ross/lexer.h"
#include "ross/value.h"

#include <map>
#include <memory>
#include <string>

namespace ross {

struct ValueSetDef;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Num, Str, Ident, Binary };
    Kind kind = Kind::Num;
    Value num;          // Num
    std::string text;   // Ident (including variables like x$) / Str contents
    std::string op;     // Binary: + - * / < > <= >= == !=
    ExprPtr lhs, rhs;

    static ExprPtr number(Value v);
    static ExprPtr str(std::string s);
    static ExprPtr ident(std::string s);
    static ExprPtr binary(std::string op, ExprPtr l, ExprPtr r);
};

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Canonical text: binary nodes are fully parenthesized, so the result
// re-parses to the identical tree.
std::string expr_to_string(const ExprPtr& e);

// Parse an expression from a token stream starting at pos; advances pos past
// the expression. Reports against `file`; returns nullptr on failure.
ExprPtr parse_expr(const std::vector<Token>& toks, std::size_t& pos,
                   const std::string& file, Diagnostics& diags);

// A value bound to a variable during evaluation. `ordinals` lets symbolic
// values take part in arithmetic by declaration index within their set
// (time points, relative locations).
struct BoundValue {
    Value value;
    const ValueSetDef* ordinals = nullptr;
};

using EvalEnv = std::map<std::string, BoundValue>;

// Evaluate with variables from env. On error, returns nil and fills `err`.
// Arithmetic on a symbolic value walks its ordinal set; stepping outside the
// set is an error (for a timeline set: "end of timeline").
BoundValue eval_expr(const ExprPtr& e, const EvalEnv& env, std::string& err);

} // namespace ross
