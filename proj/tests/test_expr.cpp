#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ross/expr.h"
#include "ross/lexer.h"
#include "ross/value_set.h"

using namespace ross;

namespace {

ExprPtr parse_one(const std::string& text) {
    Diagnostics diags;
    auto tokens = lex(text, "expr", diags);
    REQUIRE(!diags.has_errors());
    std::size_t pos = 0;
    ExprPtr e = parse_expr(tokens, pos, "expr", diags);
    REQUIRE(!diags.has_errors());
    REQUIRE(e != nullptr);
    return e;
}

BoundValue eval_ok(const std::string& text, const EvalEnv& env) {
    std::string err;
    BoundValue v = eval_expr(parse_one(text), env, err);
    CAPTURE(text);
    REQUIRE(err.empty());
    return v;
}

std::string eval_err(const std::string& text, const EvalEnv& env) {
    std::string err;
    eval_expr(parse_one(text), env, err);
    CAPTURE(text);
    REQUIRE(!err.empty());
    return err;
}

ValueSetDef time_set() {
    ValueSetDef set;
    set.name = "Timeline.Time";
    set.ordered = true;
    for (int i = 1; i <= 5; ++i) set.add_member("T0" + std::to_string(i));
    return set;
}

}  // namespace

TEST_CASE("numeric evaluation and precedence") {
    EvalEnv env;
    CHECK(eval_ok("1 + 2 * 3", env).value.as_int() == 7);
    CHECK(eval_ok("(1 + 2) * 3", env).value.as_int() == 9);
    CHECK(eval_ok("2 * 3.25", env).value.as_float() == doctest::Approx(6.5));
}

TEST_CASE("division always produces an exact quotient") {
    EvalEnv env;
    env["x$"] = BoundValue{Value::integer(1000), nullptr};
    BoundValue v = eval_ok("(x$ / 1000)", env);
    CHECK(v.value.as_float() == doctest::Approx(1.0));
    CHECK(eval_err("1 / 0", env) == "division by zero");
}

TEST_CASE("unit conversion shapes used by the mappings") {
    EvalEnv env;
    env["x$"] = BoundValue{Value::integer(2), nullptr};
    BoundValue feet = eval_ok("(x$ * 3.2808)", env);
    CHECK(feet.value.as_float() == doctest::Approx(6.5616));
}

TEST_CASE("ordinal arithmetic walks the member list") {
    ValueSetDef set = time_set();
    EvalEnv env;
    env["t1$"] = BoundValue{Value::text("T01"), &set};
    CHECK(eval_ok("t1$ + 1", env).value.as_text() == "T02");
    CHECK(eval_ok("t1$ + 4", env).value.as_text() == "T05");
    CHECK(eval_ok("(t1$ + 1) + 1", env).value.as_text() == "T03");
}

TEST_CASE("stepping past the last time point reports the end of the timeline") {
    ValueSetDef set = time_set();
    EvalEnv env;
    env["t$"] = BoundValue{Value::text("T05"), &set};
    std::string err = eval_err("t$ + 1", env);
    CHECK(err == "end of timeline: no time point after 'T05' + 1 in Timeline.Time");
}

TEST_CASE("comparisons order symbolic values by their set position") {
    ValueSetDef set = time_set();
    EvalEnv env;
    env["a$"] = BoundValue{Value::text("T02"), &set};
    env["b$"] = BoundValue{Value::text("T04"), &set};
    CHECK(eval_ok("a$ < b$", env).value.as_int() == 1);
    CHECK(eval_ok("a$ >= b$", env).value.as_int() == 0);
    CHECK(eval_ok("a$ == a$", env).value.as_int() == 1);
}

TEST_CASE("unbound variables are reported by name") {
    EvalEnv env;
    CHECK(eval_err("q$ + 1", env) == "unbound variable 'q$'");
}

TEST_CASE("expression text round trips through the printer") {
    for (const char* text : {"(x$ / 1000)", "(x$ * 3.2808)", "a$ + 1", "t1$", "extra$",
                             "(1 + 2) * 3"}) {
        ExprPtr e = parse_one(text);
        ExprPtr again = parse_one(expr_to_string(e));
        CAPTURE(text);
        CHECK(expr_equal(e, again));
    }
}
