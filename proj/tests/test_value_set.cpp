#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ross/value_set.h"

using namespace ross;

namespace {

ValueSetDef enumerated() {
    ValueSetDef set;
    set.name = "Colors";
    set.add_member("Red");
    set.add_member("Green", {"green", "greens"});
    set.add_member("Blue");
    return set;
}

ValueSetDef range_set() {
    ValueSetDef set;
    set.name = "Heights";
    set.has_range = true;
    set.lo = 120;
    set.hi = 220;
    return set;
}

}  // namespace

TEST_CASE("membership in an enumerated set") {
    ValueSetDef set = enumerated();
    CHECK(set.contains(Value::text("Red")));
    CHECK(set.contains(Value::text("Blue")));
    CHECK(!set.contains(Value::text("Violet")));
    CHECK(!set.contains(Value::integer(1)));
}

TEST_CASE("membership in an integer range") {
    ValueSetDef set = range_set();
    CHECK(set.contains(Value::integer(120)));
    CHECK(set.contains(Value::integer(220)));
    CHECK(!set.contains(Value::integer(119)));
    CHECK(!set.contains(Value::integer(221)));
    CHECK(!set.contains(Value::text("120")));
}

TEST_CASE("the integer constants set accepts every integer") {
    ValueSetDef set;
    set.integer_constants = true;
    CHECK(set.contains(Value::integer(-1000000)));
    CHECK(set.contains(Value::integer(0)));
    CHECK(set.contains(Value::floating(2.0)));
    CHECK(!set.contains(Value::floating(2.5)));
    CHECK(!set.contains(Value::text("x")));
}

TEST_CASE("ordinals index enumerated members in declaration order") {
    ValueSetDef set = enumerated();
    CHECK(set.ordinal(Value::text("Red")) == 0);
    CHECK(set.ordinal(Value::text("Green")) == 1);
    CHECK(set.ordinal(Value::text("Blue")) == 2);
    CHECK(!set.ordinal(Value::text("Violet")).has_value());
}

TEST_CASE("successor walks enumerated members with bounds checks") {
    ValueSetDef set = enumerated();
    CHECK(set.successor(Value::text("Red"), 1)->as_text() == "Green");
    CHECK(set.successor(Value::text("Red"), 2)->as_text() == "Blue");
    CHECK(set.successor(Value::text("Blue"), -2)->as_text() == "Red");
    CHECK(set.successor(Value::text("Red"), 0)->as_text() == "Red");
    CHECK(!set.successor(Value::text("Blue"), 1).has_value());
    CHECK(!set.successor(Value::text("Red"), -1).has_value());
}

TEST_CASE("successor steps integers inside a range") {
    ValueSetDef set = range_set();
    CHECK(set.successor(Value::integer(120), 5)->as_int() == 125);
    CHECK(set.successor(Value::integer(220), -100)->as_int() == 120);
    CHECK(!set.successor(Value::integer(220), 1).has_value());
    CHECK(!set.successor(Value::integer(120), -1).has_value());
}

TEST_CASE("first member prefers the enumerated list, then the range") {
    CHECK(enumerated().first_member()->as_text() == "Red");
    CHECK(range_set().first_member()->as_int() == 120);
}

TEST_CASE("per member dictionary words are kept in order") {
    ValueSetDef set = enumerated();
    auto it = set.member_index.find("Green");
    REQUIRE(it != set.member_index.end());
    CHECK(set.member_words.at(it->second) == std::vector<std::string>{"green", "greens"});
}

TEST_CASE("brute force membership agrees on simple cases") {
    ValueSetDef e = enumerated();
    ValueSetDef r = range_set();
    for (const char* probe : {"Red", "Green", "Blue", "Violet", ""})
        CHECK(e.contains(Value::text(probe)) == contains_brute_force(e, Value::text(probe)));
    for (int probe : {100, 120, 170, 220, 240})
        CHECK(r.contains(Value::integer(probe)) == contains_brute_force(r, Value::integer(probe)));
}
