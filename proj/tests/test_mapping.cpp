#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ross/transforms.h"
#include "test_support.h"

using namespace ross;
namespace ts = test_support;

TEST_CASE("unit mappings produce exact integers") {
    auto result = ts::compile_examples_group();
    REQUIRE(result.diagnostics.empty());
    const Infopedia& info = *result.infopedia;
    std::string err;

    SUBCASE("millimeters to meters divides by 1000") {
        auto meters = apply_mapping(info, "MillimeterToMeter", 1000, err);
        REQUIRE_MESSAGE(meters.has_value(), err);
        CHECK(*meters == 1);
    }

    SUBCASE("meters to feet truncates toward zero") {
        // 2 * 3.2808 = 6.5616; the stored result is the whole number 6
        auto feet = apply_mapping(info, "MeterToFoot", 2, err);
        REQUIRE_MESSAGE(feet.has_value(), err);
        CHECK(*feet == 6);
    }

    SUBCASE("unknown mappings are reported") {
        auto missing = apply_mapping(info, "NoSuchMapping", 1, err);
        CHECK(!missing.has_value());
        CHECK(err == "unknown mapping 'NoSuchMapping'");
    }
}

TEST_CASE("the spatial transform routine fills coordinate slots") {
    auto result = ts::compile_appendix_group();
    REQUIRE(result.diagnostics.empty());
    const Infopedia& info = *result.infopedia;
    const char* name = "RelativePositionSpatialToMillimeterBasedCoords-01";
    std::string err;

    SUBCASE("identical locations have zero offset") {
        auto slots = apply_transform(info, name, "IdenticalLocation", err);
        REQUIRE(slots.has_value());
        CHECK(err.empty());
        CHECK(*slots == std::vector<std::int64_t>{0, 0, 0});
    }

    SUBCASE("adjacent locations sit two millimeters out") {
        auto slots = apply_transform(info, name, "Adjacent", err);
        REQUIRE(slots.has_value());
        CHECK(err.empty());
        CHECK(*slots == std::vector<std::int64_t>{2, 0, 0});
    }

    SUBCASE("non adjacent locations sit a meter out") {
        auto slots = apply_transform(info, name, "NotAdjacent", err);
        REQUIRE(slots.has_value());
        CHECK(err.empty());
        CHECK(*slots == std::vector<std::int64_t>{1000, 0, 0});
    }

    SUBCASE("unhandled sources zero the slots and say so") {
        auto slots = apply_transform(info, name, "Elsewhere", err);
        REQUIRE(slots.has_value());
        CHECK(*slots == std::vector<std::int64_t>{0, 0, 0});
        CHECK(err.find("no branch for 'Elsewhere'") != std::string::npos);
    }
}

TEST_CASE("routine execution details") {
    RoutineDef routine;
    routine.return_type = "bool";
    routine.params = {{"string", "Source", 0}, {"int", "Dest", 3}};
    routine.locals = {{"x", 0}, {"y", 1}, {"z", 2}};
    RoutineBranch branch;
    branch.param = "Source";
    branch.match = "Up";
    branch.assigns = {{"Dest", "z", 7}, {"Dest", "x", 1}};
    routine.branches.push_back(branch);

    RoutineResult hit = run_routine(routine, "Up");
    CHECK(hit.matched);
    CHECK(hit.returned);
    CHECK(hit.dest == std::vector<std::int64_t>{1, 0, 7});

    RoutineResult miss = run_routine(routine, "Down");
    CHECK(!miss.matched);
    CHECK(miss.dest == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("mapping results must land in the destination set") {
    // Function produces a value outside the declared destination set.
    std::string source =
        "ValueSet \"Small\" ( { 1 .. 10 } );\n"
        "ValueSet \"AnyInt\" ( IntegerConstant );\n"
        "Mapping \"TenTimes\" ( <Source ref = AnyInt/> <Dest ref = Small/>"
        " <Function expr = (x$ * 10)/> );\n";
    auto result = compile_source(source, "mapping.star");
    REQUIRE_MESSAGE(!result.diagnostics.has_errors(), result.diagnostics.format_all());
    std::string err;
    auto ok = apply_mapping(*result.infopedia, "TenTimes", 1, err);
    REQUIRE(ok.has_value());
    CHECK(*ok == 10);
    auto bad = apply_mapping(*result.infopedia, "TenTimes", 2, err);
    CHECK(!bad.has_value());
    CHECK(err.find("not a member of Small") != std::string::npos);
}
