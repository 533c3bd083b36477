#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ross/fact_model.h"
#include "test_support.h"

using namespace ross;
namespace ts = test_support;

TEST_CASE("set_attribute replaces an existing assertion in place") {
    Instance inst;
    inst.class_name = "C";
    set_attribute(inst, {"C", "State", "Off", false, 1.0, false});
    set_attribute(inst, {"C", "Other", "X", false, 1.0, false});
    set_attribute(inst, {"C", "State", "On", false, 1.0, false});
    REQUIRE(inst.attributes.size() == 2);
    CHECK(inst.attributes[0].attr_type == "State");
    CHECK(inst.attributes[0].value == "On");
    const AttributeValue* got = get_attribute(inst, "C", "State");
    REQUIRE(got != nullptr);
    CHECK(got->value == "On");
    CHECK(get_attribute(inst, "C", "Missing") == nullptr);
    CHECK(get_attribute(inst, "Other", "State") == nullptr);
}

TEST_CASE("ensure_time_point labels points from the timeline") {
    StructuralParent sp;
    sp.time_labels = {"T01", "T02", "T03"};
    TimePoint& t2 = ensure_time_point(sp, 1);
    CHECK(t2.label == "T02");
    t2.instances.push_back(Instance{});
    CHECK(&ensure_time_point(sp, 1) == &t2);
    CHECK(ensure_time_point(sp, 1).instances.size() == 1);
}

TEST_CASE("cloning a time point drops optional causal features") {
    auto result = ts::compile_appendix_group();
    REQUIRE(result.diagnostics.empty());
    const Infopedia& info = *result.infopedia;

    StructuralParent sp;
    sp.class_name = "EverydayObjectStructuralParentClass";
    sp.time_labels = {"T01", "T02"};
    TimePoint& t1 = ensure_time_point(sp, 0);

    Instance person;
    person.class_name = "CityCouncilmanObjectFrameClass";
    person.id = "c-1";
    // AnticipatingHarmfulEventState is an optional causal feature;
    // CommunicatingState is a plain state and must carry over.
    set_attribute(person, {"IntelligentAgentObjectFrameClass", "AnticipatingHarmfulEventState",
                           "Anticipating", false, 1.0, false});
    set_attribute(person, {"IntelligentAgentObjectFrameClass", "CommunicatingState",
                           "Communicating", false, 1.0, false});
    t1.instances.push_back(std::move(person));

    clone_structural_parent(info, sp, 0, 1);
    const TimePoint& t2 = sp.timeline.at(1);
    CHECK(t2.label == "T02");
    REQUIRE(t2.instances.size() == 1);
    const Instance& copy = t2.instances[0];
    CHECK(get_attribute(copy, "IntelligentAgentObjectFrameClass",
                        "AnticipatingHarmfulEventState") == nullptr);
    const AttributeValue* kept =
        get_attribute(copy, "IntelligentAgentObjectFrameClass", "CommunicatingState");
    REQUIRE(kept != nullptr);
    CHECK(kept->value == "Communicating");

    // the source point is untouched
    CHECK(get_attribute(sp.timeline.at(0).instances[0], "IntelligentAgentObjectFrameClass",
                        "AnticipatingHarmfulEventState") != nullptr);
}

TEST_CASE("the built-in demonstration repositories have the documented shape") {
    InstanceModel farmer = build_farmer_donkey_model();
    CHECK(farmer.text_source == "DocumentFile");
    CHECK(farmer.document_file == "Samples\\SimpleSentence.txt");
    REQUIRE(farmer.contexts.size() == 1);
    const StructuralParent& sp = farmer.contexts[0].parent;
    CHECK(sp.class_name == "EverydayObjectStructuralParentClass");
    REQUIRE(sp.timeline.size() == 2);
    const TimePoint& t1 = sp.timeline.at(0);
    REQUIRE(t1.instances.size() == 2);
    CHECK(t1.instances[0].id == "FarmerObjectFrameClass-1");
    CHECK(get_attribute(t1.instances[0], "FarmerObjectFrameClass", "BeatingState")->value ==
          "NotBeating");
    const TimePoint& t2 = sp.timeline.at(1);
    CHECK(get_attribute(t2.instances[0], "FarmerObjectFrameClass", "BeatingState")->value ==
          "Beating");

    InstanceModel manboy = build_man_boy_model();
    CHECK(manboy.text_source == "SubmittedFromWebClient");
    CHECK(manboy.document_file.empty());
    const TimePoint& mb1 = manboy.contexts[0].parent.timeline.at(0);
    CHECK(mb1.instances[0].content == "man young");
    CHECK(get_attribute(mb1.instances[0], "PersonObjectFrameClass", "HittingState") != nullptr);
    const TimePoint& mb2 = manboy.contexts[0].parent.timeline.at(1);
    CHECK(get_attribute(mb2.instances[0], "PersonObjectFrameClass", "HittingState") == nullptr);
}

TEST_CASE("default global assumptions are fixed and ordered") {
    auto assumptions = InstanceModel::default_assumptions();
    REQUIRE(assumptions.size() == 3);
    CHECK(assumptions[0].first == "EmptySpaceAssumption");
    CHECK(assumptions[1].first == "PermanentAttachmentsAssumption");
    CHECK(assumptions[2].first == "PerpetuationAssumption");
    for (const auto& [name, value] : assumptions) CHECK(value == "true");
}
