#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ross/inference.h"
#include "ross/xml.h"
#include "test_support.h"

using namespace ross;
namespace ts = test_support;

namespace {

Scenario load_scenario(const Infopedia& info, const std::string& name) {
    std::string err;
    auto scenario =
        parse_scenario(ts::read_file(ts::corpus_dir() + "/scenarios/" + name), &info, err);
    REQUIRE_MESSAGE(scenario.has_value(), err);
    return *scenario;
}

const AttributeValue* instance_attr(const InstanceModel& model, int ordinal,
                                    const std::string& id, const std::string& declaring,
                                    const std::string& attr) {
    const StructuralParent& sp = model.contexts.at(0).parent;
    auto it = sp.timeline.find(ordinal);
    if (it == sp.timeline.end()) return nullptr;
    const Instance* inst = find_instance(it->second, id);
    if (!inst) return nullptr;
    return get_attribute(*inst, declaring, attr);
}

}  // namespace

TEST_CASE("a seeded beating scenario reproduces the reference transcript") {
    auto compiled = ts::compile_examples_group();
    REQUIRE(compiled.diagnostics.empty());
    const Infopedia& info = *compiled.infopedia;

    InferenceResult result = run_scenario(info, load_scenario(info, "farmer_beats_donkey.xml"));
    REQUIRE(result.ok);
    REQUIRE(result.outcomes.size() == 1);
    const OutcomeRecord& top = result.outcomes.front();
    CHECK(top.behavior_class == "FarmerBeatsDonkeyBehaviorClass");
    CHECK(top.status == "ok");
    CHECK(top.probability == doctest::Approx(1.0));
    CHECK(top.detail.find("evidence ActiveOwnershipBehaviorClass assumed") != std::string::npos);

    std::string golden = ts::read_file(ts::corpus_dir() + "/golden/farmer_donkey_model.xml");
    std::string xml = emit_instance_model(result.final_model);
    auto diff = compare_normalized(xml, golden);
    CHECK_MESSAGE(!diff.has_value(), diff ? *diff : "");
    CHECK(xml == golden);
}

TEST_CASE("advocating talkers leave listeners anticipating a harmful event") {
    auto compiled = ts::compile_appendix_group();
    REQUIRE(compiled.diagnostics.empty());
    const Infopedia& info = *compiled.infopedia;

    InferenceResult result = run_scenario(info, load_scenario(info, "winograd_advocated.xml"));
    REQUIRE(result.ok);
    const OutcomeRecord& top = result.outcomes.front();
    CHECK(top.behavior_class == "TalkerAdvocatesActionWithListenersWhoAnticipateSomething");
    CHECK(top.detail.find("applied nested AnticipateHarmfulEventBehaviorClass") !=
          std::string::npos);

    const InstanceModel& model = result.final_model;
    // the nested rule runs at T02 -> T03; its conclusions land on T03
    REQUIRE(model.contexts.at(0).parent.timeline.count(2) == 1);

    const AttributeValue* anticipating =
        instance_attr(model, 2, "councilmen-1", "IntelligentAgentObjectFrameClass",
                      "AnticipatingHarmfulEventState");
    REQUIRE(anticipating != nullptr);
    CHECK(anticipating->value == "Anticipating");

    const AttributeValue* anticipated =
        instance_attr(model, 2, "CognitiveRepresentationOfHarmfulEvent-1",
                      "CognitiveRepresentationOfHarmfulEvent", "PassiveIsAnticipatedState");
    REQUIRE(anticipated != nullptr);
    CHECK(anticipated->value == "Anticipated");

    // the harmful-event representation was introduced by the nested rule,
    // with no dictionary word of its own
    const StructuralParent& sp = model.contexts.at(0).parent;
    const Instance* rep =
        find_instance(sp.timeline.at(2), "CognitiveRepresentationOfHarmfulEvent-1");
    REQUIRE(rep != nullptr);
    CHECK(rep->content.empty());
    CHECK(find_instance(sp.timeline.at(0), "CognitiveRepresentationOfHarmfulEvent-1") == nullptr);

    // the direct consequences landed on T02
    const AttributeValue* received =
        instance_attr(model, 1, "councilmen-1", "IntelligentAgentObjectFrameClass",
                      "CommunicationReceivedState");
    REQUIRE(received != nullptr);
    CHECK(received->value == "CommunicationReceived");
}

TEST_CASE("refusal candidates rank by probability with failures reported") {
    auto compiled = ts::compile_appendix_group();
    REQUIRE(compiled.diagnostics.empty());
    const Infopedia& info = *compiled.infopedia;

    InferenceResult result = run_scenario(info, load_scenario(info, "winograd_refused.xml"));
    REQUIRE(result.ok);
    REQUIRE(result.outcomes.size() == 3);

    CHECK(result.outcomes[0].behavior_class == "RefusingSomethingDueToFearBehaviorClass");
    CHECK(result.outcomes[0].status == "ok");
    CHECK(result.outcomes[0].probability == doctest::Approx(0.9));
    CHECK(result.outcomes[0].detail.find("evidence AnticipateHarmfulEventBehaviorClass observed") !=
          std::string::npos);

    CHECK(result.outcomes[1].behavior_class ==
          "RefusingSomethingDueToFearOnPartOfRequestorBehaviorClass");
    CHECK(result.outcomes[1].status == "ok");
    CHECK(result.outcomes[1].probability == doctest::Approx(0.02));

    CHECK(result.outcomes[2].behavior_class ==
          "RefusingSomethingDueToScheduleConflictBehaviorClass");
    CHECK(result.outcomes[2].status == "match-failure");
    CHECK(result.outcomes[2].detail.find("AnticipatingScheduleConflictState") != std::string::npos);
    CHECK(!result.outcomes[2].applied);

    // the winning model records the refusal on the second time point
    const AttributeValue* refusing = instance_attr(
        result.final_model, 1, "councilman-1", "PersonObjectFrameClass", "RefusingState");
    REQUIRE(refusing != nullptr);
    CHECK(refusing->value == "Refusing");

    // seeded optional causal features do not carry over to the next point
    CHECK(instance_attr(result.final_model, 1, "councilman-1", "IntelligentAgentObjectFrameClass",
                        "AnticipatingHarmfulEventState") == nullptr);
}

TEST_CASE("application works at the second-to-last point and fails at the last") {
    auto compiled = ts::compile_examples_group();
    REQUIRE(compiled.diagnostics.empty());
    const Infopedia& info = *compiled.infopedia;
    const BehaviorClassDef* bc = info.find_behavior_classes("FarmerBeatsDonkeyBehaviorClass").at(0);

    auto seed_at = [&](int ordinal) {
        InstanceModel model;
        model.text_source = "SubmittedFromWebClient";
        model.global_assumptions = InstanceModel::default_assumptions();
        LocalContext ctx;
        ctx.parent.class_name = "EverydayObjectStructuralParentClass";
        auto timeline = info.timeline_of(ctx.parent.class_name);
        ctx.parent.timeline_name = timeline->timeline_name;
        ctx.parent.time_labels = timeline->time_points->members;
        model.contexts.push_back(std::move(ctx));
        TimePoint& tp = ensure_time_point(model.contexts.front().parent, ordinal);
        Instance farmer;
        farmer.class_name = "FarmerObjectFrameClass";
        farmer.id = "f-1";
        farmer.role = "actor";
        Instance donkey;
        donkey.class_name = "DonkeyObjectFrameClass";
        donkey.id = "d-1";
        donkey.role = "actee";
        tp.instances.push_back(std::move(farmer));
        tp.instances.push_back(std::move(donkey));
        return model;
    };

    InstanceModel at29 = seed_at(28);  // T29: one step of room left
    ApplyReport ok = apply_behavior_class(info, at29, *bc, 28);
    CHECK(ok.status == "ok");
    CHECK(at29.contexts.front().parent.timeline.count(29) == 1);
    CHECK(at29.contexts.front().parent.timeline.at(29).label == "T30");

    InstanceModel at30 = seed_at(29);  // T30: the timeline ends here
    ApplyReport end = apply_behavior_class(info, at30, *bc, 29);
    CHECK(end.status == "error");
    CHECK(end.detail ==
          "end of timeline: no time point after 'T30' + 1 in EverydayObjectTimelineDimensionSystem.Time");
}

TEST_CASE("backward rules are skipped, not applied") {
    std::string source =
        "ValueSet \"States\" ( { \"Off\", \"On\" } );\n"
        "AttributeType \"Switch\" ( <SuperType val = \"Qualitative\"/>"
        " <ValueSetName ref = States/> );\n"
        "DimensionSystem \"TinyTimeline\" ( LocationAttributeTypes ( TemporalAttributeTypes (\n"
        "  \"Tick\" ( <SuperType val = \"Locational\"/> \"ValueSet\" (\n"
        "    <OrderedCollection val = \"true\"/> { \"K1\", \"K2\", \"K3\" } ) )\n"
        ") ); );\n"
        "ObjectFrameClass \"RoomStructuralParentClass\" (\n"
        "  StructuralParentClassesBase ( { \"RoomStructuralParentClass\" } );\n"
        "  DimensionSystems ( DimensionSystem \"RoomDimensionSystem\" ( TinyTimeline ); );\n"
        ");\n"
        "ObjectFrameClass \"LampObjectFrameClass\" (\n"
        "  Dictionary ( English ( { \"lamp\", \"lamps\" } ) );\n"
        "  HigherClasses ( { \"RoomStructuralParentClass\" } );\n"
        ");\n"
        "BehaviorClass \"LampTurnsBehaviorClass\" (\n"
        "  <CausalRule val = \"true\"/>\n"
        "  <RuleDirection type = \"Backward\"/>\n"
        "  Dictionary ( English ( { \"turn\", \"turned\", \"turned\", \"turns\", \"turning\" } ) );\n"
        "  PriorStates ( PopulatedObjectClass \"A\" (\n"
        "    <ObjectFrameClass ref = LampObjectFrameClass/>\n"
        "    <Attribute ref = Switch val = \"Off\"/> ); );\n"
        "  PostStates ( PopulatedObjectClass \"C\" (\n"
        "    <ObjectFrameClass ref = LampObjectFrameClass/>\n"
        "    <Attribute ref = Switch val = \"On\"/> ); );\n"
        ");\n";
    auto compiled = compile_source(source, "backward.star");
    REQUIRE_MESSAGE(!compiled.diagnostics.has_errors(), compiled.diagnostics.format_all());

    std::string err;
    auto scenario = parse_scenario(
        "<Scenario><Sources textSource=\"SubmittedFromWebClient\"/>"
        "<Seed class=\"LampObjectFrameClass\" id=\"lamp-1\" role=\"actor\"/>"
        "<Query verb=\"turned\"/></Scenario>",
        compiled.infopedia.get(), err);
    REQUIRE_MESSAGE(scenario.has_value(), err);

    InferenceResult result = run_scenario(*compiled.infopedia, *scenario);
    CHECK(!result.ok);
    REQUIRE(result.outcomes.size() == 1);
    CHECK(result.outcomes[0].status == "skipped (direction)");
    CHECK(result.error == "no behavior class applied");
}

TEST_CASE("the depth limit stops nested applications with a note") {
    auto compiled = ts::compile_appendix_group();
    REQUIRE(compiled.diagnostics.empty());
    const Infopedia& info = *compiled.infopedia;

    InferenceOptions shallow;
    shallow.max_depth = 0;
    InferenceResult result =
        run_scenario(info, load_scenario(info, "winograd_advocated.xml"), shallow);
    REQUIRE(result.ok);
    const OutcomeRecord& top = result.outcomes.front();
    CHECK(top.detail.find("nested AnticipateHarmfulEventBehaviorClass skipped (depth limit)") !=
          std::string::npos);
    // without the nested application there is no harmful-event representation
    CHECK(result.final_model.contexts.at(0).parent.timeline.count(2) == 0);
}

TEST_CASE("unknown verbs report a domain error") {
    auto compiled = ts::compile_examples_group();
    REQUIRE(compiled.diagnostics.empty());
    Scenario scenario;
    scenario.text_source = "SubmittedFromWebClient";
    ScenarioSeed seed;
    seed.class_name = "FarmerObjectFrameClass";
    seed.id = "f-1";
    seed.role = "actor";
    scenario.seeds.push_back(seed);
    scenario.query_verb = "teleported";
    InferenceResult result = run_scenario(*compiled.infopedia, scenario);
    CHECK(!result.ok);
    CHECK(result.error.find("teleported") != std::string::npos);
    CHECK(result.outcomes.empty());
}

TEST_CASE("two runs of the same scenario produce identical bytes") {
    auto compiled = ts::compile_examples_group();
    REQUIRE(compiled.diagnostics.empty());
    const Infopedia& info = *compiled.infopedia;
    Scenario scenario = load_scenario(info, "farmer_beats_donkey.xml");
    std::string a = emit_instance_model(run_scenario(info, scenario).final_model);
    std::string b = emit_instance_model(run_scenario(info, scenario).final_model);
    CHECK(a == b);
}
