#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ross/compiler.h"
#include "test_support.h"

using namespace ross;
namespace ts = test_support;

namespace {

void check_counts(const Counts& got, const Counts& want) {
    CHECK(got.integers == want.integers);
    CHECK(got.floats == want.floats);
    CHECK(got.strings == want.strings);
    CHECK(got.value_sets == want.value_sets);
    CHECK(got.mappings == want.mappings);
    CHECK(got.transforms == want.transforms);
    CHECK(got.attribute_types == want.attribute_types);
    CHECK(got.relationship_types == want.relationship_types);
    CHECK(got.dimension_systems == want.dimension_systems);
    CHECK(got.specification_systems == want.specification_systems);
    CHECK(got.object_frame_classes == want.object_frame_classes);
    CHECK(got.template_classes == want.template_classes);
    CHECK(got.populated_object_classes == want.populated_object_classes);
    CHECK(got.behavior_classes == want.behavior_classes);
}

}  // namespace

TEST_CASE("the base definition group compiles to the reference counts") {
    auto result = ts::compile_appendix_group();
    CHECK_MESSAGE(result.diagnostics.empty(), result.diagnostics.format_all());
    Counts want;
    want.integers = 2;
    want.value_sets = 2;
    want.transforms = 1;
    want.dimension_systems = 4;
    want.object_frame_classes = 14;
    want.behavior_classes = 6;
    check_counts(result.infopedia->counts, want);
}

TEST_CASE("the worked example group compiles to the reference counts") {
    auto result = ts::compile_examples_group();
    CHECK_MESSAGE(result.diagnostics.empty(), result.diagnostics.format_all());
    Counts want;
    want.integers = 3;
    want.value_sets = 13;
    want.mappings = 2;
    want.transforms = 1;
    want.attribute_types = 17;
    want.dimension_systems = 6;
    want.specification_systems = 2;
    want.object_frame_classes = 20;
    want.template_classes = 1;
    want.populated_object_classes = 1;
    want.behavior_classes = 5;
    check_counts(result.infopedia->counts, want);
}

TEST_CASE("the acquisition group compiles to the reference counts") {
    auto result = ts::compile_acquisition_group();
    CHECK_MESSAGE(result.diagnostics.empty(), result.diagnostics.format_all());
    Counts want;
    want.integers = 3;
    want.value_sets = 13;
    want.mappings = 2;
    want.transforms = 1;
    want.attribute_types = 4;
    want.dimension_systems = 4;
    want.object_frame_classes = 14;
    want.behavior_classes = 4;
    check_counts(result.infopedia->counts, want);
}

TEST_CASE("includes are resolved once per file") {
    // EverydayObjectDefinitions is reachable through several files; compiling
    // the whole appendix keeps one definition of each class.
    auto result = ts::compile_appendix_group();
    REQUIRE(result.diagnostics.empty());
    CHECK(result.infopedia->find_class("EverydayObjectFrameClass") != nullptr);
}

TEST_CASE("lexicon: value words carry their owner and member") {
    auto result = ts::compile_examples_group();
    REQUIRE(result.diagnostics.empty());
    auto entries = result.infopedia->lookup_word("opal");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].owner == "VehicleExteriorColor");
    CHECK(entries[0].kind == LexiconEntry::Kind::ValueWord);
    CHECK(entries[0].detail == "White");
}

TEST_CASE("lexicon: one word may name several classes") {
    auto result = ts::compile_examples_group();
    REQUIRE(result.diagnostics.empty());
    auto entries = result.infopedia->lookup_word("resident");
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].owner == "HospitalResidentDoctorObjectFrameClass");
    CHECK(entries[1].owner == "HospitalResidentPatientObjectFrameClass");
    for (const auto& e : entries) {
        CHECK(e.kind == LexiconEntry::Kind::Noun);
        CHECK(e.detail == "singular");
    }
}

TEST_CASE("lexicon: verb forms follow the five slot convention") {
    auto result = ts::compile_examples_group();
    REQUIRE(result.diagnostics.empty());
    auto entries = result.infopedia->lookup_word("hitting");
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].owner == "PersonHitsPerson");
    CHECK(entries[0].kind == LexiconEntry::Kind::Verb);
    CHECK(entries[0].detail == "present-participle");
    CHECK(entries[0].index % 5 == 4);
}

TEST_CASE("lexicon: behavior classes share verb words in declaration order") {
    auto result = ts::compile_appendix_group();
    REQUIRE(result.diagnostics.empty());
    auto entries = result.infopedia->lookup_word("refused");
    std::vector<std::string> owners;
    for (const auto& e : entries)
        if (e.kind == LexiconEntry::Kind::Verb &&
            (owners.empty() || owners.back() != e.owner))
            owners.push_back(e.owner);
    REQUIRE(owners.size() == 3);
    CHECK(owners[0] == "RefusingSomethingDueToFearBehaviorClass");
    CHECK(owners[1] == "RefusingSomethingDueToFearOnPartOfRequestorBehaviorClass");
    CHECK(owners[2] == "RefusingSomethingDueToScheduleConflictBehaviorClass");
}

TEST_CASE("verb form names cycle through the five slots") {
    CHECK(std::string(verb_form_name(0)) == "infinitive");
    CHECK(std::string(verb_form_name(1)) == "simple-past");
    CHECK(std::string(verb_form_name(2)) == "past-participle");
    CHECK(std::string(verb_form_name(3)) == "present-3ps");
    CHECK(std::string(verb_form_name(4)) == "present-participle");
    CHECK(std::string(verb_form_name(9)) == "present-participle");
}

TEST_CASE("inheritance answers is-a along HigherClasses chains") {
    auto result = ts::compile_appendix_group();
    REQUIRE(result.diagnostics.empty());
    const Infopedia& info = *result.infopedia;
    CHECK(info.is_a("CityCouncilmanObjectFrameClass", "PersonObjectFrameClass"));
    CHECK(info.is_a("CityCouncilmanObjectFrameClass", "IntelligentAgentObjectFrameClass"));
    CHECK(!info.is_a("PersonObjectFrameClass", "CityCouncilmanObjectFrameClass"));
    CHECK(info.is_a("PersonObjectFrameClass", "PersonObjectFrameClass"));
}

TEST_CASE("structural parents come from the ancestry") {
    auto result = ts::compile_appendix_group();
    REQUIRE(result.diagnostics.empty());
    CHECK(result.infopedia->structural_parent_of("CityCouncilmanObjectFrameClass") ==
          "EverydayObjectStructuralParentClass");
}

TEST_CASE("the structural parent timeline exposes ordered time points") {
    auto result = ts::compile_appendix_group();
    REQUIRE(result.diagnostics.empty());
    auto timeline = result.infopedia->timeline_of("EverydayObjectStructuralParentClass");
    REQUIRE(timeline.has_value());
    CHECK(timeline->timeline_name ==
          "EverydayObjectStructuralParentClass.EverydayObjectDimensionSystem");
    REQUIRE(timeline->time_points != nullptr);
    CHECK(timeline->time_points->ordered);
    REQUIRE(timeline->time_points->members.size() == 30);
    CHECK(timeline->time_points->members.front() == "T01");
    CHECK(timeline->time_points->members.back() == "T30");
}

TEST_CASE("attribute types resolve through the class context") {
    auto result = ts::compile_appendix_group();
    REQUIRE(result.diagnostics.empty());
    const Infopedia& info = *result.infopedia;

    const AttributeTypeDef* at =
        info.resolve_attribute_type("CityCouncilmanObjectFrameClass", "AnticipatingHarmfulEventState");
    REQUIRE(at != nullptr);
    CHECK(at->owner == "IntelligentAgentObjectFrameClass");
    CHECK(at->optional_causal_feature);
    CHECK(at->state);

    const AttributeTypeDef* identity =
        info.resolve_attribute_type("PersonObjectFrameClass", "UniqueIdentityAttributeType");
    REQUIRE(identity != nullptr);
    CHECK(identity->identity);
}

TEST_CASE("class-local attribute types shadow shared ones") {
    auto result = ts::compile_examples_group();
    REQUIRE(result.diagnostics.empty());
    const AttributeTypeDef* at =
        result.infopedia->resolve_attribute_type("ManObjectFrameClass", "PersonAge");
    REQUIRE(at != nullptr);
    CHECK(at->owner == "PersonObjectFrameClass");
}

TEST_CASE("nested structure classes are reachable by bare and dotted name") {
    auto result = ts::compile_examples_group();
    REQUIRE(result.diagnostics.empty());
    const Infopedia& info = *result.infopedia;
    const ObjectFrameClassDef* bare = info.find_class("HeadObjectFrameClass");
    REQUIRE(bare != nullptr);
    CHECK(bare->qualified == "AnimalObjectFrameClass.HeadObjectFrameClass");
    CHECK(info.find_class("AnimalObjectFrameClass.HeadObjectFrameClass") == bare);
}

TEST_CASE("inheritance cycles are reported as errors") {
    std::string source =
        "ObjectFrameClass \"A\" ( HigherClasses ( { \"B\" } ); );\n"
        "ObjectFrameClass \"B\" ( HigherClasses ( { \"C\" } ); );\n"
        "ObjectFrameClass \"C\" ( HigherClasses ( { \"A\" } ); );\n";
    auto result = compile_source(source, "cycle.star");
    CHECK(result.diagnostics.has_errors());
    bool mentions_cycle = false;
    for (const auto& d : result.diagnostics.items())
        if (d.message.find("cycle") != std::string::npos) mentions_cycle = true;
    CHECK(mentions_cycle);
}

TEST_CASE("unknown references are reported with their location") {
    auto result = compile_source(
        "ObjectFrameClass \"A\" ( HigherClasses ( { \"Missing\" } ); );\n", "missing.star");
    CHECK(result.diagnostics.has_errors());
}
