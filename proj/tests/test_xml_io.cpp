#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ross/xml.h"
#include "ross/xml_io.h"
#include "test_support.h"

using namespace ross;
namespace ts = test_support;

TEST_CASE("the demonstration repositories serialize to the reference transcripts") {
    CHECK(emit_instance_model(build_farmer_donkey_model()) ==
          ts::read_file(ts::corpus_dir() + "/golden/farmer_donkey_model.xml"));
    CHECK(emit_instance_model(build_man_boy_model()) ==
          ts::read_file(ts::corpus_dir() + "/golden/man_boy_model.xml"));
}

TEST_CASE("transcripts read back and re-emit byte for byte") {
    for (const char* name : {"farmer_donkey_model.xml", "man_boy_model.xml"}) {
        CAPTURE(name);
        std::string golden = ts::read_file(ts::corpus_dir() + "/golden/" + name);
        std::string err;
        auto model = parse_instance_model(golden, nullptr, err);
        REQUIRE_MESSAGE(model.has_value(), err);
        CHECK(emit_instance_model(*model) == golden);
    }
}

TEST_CASE("reading a transcript against the knowledge base validates values") {
    auto compiled = ts::compile_examples_group();
    REQUIRE(compiled.diagnostics.empty());
    std::string golden = ts::read_file(ts::corpus_dir() + "/golden/farmer_donkey_model.xml");

    std::string err;
    CHECK(parse_instance_model(golden, compiled.infopedia.get(), err).has_value());

    std::string broken = golden;
    auto pos = broken.find("NotBeating");
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, 10, "Sideways");
    CHECK(!parse_instance_model(broken, compiled.infopedia.get(), err).has_value());
    CHECK(err.find("Sideways") != std::string::npos);
    CHECK(err.find("BeatingState") != std::string::npos);
}

TEST_CASE("negated and weighted attribute assertions round trip") {
    InstanceModel model = build_man_boy_model();
    Instance& man = model.contexts[0].parent.timeline.at(0).instances[0];
    set_attribute(man, {"PersonObjectFrameClass", "FitState", "Fit", true, 0.75, true});

    std::string xml = emit_instance_model(model);
    CHECK(xml.find("<Attribute negated=\"true\" probability=\"0.75\">") != std::string::npos);

    std::string err;
    auto back = parse_instance_model(xml, nullptr, err);
    REQUIRE_MESSAGE(back.has_value(), err);
    const AttributeValue* got = get_attribute(back->contexts[0].parent.timeline.at(0).instances[0],
                                              "PersonObjectFrameClass", "FitState");
    REQUIRE(got != nullptr);
    CHECK(got->negated);
    CHECK(got->has_probability);
    CHECK(got->probability == doctest::Approx(0.75));
    CHECK(emit_instance_model(*back) == xml);
}

TEST_CASE("components without assertions self-close") {
    InstanceModel model = build_man_boy_model();
    model.contexts[0].parent.timeline.at(0).instances[1].attributes.clear();
    std::string xml = emit_instance_model(model);
    CHECK(xml.find("<Component class=\"BoyObjectFrameClass\" instance=\"BoyObjectFrameInstance-1\""
                   " content=\"boy\"/>") != std::string::npos);
    std::string err;
    auto back = parse_instance_model(xml, nullptr, err);
    REQUIRE(back.has_value());
    CHECK(back->contexts[0].parent.timeline.at(0).instances[1].attributes.empty());
}

TEST_CASE("markup characters in content are escaped") {
    InstanceModel model = build_man_boy_model();
    model.contexts[0].parent.timeline.at(0).instances[0].content = "a<b>&\"c";
    std::string xml = emit_instance_model(model);
    CHECK(xml.find("content=\"a&lt;b&gt;&amp;&quot;c\"") != std::string::npos);
    std::string err;
    auto back = parse_instance_model(xml, nullptr, err);
    REQUIRE(back.has_value());
    CHECK(back->contexts[0].parent.timeline.at(0).instances[0].content == "a<b>&\"c");
}

TEST_CASE("normalized comparison ignores layout but not substance") {
    const char* compact = "<A x=\"1\" y=\"2\"><B>text here</B></A>";
    const char* spread = "<A y=\"2\" x=\"1\">\n  <!-- note -->\n  <B>  text   here </B>\n</A>";
    CHECK(!compare_normalized(compact, spread).has_value());

    auto diff = compare_normalized(compact, "<A x=\"1\" y=\"3\"><B>text here</B></A>");
    REQUIRE(diff.has_value());
    CHECK(diff->find("y=\"2\"") != std::string::npos);
    CHECK(diff->find("y=\"3\"") != std::string::npos);

    auto text_diff = compare_normalized(compact, "<A x=\"1\" y=\"2\"><B>other</B></A>");
    REQUIRE(text_diff.has_value());
    CHECK(text_diff->find("/A") != std::string::npos);

    CHECK(compare_normalized("<A/>", "<B/>").has_value());
    CHECK(compare_normalized("<A><B/></A>", "<A><B/><B/></A>").has_value());
}

TEST_CASE("the reader rejects malformed markup") {
    std::string err;
    CHECK(!xml_parse("<A><B></A>", err).has_value());
    CHECK(!xml_parse("<A x=1/>", err).has_value());
    CHECK(!xml_parse("<A>&bogus;</A>", err).has_value());
    CHECK(!xml_parse("<A/><B/>", err).has_value());
    CHECK(xml_parse("<?xml version=\"1.0\"?><!-- c --><A/>", err).has_value());
}

TEST_CASE("scenario files parse with seeds, roles, and the query") {
    auto compiled = ts::compile_examples_group();
    REQUIRE(compiled.diagnostics.empty());
    std::string err;
    auto scenario = parse_scenario(
        ts::read_file(ts::corpus_dir() + "/scenarios/farmer_beats_donkey.xml"),
        compiled.infopedia.get(), err);
    REQUIRE_MESSAGE(scenario.has_value(), err);
    CHECK(scenario->text_source == "DocumentFile");
    CHECK(scenario->document_file == "Samples\\SimpleSentence.txt");
    REQUIRE(scenario->seeds.size() == 2);
    CHECK(scenario->seeds[0].class_name == "FarmerObjectFrameClass");
    CHECK(scenario->seeds[0].role == "actor");
    CHECK(scenario->seeds[1].role == "actee");
    CHECK(scenario->query_verb == "beat");
}

TEST_CASE("scenario validation rejects unknown classes, roles, and values") {
    auto compiled = ts::compile_appendix_group();
    REQUIRE(compiled.diagnostics.empty());
    const Infopedia* info = compiled.infopedia.get();
    std::string err;

    CHECK(!parse_scenario("<Scenario><Seed class=\"NoSuchClass\" id=\"x-1\" role=\"actor\"/>"
                          "<Query verb=\"beat\"/></Scenario>", info, err).has_value());
    CHECK(err.find("NoSuchClass") != std::string::npos);

    CHECK(!parse_scenario("<Scenario><Seed class=\"PersonObjectFrameClass\" id=\"x-1\""
                          " role=\"bystander\"/><Query verb=\"beat\"/></Scenario>", info, err)
               .has_value());
    CHECK(err.find("bystander") != std::string::npos);

    CHECK(!parse_scenario("<Scenario><Seed class=\"CityCouncilmanObjectFrameClass\" id=\"x-1\""
                          " role=\"actor\"><Attribute type=\"AnticipatingHarmfulEventState\""
                          " value=\"Wrong\"/></Seed><Query verb=\"refused\"/></Scenario>",
                          info, err).has_value());
    CHECK(err.find("Wrong") != std::string::npos);

    CHECK(!parse_scenario("<Scenario><Seed class=\"PersonObjectFrameClass\" id=\"x-1\""
                          " role=\"actor\"/></Scenario>", info, err).has_value());
}
