#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ross/ast.h"
#include "ross/parser.h"
#include "test_support.h"

using namespace ross;
namespace ts = test_support;

TEST_CASE("every corpus file parses cleanly") {
    for (const auto& path : ts::star_fixtures()) {
        CAPTURE(path);
        Diagnostics diags;
        Document doc = parse(ts::read_file(path), path, diags);
        CHECK_MESSAGE(!diags.has_errors(), diags.format_all());
        CHECK(!doc.statements.empty());
    }
}

TEST_CASE("pretty printed source reparses to an equal document") {
    for (const auto& path : ts::star_fixtures()) {
        CAPTURE(path);
        Diagnostics diags;
        Document doc = parse(ts::read_file(path), path, diags);
        REQUIRE(!diags.has_errors());

        std::string printed = pretty_print(doc);
        Diagnostics diags2;
        Document reparsed = parse(printed, path, diags2);
        CHECK_MESSAGE(!diags2.has_errors(), diags2.format_all());
        CHECK(document_equal(doc, reparsed));
    }
}

TEST_CASE("pretty printing is a fixed point") {
    for (const auto& path : ts::star_fixtures()) {
        CAPTURE(path);
        Diagnostics diags;
        Document doc = parse(ts::read_file(path), path, diags);
        REQUIRE(!diags.has_errors());
        std::string once = pretty_print(doc);
        Diagnostics diags2;
        Document again = parse(once, path, diags2);
        REQUIRE(!diags2.has_errors());
        CHECK(pretty_print(again) == once);
    }
}

TEST_CASE("element heads tolerate space after the opening angle") {
    Diagnostics diags;
    Document doc = parse("ObjectFrameClass \"C\" ( < StructureTrait val = \"Compound\"/> );",
                         "inline", diags);
    CHECK(!diags.has_errors());
    REQUIRE(doc.statements.size() == 1);
}

TEST_CASE("dictionary nil arguments parse as an empty word list") {
    Diagnostics diags;
    Document doc = parse("ObjectFrameClass \"C\" ( Dictionary ( nil ); );", "inline", diags);
    CHECK(!diags.has_errors());
    const Node& section = doc.statements.at(0);
    const Node* dict = section.find("Dictionary");
    REQUIRE(dict != nullptr);
    CHECK(dict->args == std::vector<std::string>{"nil"});
}

TEST_CASE("value set range depictions keep their form") {
    Diagnostics diags;
    Document doc = parse("ValueSet \"S\" ( { 120 .. 220 } );", "inline", diags);
    REQUIRE(!diags.has_errors());
    std::string printed = pretty_print(doc);
    CHECK(printed.find("120 .. 220") != std::string::npos);
}

TEST_CASE("malformed input is reported, not accepted") {
    Diagnostics diags;
    parse("ObjectFrameClass \"C\" ( <Unclosed val = \"x\" );", "inline", diags);
    CHECK(diags.has_errors());
}
