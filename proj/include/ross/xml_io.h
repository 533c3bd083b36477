#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ross/fact_model.h"
#include "ross/infopedia.h"

namespace ross {

// Serializes a fact repository to its XML transcript form (canonical bytes:
// two-space indent, attributes in fixed order, trailing newline).
std::string emit_instance_model(const InstanceModel& model);

// Reads a transcript back. When `info` is given, every attribute assertion
// is checked: the attribute type must resolve and the value must belong to
// its value set.
std::optional<InstanceModel> parse_instance_model(const std::string& xml, const Infopedia* info,
                                                  std::string& err);

struct ScenarioSeed {
    std::string class_name;
    std::string id;
    std::string role;  // actor / actee / extra
    bool multiple = false;
    std::vector<std::pair<std::string, std::string>> attributes;  // type -> value
};

struct Scenario {
    std::string text_source;
    std::string document_file;
    std::vector<ScenarioSeed> seeds;
    std::string query_verb;
    std::string query_prior;        // optional prior-word filter
    std::string query_actor_class;  // optional
    std::string query_actee_class;  // optional
};

// Reads a scenario description, validating classes, roles, and seed
// attribute values against the knowledge base when `info` is given.
std::optional<Scenario> parse_scenario(const std::string& xml, const Infopedia* info,
                                       std::string& err);

}  // namespace ross
