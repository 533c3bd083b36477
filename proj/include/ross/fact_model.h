#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ross/infopedia.h"

namespace ross {

// One attribute assertion held by an instance at one time point.
struct AttributeValue {
    std::string declaring_class;  // qualified owner class; "" for shared attribute types
    std::string attr_type;        // bare attribute type name
    std::string value;
    bool negated = false;
    double probability = 1.0;
    bool has_probability = false;
};

struct Instance {
    std::string class_name;
    std::string id;       // e.g. FarmerObjectFrameClass-1
    std::string content;  // surface word the instance stands for; may be empty
    std::string role;     // actor / actee / extra / ""
    bool multiple = false;
    std::vector<AttributeValue> attributes;
};

struct TimePoint {
    std::string label;  // e.g. T01
    std::vector<Instance> instances;
};

// A structural parent's timeline: facts keyed by time-point ordinal.
struct StructuralParent {
    std::string class_name;
    std::string timeline_name;             // Class.DimensionSystem
    std::vector<std::string> time_labels;  // full ordered label list
    std::map<int, TimePoint> timeline;     // ordinal -> populated time point
};

struct LocalContext {
    int context_id = 1;
    std::string mood_and_tense = "Declarative-PastSimple";
    StructuralParent parent;
};

struct InstanceModel {
    std::string text_source;    // DocumentFile / SubmittedFromWebClient / ...
    std::string document_file;  // optional source path
    std::vector<std::pair<std::string, std::string>> global_assumptions;
    std::vector<LocalContext> contexts;

    static std::vector<std::pair<std::string, std::string>> default_assumptions();
};

// Creates (with its label) or returns the time point at `ordinal`.
TimePoint& ensure_time_point(StructuralParent& parent, int ordinal);

Instance* find_instance(TimePoint& tp, const std::string& id);
const Instance* find_instance(const TimePoint& tp, const std::string& id);

// Replaces any existing assertion for the same (declaring_class, attr_type).
void set_attribute(Instance& inst, AttributeValue value);
const AttributeValue* get_attribute(const Instance& inst, const std::string& declaring_class,
                                    const std::string& attr_type);

// Copies the time point at `from` onto `to`, dropping attributes whose types
// are optional causal features: those describe momentary causes, so they do
// not perpetuate onto the next time point.
void clone_structural_parent(const Infopedia& info, StructuralParent& parent, int from, int to);

// Hand-built demonstration repositories matching the reference transcripts.
InstanceModel build_farmer_donkey_model();
InstanceModel build_man_boy_model();

}  // namespace ross
