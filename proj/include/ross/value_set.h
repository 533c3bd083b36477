#pragma once

#include "ross/value.h"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ross {

// A compiled value set: an enumerated list of symbolic members (in
// declaration order, possibly with per-member dictionary words), an integer
// range, or the unconstrained set of integer constants.
struct ValueSetDef {
    std::string name;
    std::string base_unit;          // BaseValueSet reference (e.g. Millimeter)
    std::string super_type_usage;   // LocationalValues / QualityValues / IntegerConstant...
    bool ordered = false;           // OrderedCollection

    bool integer_constants = false; // the set of all integer constants
    bool has_range = false;
    std::int64_t lo = 0, hi = 0;

    std::vector<std::string> members;                       // declaration order
    std::vector<std::vector<std::string>> member_words;     // dictionary words per member
    std::unordered_map<std::string, int> member_index;

    void add_member(std::string m, std::vector<std::string> words = {});

    bool contains(const Value& v) const;
    std::optional<int> ordinal(const Value& v) const;       // enumerated members only
    // n-step successor by declaration order (or integer step inside a range).
    // Empty result means the step leaves the set.
    std::optional<Value> successor(const Value& v, std::int64_t n) const;
    std::optional<Value> first_member() const;
};

// Reference brute-force membership used by the property tests.
bool contains_brute_force(const ValueSetDef& s, const Value& v);

} // namespace ross
