#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ross/infopedia.h"

namespace ross {

// Applies a unit mapping to an integer input: the mapping's function is
// evaluated with x$ bound to the input, fractional results are truncated
// toward zero, and both endpoints are checked against their value sets.
std::optional<std::int64_t> apply_mapping(const Infopedia& info, const MappingDef& mapping,
                                          std::int64_t input, std::string& err);

// Convenience: looks the mapping up by name first.
std::optional<std::int64_t> apply_mapping(const Infopedia& info, const std::string& mapping_name,
                                          std::int64_t input, std::string& err);

struct RoutineResult {
    std::vector<std::int64_t> dest;  // one slot per element of the array parameter
    bool matched = false;            // a branch handled the source value
    bool returned = true;            // the routine's return value
};

// Runs an embedded transform routine against one source value. Unmatched
// sources leave every destination slot zeroed.
RoutineResult run_routine(const RoutineDef& routine, const std::string& source);

// Applies a transform by running its routine. err is set (and the zeroed
// slots still returned) when no branch handles the source value.
std::optional<std::vector<std::int64_t>> apply_transform(const Infopedia& info,
                                                         const TransformDef& transform,
                                                         const std::string& source,
                                                         std::string& err);

std::optional<std::vector<std::int64_t>> apply_transform(const Infopedia& info,
                                                         const std::string& transform_name,
                                                         const std::string& source,
                                                         std::string& err);

}  // namespace ross
