#pragma once

#include <string>
#include <vector>

#include "ross/fact_model.h"
#include "ross/infopedia.h"
#include "ross/xml_io.h"

namespace ross {

// One behavior-class candidate considered for a scenario.
struct OutcomeRecord {
    std::string behavior_class;
    int decl_index = 0;
    std::string status;       // ok | match-failure | skipped (direction) | error
    std::string detail;
    double probability = 1.0;
    InstanceModel model;      // candidate's resulting repository (when applied)
    bool applied = false;
};

struct InferenceOptions {
    int max_depth = 4;  // nested behavior-class applications
};

struct InferenceResult {
    std::vector<OutcomeRecord> outcomes;  // applied first, by probability
    InstanceModel final_model;            // top applied candidate (else the seeds)
    bool ok = false;
    std::string error;
};

// Seeds a fact repository from the scenario, evaluates every behavior class
// the query verb names, and ranks the outcomes.
InferenceResult run_scenario(const Infopedia& info, const Scenario& scenario,
                             const InferenceOptions& options = {});

// Applies one behavior class with the facts at `major_ordinal` as the major
// time point; consequences land on the following (minor) time point.
struct ApplyReport {
    std::string status = "ok";
    std::string detail;
    double probability = 1.0;
};
ApplyReport apply_behavior_class(const Infopedia& info, InstanceModel& model,
                                 const BehaviorClassDef& bc, int major_ordinal,
                                 const InferenceOptions& options = {});

}  // namespace ross
