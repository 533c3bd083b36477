#include "ross/transforms.h"

#include <cmath>

#include "ross/expr.h"

namespace ross {

std::optional<std::int64_t> apply_mapping(const Infopedia& info, const MappingDef& mapping,
                                          std::int64_t input, std::string& err) {
    if (const ValueSetDef* src = info.find_value_set(mapping.source_set)) {
        if (!src->contains(Value::integer(input))) {
            err = "input " + std::to_string(input) + " is not a member of " + mapping.source_set;
            return std::nullopt;
        }
    }
    if (!mapping.function) {
        err = "mapping " + mapping.name + " has no function";
        return std::nullopt;
    }
    EvalEnv env;
    env["x$"] = BoundValue{Value::integer(input), nullptr};
    std::string eval_err;
    auto result = eval_expr(mapping.function, env, eval_err);
    if (!eval_err.empty()) {
        err = "mapping " + mapping.name + ": " + eval_err;
        return std::nullopt;
    }
    std::int64_t out = 0;
    if (result.value.is_int()) {
        out = result.value.as_int();
    } else if (result.value.is_float()) {
        // unit conversions land on whole numbers; fractions truncate toward zero
        out = static_cast<std::int64_t>(result.value.as_float());
    } else {
        err = "mapping " + mapping.name + " produced a non-numeric result";
        return std::nullopt;
    }
    if (const ValueSetDef* dst = info.find_value_set(mapping.dest_set)) {
        if (!dst->contains(Value::integer(out))) {
            err = "result " + std::to_string(out) + " is not a member of " + mapping.dest_set;
            return std::nullopt;
        }
    }
    return out;
}

std::optional<std::int64_t> apply_mapping(const Infopedia& info, const std::string& mapping_name,
                                          std::int64_t input, std::string& err) {
    const MappingDef* m = info.find_mapping(mapping_name);
    if (!m) {
        err = "unknown mapping '" + mapping_name + "'";
        return std::nullopt;
    }
    return apply_mapping(info, *m, input, err);
}

RoutineResult run_routine(const RoutineDef& routine, const std::string& source) {
    RoutineResult result;
    result.returned = routine.return_true;

    int slots = 0;
    for (const auto& p : routine.params)
        if (p.array_size > 0) slots = p.array_size;
    result.dest.assign(static_cast<std::size_t>(slots), 0);

    for (const auto& branch : routine.branches) {
        if (branch.match != source) continue;
        result.matched = true;
        for (const auto& assign : branch.assigns) {
            std::int64_t index = -1;
            for (const auto& local : routine.locals)
                if (local.name == assign.slot) index = local.value;
            if (index >= 0 && index < slots) result.dest[static_cast<std::size_t>(index)] = assign.value;
        }
        break;
    }
    return result;
}

std::optional<std::vector<std::int64_t>> apply_transform(const Infopedia& info,
                                                         const TransformDef& transform,
                                                         const std::string& source,
                                                         std::string& err) {
    (void)info;
    if (!transform.routine) {
        err = "transform " + transform.name + " has no routine";
        return std::nullopt;
    }
    RoutineResult r = run_routine(*transform.routine, source);
    if (!r.matched)
        err = "transform " + transform.name + " has no branch for '" + source + "'";
    return r.dest;
}

std::optional<std::vector<std::int64_t>> apply_transform(const Infopedia& info,
                                                         const std::string& transform_name,
                                                         const std::string& source,
                                                         std::string& err) {
    const TransformDef* t = info.find_transform(transform_name);
    if (!t) {
        err = "unknown transform '" + transform_name + "'";
        return std::nullopt;
    }
    return apply_transform(info, *t, source, err);
}

}  // namespace ross
