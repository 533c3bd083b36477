#include "ross/inference.h"

#include <algorithm>
#include <map>
#include <set>

#include "ross/expr.h"

namespace ross {

namespace {

std::string node_role(const RuleNode& node) {
    if (node.passive) return "actee";
    if (node.extra) return "extra";
    return "actor";
}

std::string first_dictionary_word(const Infopedia& info, const std::string& class_name) {
    const ObjectFrameClassDef* cls = info.find_class(class_name);
    if (!cls) return "";
    for (const std::string& raw : cls->words.words) {
        std::string word = raw;
        while (!word.empty() && word.back() == ' ') word.pop_back();
        while (!word.empty() && word.front() == ' ') word.erase(word.begin());
        if (word.empty() || word == "nil") continue;
        return word;
    }
    return "";
}

// Rule application state shared between the antecedent and consequent halves.
struct RuleEnv {
    EvalEnv values;                           // location / temporal / quality vars
    std::map<std::string, std::string> ids;   // identity vars -> instance id
    std::map<std::string, std::string> roles; // actor/actee/extra -> instance id
    std::set<std::string> bound;              // instances already matched
    std::vector<std::string> notes;
};

std::string join_notes(const std::vector<std::string>& notes) {
    std::string out;
    for (const auto& n : notes) {
        if (!out.empty()) out += "; ";
        out += n;
    }
    return out;
}

class RuleApplication {
public:
    RuleApplication(const Infopedia& info, InstanceModel& model, const InferenceOptions& options)
        : info_(info), model_(model), options_(options) {}

    ApplyReport apply(const BehaviorClassDef& bc, int major_ordinal, int depth,
                      const std::map<std::string, std::string>& pre_bound);

private:
    const Infopedia& info_;
    InstanceModel& model_;
    const InferenceOptions& options_;

    StructuralParent& parent() { return model_.contexts.front().parent; }

    static ApplyReport failed(std::string status, std::string detail) {
        ApplyReport r;
        r.status = std::move(status);
        r.detail = std::move(detail);
        return r;
    }

    // First mismatch between the node's required values and stored facts.
    std::optional<std::string> value_conflict(const Instance& inst, const RuleNode& node) {
        for (const auto& attr : node.attrs) {
            if (attr.form != RuleNodeAttr::Form::Val) continue;
            const AttributeTypeDef* at = info_.resolve_attribute_type(node.class_ref, attr.ref);
            if (!at || at->identity) continue;
            const AttributeValue* stored = get_attribute(inst, at->owner, at->name);
            if (!stored) continue;
            if (stored->value != attr.value || stored->negated) {
                std::string held = stored->negated ? "not " + stored->value : stored->value;
                return at->name + " is '" + held + "' not '" + attr.value + "'";
            }
        }
        return std::nullopt;
    }

    Instance& create_instance(TimePoint& major, TimePoint& minor, const RuleNode& node,
                              const std::string& role) {
        int count = 0;
        for (const auto& inst : major.instances)
            if (inst.class_name == node.class_ref) ++count;
        Instance inst;
        inst.class_name = node.class_ref;
        inst.id = node.class_ref + "-" + std::to_string(count + 1);
        inst.content = first_dictionary_word(info_, node.class_ref);
        inst.role = role;
        inst.multiple = node.multiple;
        Instance shell = inst;
        minor.instances.push_back(std::move(shell));
        major.instances.push_back(std::move(inst));
        return major.instances.back();
    }

    // Binds one antecedent node variable from the matched instance.
    void bind_variable(RuleEnv& env, const Instance& inst, const AttributeTypeDef& at,
                       const std::string& var, const std::string& time_label,
                       const ValueSetDef* time_points) {
        if (at.identity) {
            env.ids[var] = inst.id;
            return;
        }
        if (at.locus == AttrLocus::Temporal) {
            env.values[var] = BoundValue{Value::text(time_label), time_points};
            return;
        }
        const ValueSetDef* values = info_.effective_values(at);
        if (const AttributeValue* stored = get_attribute(inst, at.owner, at.name)) {
            env.values[var] = BoundValue{Value::text(stored->value), values};
            return;
        }
        if (values) {
            if (auto first = values->first_member()) {
                env.values[var] = BoundValue{*first, values};
                return;
            }
        }
        env.values[var] = BoundValue{Value::nil(), values};
    }
};

ApplyReport RuleApplication::apply(const BehaviorClassDef& bc, int major_ordinal, int depth,
                                   const std::map<std::string, std::string>& pre_bound) {
    StructuralParent& sp = parent();
    if (!sp.timeline.count(major_ordinal))
        return failed("error", "no facts at time point ordinal " + std::to_string(major_ordinal));

    auto timeline = info_.timeline_of(sp.class_name);
    const ValueSetDef* time_points = timeline ? timeline->time_points : nullptr;
    std::string timeline_set = time_points ? time_points->name : "the timeline";

    int t_next = major_ordinal + 1;
    if (t_next >= static_cast<int>(sp.time_labels.size())) {
        std::string at = major_ordinal < static_cast<int>(sp.time_labels.size())
                             ? sp.time_labels[static_cast<std::size_t>(major_ordinal)]
                             : std::to_string(major_ordinal);
        return failed("error",
                      "end of timeline: no time point after '" + at + "' + 1 in " + timeline_set);
    }

    // The minor time point starts as a copy of the major one, taken before
    // any antecedent writes; optional causal features do not carry over.
    clone_structural_parent(info_, sp, major_ordinal, t_next);
    TimePoint& major = sp.timeline[major_ordinal];
    TimePoint& minor = sp.timeline[t_next];

    RuleEnv env;
    double probability = 1.0;

    // --- antecedent nodes: match against (or extend) the major time point ---
    for (const auto& node : bc.prior_nodes) {
        std::string role = node_role(node);
        Instance* target = nullptr;

        auto pre = pre_bound.find(role);
        if (pre != pre_bound.end()) {
            target = find_instance(major, pre->second);
            if (!target)
                return failed("error", "parameter instance '" + pre->second + "' is missing");
            if (!info_.is_a(target->class_name, node.class_ref))
                return failed("match-failure", "parameter instance " + target->id + " is a " +
                                                   target->class_name + ", not a " + node.class_ref);
            if (auto conflict = value_conflict(*target, node))
                return failed("match-failure", role + " " + target->id + ": " + *conflict);
        } else {
            std::optional<std::string> first_conflict;
            for (auto& inst : major.instances) {
                if (env.bound.count(inst.id)) continue;
                if (inst.role != role) continue;
                if (!info_.is_a(inst.class_name, node.class_ref)) continue;
                if (auto conflict = value_conflict(inst, node)) {
                    if (!first_conflict) first_conflict = role + " " + inst.id + ": " + *conflict;
                    continue;
                }
                target = &inst;
                break;
            }
            if (!target && first_conflict) return failed("match-failure", *first_conflict);
            if (!target) {
                target = &create_instance(major, minor, node, role);
                env.notes.push_back("introduced " + target->id);
            }
        }

        env.bound.insert(target->id);
        env.roles[role] = target->id;

        for (const auto& attr : node.attrs) {
            const AttributeTypeDef* at = info_.resolve_attribute_type(node.class_ref, attr.ref);
            if (!at)
                return failed("error", "unresolved attribute type '" + attr.ref + "' in " + bc.name);
            switch (attr.form) {
                case RuleNodeAttr::Form::Val: {
                    if (at->identity) break;
                    AttributeValue v;
                    v.declaring_class = at->owner;
                    v.attr_type = at->name;
                    v.value = attr.value;
                    set_attribute(*target, std::move(v));
                    break;
                }
                case RuleNodeAttr::Form::Var:
                    bind_variable(env, *target, *at, attr.var, major.label, time_points);
                    break;
                case RuleNodeAttr::Form::Expr: {
                    std::string eval_err;
                    eval_expr(attr.expr, env.values, eval_err);
                    if (!eval_err.empty()) return failed("error", eval_err);
                    break;
                }
            }
        }
    }

    // --- antecedent references: evidence from already-established states ---
    for (const auto& ref : bc.prior_refs) {
        auto defs = info_.find_behavior_classes(ref.behavior_class);
        if (defs.empty())
            return failed("error", "unknown behavior class '" + ref.behavior_class + "'");
        const BehaviorClassDef& evidence = *defs.front();

        const Instance* subject = nullptr;
        if (ref.param_actor_expr && ref.param_actor_expr->kind == Expr::Kind::Ident) {
            auto it = env.ids.find(ref.param_actor_expr->text);
            if (it != env.ids.end()) subject = find_instance(major, it->second);
        }
        if (!subject) {
            env.notes.push_back("evidence " + ref.behavior_class + " assumed (no bound subject)");
            probability *= ref.probability;
            continue;
        }

        const RuleNode* outcome = nullptr;
        for (const auto& node : evidence.post_nodes) {
            if (!node.passive && !node.extra) {
                outcome = &node;
                break;
            }
        }
        bool observed = false;
        if (outcome) {
            for (const auto& attr : outcome->attrs) {
                if (attr.form != RuleNodeAttr::Form::Val) continue;
                const AttributeTypeDef* at =
                    info_.resolve_attribute_type(outcome->class_ref, attr.ref);
                if (!at || at->identity) continue;
                const AttributeValue* stored = get_attribute(*subject, at->owner, at->name);
                if (!stored) continue;  // nothing recorded: assumed to hold
                if (stored->value == attr.value && !stored->negated) {
                    observed = true;
                    continue;
                }
                std::string held = stored->negated ? "not " + stored->value : stored->value;
                return failed("match-failure", "evidence " + ref.behavior_class + ": " + at->name +
                                                   " is '" + held + "' not '" + attr.value + "'");
            }
        }
        env.notes.push_back("evidence " + ref.behavior_class +
                            (observed ? " observed" : " assumed"));
        probability *= ref.probability;
    }

    // --- consequent nodes: write the resulting states onto the minor point ---
    for (const auto& node : bc.post_nodes) {
        std::string role = node_role(node);
        std::string id;
        if (auto it = env.roles.find(role); it != env.roles.end()) {
            id = it->second;
        } else {
            Instance& created = create_instance(major, minor, node, role);
            id = created.id;
            env.roles[role] = id;
            env.notes.push_back("introduced " + id);
        }
        Instance* inst = find_instance(minor, id);
        if (!inst) {
            if (const Instance* shell = find_instance(major, id)) {
                Instance copy = *shell;
                copy.attributes.clear();
                minor.instances.push_back(std::move(copy));
                inst = &minor.instances.back();
            } else {
                return failed("error", "instance '" + id + "' is missing from the minor time point");
            }
        }

        for (const auto& attr : node.attrs) {
            const AttributeTypeDef* at = info_.resolve_attribute_type(node.class_ref, attr.ref);
            if (!at)
                return failed("error", "unresolved attribute type '" + attr.ref + "' in " + bc.name);
            switch (attr.form) {
                case RuleNodeAttr::Form::Val: {
                    if (at->identity) break;
                    AttributeValue v;
                    v.declaring_class = at->owner;
                    v.attr_type = at->name;
                    v.value = attr.value;
                    v.negated = bc.negation;
                    if (node.has_probability) {
                        v.probability = node.probability;
                        v.has_probability = true;
                    }
                    set_attribute(*inst, std::move(v));
                    break;
                }
                case RuleNodeAttr::Form::Var:
                    bind_variable(env, *inst, *at, attr.var, minor.label, time_points);
                    break;
                case RuleNodeAttr::Form::Expr: {
                    if (at->identity) {
                        if (attr.expr && attr.expr->kind == Expr::Kind::Ident &&
                            !env.ids.count(attr.expr->text))
                            env.notes.push_back("identity expression '" + attr.expr->text +
                                                "' is unbound");
                        break;
                    }
                    std::string eval_err;
                    eval_expr(attr.expr, env.values, eval_err);
                    if (!eval_err.empty()) return failed("error", eval_err);
                    break;
                }
            }
        }
        if (node.has_probability) probability *= node.probability;
    }

    // --- consequent references: nested behavior classes applied in turn ---
    for (const auto& ref : bc.post_refs) {
        if (depth + 1 > options_.max_depth) {
            env.notes.push_back("nested " + ref.behavior_class + " skipped (depth limit)");
            continue;
        }
        auto defs = info_.find_behavior_classes(ref.behavior_class);
        if (defs.empty())
            return failed("error", "unknown behavior class '" + ref.behavior_class + "'");

        std::map<std::string, std::string> nested_bound;
        if (ref.param_actor_expr && ref.param_actor_expr->kind == Expr::Kind::Ident) {
            auto it = env.ids.find(ref.param_actor_expr->text);
            if (it != env.ids.end()) nested_bound["actor"] = it->second;
        }
        if (ref.param_actee_expr && ref.param_actee_expr->kind == Expr::Kind::Ident) {
            auto it = env.ids.find(ref.param_actee_expr->text);
            if (it != env.ids.end()) nested_bound["actee"] = it->second;
        }

        ApplyReport nested = apply(*defs.front(), t_next, depth + 1, nested_bound);
        if (nested.status != "ok")
            return failed(nested.status, "nested " + ref.behavior_class + ": " + nested.detail);
        probability *= ref.probability;
        env.notes.push_back("applied nested " + ref.behavior_class);
    }

    ApplyReport report;
    report.probability = probability;
    report.detail = join_notes(env.notes);
    return report;
}

}  // namespace

ApplyReport apply_behavior_class(const Infopedia& info, InstanceModel& model,
                                 const BehaviorClassDef& bc, int major_ordinal,
                                 const InferenceOptions& options) {
    if (model.contexts.empty()) {
        ApplyReport r;
        r.status = "error";
        r.detail = "the repository has no local context";
        return r;
    }
    RuleApplication app(info, model, options);
    return app.apply(bc, major_ordinal, 0, {});
}

InferenceResult run_scenario(const Infopedia& info, const Scenario& scenario,
                             const InferenceOptions& options) {
    InferenceResult result;

    // --- seed the repository ---
    InstanceModel model;
    model.text_source = scenario.text_source;
    model.document_file = scenario.document_file;
    model.global_assumptions = InstanceModel::default_assumptions();

    std::string sp_class;
    for (const auto& seed : scenario.seeds) {
        sp_class = info.structural_parent_of(seed.class_name);
        if (!sp_class.empty()) break;
    }
    if (sp_class.empty()) {
        result.error = "no structural parent class found for the seeded classes";
        return result;
    }
    auto timeline = info.timeline_of(sp_class);
    if (!timeline || !timeline->time_points) {
        result.error = "structural parent " + sp_class + " has no timeline";
        return result;
    }

    LocalContext ctx;
    ctx.parent.class_name = sp_class;
    ctx.parent.timeline_name = timeline->timeline_name;
    ctx.parent.time_labels = timeline->time_points->members;
    model.contexts.push_back(std::move(ctx));

    TimePoint& t1 = ensure_time_point(model.contexts.front().parent, 0);
    for (const auto& seed : scenario.seeds) {
        Instance inst;
        inst.class_name = seed.class_name;
        inst.id = seed.id;
        inst.content = first_dictionary_word(info, seed.class_name);
        inst.role = seed.role;
        inst.multiple = seed.multiple;
        for (const auto& [type, value] : seed.attributes) {
            const AttributeTypeDef* at = info.resolve_attribute_type(seed.class_name, type);
            if (!at) {
                result.error = "unknown attribute type '" + type + "' in seed " + seed.id;
                return result;
            }
            AttributeValue v;
            v.declaring_class = at->owner;
            v.attr_type = at->name;
            v.value = value;
            set_attribute(inst, std::move(v));
        }
        t1.instances.push_back(std::move(inst));
    }

    // --- collect behavior-class candidates from the query verb ---
    std::vector<const BehaviorClassDef*> candidates;
    std::set<std::string> seen;
    for (const auto& entry : info.lookup_word(scenario.query_verb)) {
        if (entry.kind != LexiconEntry::Kind::Verb) continue;
        if (!seen.insert(entry.owner).second) continue;
        for (const BehaviorClassDef* bc : info.find_behavior_classes(entry.owner))
            candidates.push_back(bc);
    }
    if (!scenario.query_prior.empty()) {
        std::erase_if(candidates, [&](const BehaviorClassDef* bc) {
            for (const auto& w : bc->prior_words.words)
                if (w == scenario.query_prior) return false;
            return true;
        });
    }
    auto role_class_mismatch = [&](const BehaviorClassDef* bc, const std::string& wanted,
                                   bool passive) {
        if (wanted.empty()) return false;
        for (const auto& node : bc->prior_nodes) {
            if (node.passive != passive || node.extra) continue;
            return !info.is_a(wanted, node.class_ref);
        }
        return false;
    };
    std::erase_if(candidates, [&](const BehaviorClassDef* bc) {
        return role_class_mismatch(bc, scenario.query_actor_class, false) ||
               role_class_mismatch(bc, scenario.query_actee_class, true);
    });
    if (candidates.empty()) {
        result.error = "no behavior class matches verb '" + scenario.query_verb + "'";
        result.final_model = model;
        return result;
    }

    // --- evaluate every candidate against its own copy of the facts ---
    for (const BehaviorClassDef* bc : candidates) {
        OutcomeRecord record;
        record.behavior_class = bc->name;
        record.decl_index = bc->decl_index;
        if (bc->rule_direction == "Backward") {
            record.status = "skipped (direction)";
            record.detail = "rule direction is Backward";
            result.outcomes.push_back(std::move(record));
            continue;
        }
        InstanceModel sandbox = model;
        ApplyReport report = apply_behavior_class(info, sandbox, *bc, 0, options);
        record.status = report.status;
        record.detail = report.detail;
        record.probability = report.probability;
        if (report.status == "ok") {
            record.model = std::move(sandbox);
            record.applied = true;
        }
        result.outcomes.push_back(std::move(record));
    }

    std::stable_sort(result.outcomes.begin(), result.outcomes.end(),
                     [](const OutcomeRecord& a, const OutcomeRecord& b) {
                         if (a.applied != b.applied) return a.applied;
                         if (a.applied && b.applied) return a.probability > b.probability;
                         return false;
                     });

    if (!result.outcomes.empty() && result.outcomes.front().applied) {
        result.final_model = result.outcomes.front().model;
        result.ok = true;
    } else {
        result.final_model = model;
        result.error = "no behavior class applied";
    }
    return result;
}

}  // namespace ross
