#include "ross/infopedia.h"

#include <algorithm>
#include <set>

namespace ross {

const char* verb_form_name(int index) {
    switch (((index % 5) + 5) % 5) {
    case 0: return "infinitive";
    case 1: return "simple-past";
    case 2: return "past-participle";
    case 3: return "present-3ps";
    default: return "present-participle";
    }
}

namespace {

template <typename T>
const T* by_name(const std::vector<T>& defs, const std::unordered_map<std::string, int>& ix,
                 const std::string& name) {
    auto it = ix.find(name);
    return it == ix.end() ? nullptr : &defs[static_cast<std::size_t>(it->second)];
}

} // namespace

Infopedia::Infopedia() {
    // The identity attribute type is built in: rule nodes bind and compare
    // instance identities through it, and it has no value set.
    AttributeTypeDef identity;
    identity.name = "UniqueIdentityAttributeType";
    identity.qualified = identity.name;
    identity.identity = true;
    identity.decl_index = 0;
    attribute_type_ix[identity.qualified] = 0;
    attribute_types.push_back(std::move(identity));
}

const ScalarDef* Infopedia::find_scalar(const std::string& name) const {
    return by_name(scalars, scalar_ix, name);
}

const ValueSetDef* Infopedia::find_value_set(const std::string& name) const {
    auto it = value_set_ix.find(name);
    return it == value_set_ix.end() ? nullptr : value_sets[static_cast<std::size_t>(it->second)].get();
}

const MappingDef* Infopedia::find_mapping(const std::string& name) const {
    return by_name(mappings, mapping_ix, name);
}

const TransformDef* Infopedia::find_transform(const std::string& name) const {
    return by_name(transforms, transform_ix, name);
}

const SpecificationSystemDef* Infopedia::find_specification_system(const std::string& name) const {
    return by_name(specification_systems, specification_system_ix, name);
}

const PopulatedObjectClassDef* Infopedia::find_populated_class(const std::string& name) const {
    return by_name(populated_classes, populated_ix, name);
}

const BehaviorClassDef* Infopedia::behavior_at(int index) const {
    if (index < 0 || index >= static_cast<int>(behavior_classes.size())) return nullptr;
    return &behavior_classes[static_cast<std::size_t>(index)];
}

std::vector<const BehaviorClassDef*> Infopedia::find_behavior_classes(const std::string& name) const {
    std::vector<const BehaviorClassDef*> out;
    auto it = behavior_ix.find(name);
    if (it == behavior_ix.end()) return out;
    for (int i : it->second) out.push_back(&behavior_classes[static_cast<std::size_t>(i)]);
    return out;
}

const ObjectFrameClassDef* Infopedia::find_class(const std::string& name) const {
    if (const auto* c = by_name(classes, class_ix, name)) return c;
    // unique bare-name fallback for structure-nested classes
    const ObjectFrameClassDef* found = nullptr;
    for (const auto& c : classes) {
        if (c.name != name) continue;
        if (found) return nullptr;   // ambiguous
        found = &c;
    }
    return found;
}

const DimensionSystemDef* Infopedia::find_dimension_system(const std::string& name) const {
    if (const auto* d = by_name(dimension_systems, dimension_system_ix, name)) return d;
    const DimensionSystemDef* found = nullptr;
    for (const auto& d : dimension_systems) {
        if (d.name != name) continue;
        if (found) return nullptr;
        found = &d;
    }
    return found;
}

const AttributeTypeDef* Infopedia::find_attribute_type(const std::string& qualified) const {
    return by_name(attribute_types, attribute_type_ix, qualified);
}

const AttributeTypeDef* Infopedia::resolve_attribute_type(const std::string& class_context,
                                                          const std::string& name) const {
    if (name.find('.') != std::string::npos) return find_attribute_type(name);

    if (!class_context.empty()) {
        for (const auto& cls : flattened_ancestry(class_context)) {
            if (const auto* at = find_attribute_type(cls + "." + name)) return at;
        }
    }
    if (const auto* at = find_attribute_type(name)) return at;

    // Dimension-system locals resolve by bare name from any scope: attribute
    // placeholders routinely name coordinates of a different system.
    const AttributeTypeDef* found = nullptr;
    for (const auto& at : attribute_types) {
        if (at.name != name || at.owner.empty() || at.owner_is_class) continue;
        if (!found || at.decl_index < found->decl_index) found = &at;
    }
    return found;
}

const ValueSetDef* Infopedia::effective_values(const AttributeTypeDef& at) const {
    if (at.values) return at.values.get();
    if (!at.value_set_ref.empty()) return find_value_set(at.value_set_ref);
    return nullptr;
}

bool Infopedia::is_a(const std::string& cls, const std::string& ancestor) const {
    if (cls == ancestor) return true;
    const auto* def = find_class(cls);
    if (!def) return false;
    const auto* target = find_class(ancestor);
    std::set<std::string> seen;
    std::vector<const ObjectFrameClassDef*> stack{def};
    while (!stack.empty()) {
        const auto* c = stack.back();
        stack.pop_back();
        if (!seen.insert(c->qualified).second) continue;
        if (c->qualified == ancestor || c->name == ancestor || (target && c == target)) return true;
        for (const auto& h : c->higher_classes)
            if (const auto* hc = find_class(h)) stack.push_back(hc);
    }
    return false;
}

std::vector<std::string> Infopedia::flattened_ancestry(const std::string& cls) const {
    std::vector<std::string> order;
    std::set<std::string> seen;
    // depth-first, declaration order, nearest first
    auto walk = [&](auto&& self, const std::string& name) -> void {
        const auto* def = find_class(name);
        if (!def) return;
        if (!seen.insert(def->qualified).second) return;
        order.push_back(def->qualified);
        for (const auto& h : def->higher_classes) self(self, h);
    };
    walk(walk, cls);
    return order;
}

std::vector<std::string> Infopedia::find_inheritance_cycle() const {
    // three-color DFS over HigherClasses
    std::unordered_map<std::string, int> state;   // 0 new, 1 in progress, 2 done
    std::vector<std::string> path;
    std::vector<std::string> cycle;

    auto visit = [&](auto&& self, const ObjectFrameClassDef& c) -> bool {
        int& st = state[c.qualified];
        if (st == 2) return false;
        if (st == 1) {
            auto it = std::find(path.begin(), path.end(), c.qualified);
            cycle.assign(it, path.end());
            return true;
        }
        st = 1;
        path.push_back(c.qualified);
        for (const auto& h : c.higher_classes) {
            if (const auto* hc = find_class(h)) {
                if (self(self, *hc)) return true;
            }
        }
        path.pop_back();
        state[c.qualified] = 2;
        return false;
    };

    for (const auto& c : classes) {
        if (visit(visit, c)) return cycle;
    }
    return {};
}

std::string Infopedia::structural_parent_of(const std::string& cls) const {
    for (const auto& name : flattened_ancestry(cls)) {
        const auto* def = find_class(name);
        if (def && !def->structural_parent_classes_base.empty())
            return def->structural_parent_classes_base.front();
    }
    return {};
}

std::vector<const AttributeTypeDef*> Infopedia::flattened_attribute_types(const std::string& cls) const {
    std::vector<const AttributeTypeDef*> out;
    std::set<std::string> seen_bare;
    for (const auto& name : flattened_ancestry(cls)) {
        const auto* def = find_class(name);
        if (!def) continue;
        for (const auto& q : def->attribute_types) {
            const auto* at = find_attribute_type(q);
            if (!at) continue;
            if (!seen_bare.insert(at->name).second) continue;   // nearer shadows farther
            out.push_back(at);
        }
    }
    return out;
}

namespace {

void gather_axis(const Infopedia& info, const std::string& ds_name, bool temporal,
                 std::vector<std::string>& out, std::set<std::string>& visiting) {
    const auto* ds = info.find_dimension_system(ds_name);
    if (!ds) return;
    if (!visiting.insert(ds->qualified).second) return;   // cycle guard
    if (!ds->rename_of.empty()) {
        gather_axis(info, ds->rename_of, temporal, out, visiting);
    } else if (!ds->merge_of.empty()) {
        for (const auto& part : ds->merge_of) gather_axis(info, part, temporal, out, visiting);
    } else {
        const auto& axis = temporal ? ds->temporal : ds->spatial;
        out.insert(out.end(), axis.begin(), axis.end());
    }
    visiting.erase(ds->qualified);
}

} // namespace

std::vector<std::string> Infopedia::resolved_spatial(const std::string& ds_name) const {
    std::vector<std::string> out;
    std::set<std::string> visiting;
    gather_axis(*this, ds_name, false, out, visiting);
    return out;
}

std::vector<std::string> Infopedia::resolved_temporal(const std::string& ds_name) const {
    std::vector<std::string> out;
    std::set<std::string> visiting;
    gather_axis(*this, ds_name, true, out, visiting);
    return out;
}

std::optional<Infopedia::TimelineInfo> Infopedia::timeline_of(const std::string& sp_class) const {
    const auto* cls = find_class(sp_class);
    if (!cls || cls->dimension_systems.empty()) return std::nullopt;
    const std::string& ds_name = cls->dimension_systems.front();
    const auto* ds = find_dimension_system(ds_name);
    if (!ds) return std::nullopt;

    auto temporal = resolved_temporal(ds->qualified);
    if (temporal.empty()) return std::nullopt;
    const auto* time_type = find_attribute_type(temporal.front());
    if (!time_type) time_type = resolve_attribute_type("", temporal.front());
    if (!time_type) return std::nullopt;
    const auto* points = effective_values(*time_type);
    if (!points) return std::nullopt;

    TimelineInfo t;
    t.timeline_name = cls->qualified + "." + ds->name;
    t.time_type = time_type;
    t.time_points = points;
    return t;
}

std::vector<LexiconEntry> Infopedia::lookup_word(const std::string& word) const {
    auto it = lexicon.find(word);
    if (it == lexicon.end()) return {};
    return it->second;
}

} // namespace ross
