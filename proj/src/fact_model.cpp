#include "ross/fact_model.h"

#include <cstdio>

namespace ross {

std::vector<std::pair<std::string, std::string>> InstanceModel::default_assumptions() {
    return {{"EmptySpaceAssumption", "true"},
            {"PermanentAttachmentsAssumption", "true"},
            {"PerpetuationAssumption", "true"}};
}

TimePoint& ensure_time_point(StructuralParent& parent, int ordinal) {
    auto it = parent.timeline.find(ordinal);
    if (it != parent.timeline.end()) return it->second;
    TimePoint tp;
    if (ordinal >= 0 && ordinal < static_cast<int>(parent.time_labels.size()))
        tp.label = parent.time_labels[static_cast<std::size_t>(ordinal)];
    return parent.timeline.emplace(ordinal, std::move(tp)).first->second;
}

Instance* find_instance(TimePoint& tp, const std::string& id) {
    for (auto& inst : tp.instances)
        if (inst.id == id) return &inst;
    return nullptr;
}

const Instance* find_instance(const TimePoint& tp, const std::string& id) {
    for (const auto& inst : tp.instances)
        if (inst.id == id) return &inst;
    return nullptr;
}

void set_attribute(Instance& inst, AttributeValue value) {
    for (auto& a : inst.attributes) {
        if (a.declaring_class == value.declaring_class && a.attr_type == value.attr_type) {
            a = std::move(value);
            return;
        }
    }
    inst.attributes.push_back(std::move(value));
}

const AttributeValue* get_attribute(const Instance& inst, const std::string& declaring_class,
                                    const std::string& attr_type) {
    for (const auto& a : inst.attributes)
        if (a.declaring_class == declaring_class && a.attr_type == attr_type) return &a;
    return nullptr;
}

void clone_structural_parent(const Infopedia& info, StructuralParent& parent, int from, int to) {
    TimePoint copy;
    if (auto it = parent.timeline.find(from); it != parent.timeline.end()) copy = it->second;
    if (to >= 0 && to < static_cast<int>(parent.time_labels.size()))
        copy.label = parent.time_labels[static_cast<std::size_t>(to)];
    for (auto& inst : copy.instances) {
        std::vector<AttributeValue> kept;
        kept.reserve(inst.attributes.size());
        for (auto& a : inst.attributes) {
            std::string key = a.declaring_class.empty() ? a.attr_type
                                                        : a.declaring_class + "." + a.attr_type;
            const AttributeTypeDef* at = info.find_attribute_type(key);
            if (!at) at = info.resolve_attribute_type(inst.class_name, a.attr_type);
            if (at && at->optional_causal_feature) continue;
            kept.push_back(std::move(a));
        }
        inst.attributes = std::move(kept);
    }
    parent.timeline[to] = std::move(copy);
}

namespace {

std::vector<std::string> default_time_labels() {
    std::vector<std::string> labels;
    labels.reserve(30);
    for (int i = 1; i <= 30; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "T%02d", i);
        labels.emplace_back(buf);
    }
    return labels;
}

Instance make_instance(std::string cls, std::string id, std::string content, std::string role) {
    Instance inst;
    inst.class_name = std::move(cls);
    inst.id = std::move(id);
    inst.content = std::move(content);
    inst.role = std::move(role);
    return inst;
}

AttributeValue attr(std::string declaring, std::string type, std::string value) {
    AttributeValue a;
    a.declaring_class = std::move(declaring);
    a.attr_type = std::move(type);
    a.value = std::move(value);
    return a;
}

InstanceModel everyday_model_skeleton(std::string text_source, std::string document_file) {
    InstanceModel model;
    model.text_source = std::move(text_source);
    model.document_file = std::move(document_file);
    model.global_assumptions = InstanceModel::default_assumptions();
    LocalContext ctx;
    ctx.parent.class_name = "EverydayObjectStructuralParentClass";
    ctx.parent.timeline_name = "EverydayObjectStructuralParentClass.EverydayObjectDimensionSystem";
    ctx.parent.time_labels = default_time_labels();
    model.contexts.push_back(std::move(ctx));
    return model;
}

}  // namespace

InstanceModel build_farmer_donkey_model() {
    InstanceModel model = everyday_model_skeleton("DocumentFile", "Samples\\SimpleSentence.txt");
    StructuralParent& sp = model.contexts[0].parent;

    TimePoint& t1 = ensure_time_point(sp, 0);
    Instance farmer = make_instance("FarmerObjectFrameClass", "FarmerObjectFrameClass-1", "farmer", "actor");
    set_attribute(farmer, attr("FarmerObjectFrameClass", "BeatingState", "NotBeating"));
    Instance donkey = make_instance("DonkeyObjectFrameClass", "DonkeyObjectFrameClass-1", "donkey", "actee");
    set_attribute(donkey, attr("DonkeyObjectFrameClass", "PassiveIsBeatenState", "NotBeaten"));
    t1.instances.push_back(std::move(farmer));
    t1.instances.push_back(std::move(donkey));

    TimePoint& t2 = ensure_time_point(sp, 1);
    t2.instances = t1.instances;
    set_attribute(t2.instances[0], attr("FarmerObjectFrameClass", "BeatingState", "Beating"));
    set_attribute(t2.instances[1], attr("DonkeyObjectFrameClass", "PassiveIsBeatenState", "Beaten"));
    return model;
}

InstanceModel build_man_boy_model() {
    InstanceModel model = everyday_model_skeleton("SubmittedFromWebClient", "");
    StructuralParent& sp = model.contexts[0].parent;

    TimePoint& t1 = ensure_time_point(sp, 0);
    Instance man = make_instance("ManObjectFrameClass", "ManObjectFrameInstance-1", "man young", "actor");
    set_attribute(man, attr("PersonObjectFrameClass", "PersonAge", "Child"));
    set_attribute(man, attr("PersonObjectFrameClass", "HittingState", "Hitting"));
    Instance boy = make_instance("BoyObjectFrameClass", "BoyObjectFrameInstance-1", "boy", "actee");
    set_attribute(boy, attr("PersonObjectFrameClass", "PassiveHitState", "NotHit"));
    t1.instances.push_back(std::move(man));
    t1.instances.push_back(std::move(boy));

    TimePoint& t2 = ensure_time_point(sp, 1);
    Instance man2 = make_instance("ManObjectFrameClass", "ManObjectFrameInstance-1", "man young", "actor");
    set_attribute(man2, attr("PersonObjectFrameClass", "PersonAge", "Child"));
    Instance boy2 = make_instance("BoyObjectFrameClass", "BoyObjectFrameInstance-1", "boy", "actee");
    set_attribute(boy2, attr("PersonObjectFrameClass", "PassiveHitState", "Hit"));
    t2.instances.push_back(std::move(man2));
    t2.instances.push_back(std::move(boy2));
    return model;
}

}  // namespace ross
