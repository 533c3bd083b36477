#include "ross/xml_io.h"

#include <sstream>

#include "ross/value.h"
#include "ross/xml.h"

namespace ross {

namespace {

std::string format_probability(double p) {
    return Value::floating(p).to_string();
}

void emit_attribute(std::ostringstream& out, const AttributeValue& a) {
    out << "                <Attribute";
    if (a.negated) out << " negated=\"true\"";
    if (a.has_probability) out << " probability=\"" << format_probability(a.probability) << "\"";
    out << ">";
    if (!a.declaring_class.empty()) out << xml_escape(a.declaring_class) << ".";
    out << xml_escape(a.attr_type) << " = " << xml_escape(a.value) << "</Attribute>\n";
}

}  // namespace

std::string emit_instance_model(const InstanceModel& model) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"US-ASCII\" standalone=\"yes\"?>\n";
    out << "<InstanceModel>\n";
    out << "  <TranscriptHeader>\n";
    out << "    <TextSource value=\"" << xml_escape(model.text_source) << "\"/>\n";
    if (!model.document_file.empty())
        out << "    <DocumentFile name=\"" << xml_escape(model.document_file) << "\"/>\n";
    out << "  </TranscriptHeader>\n";
    out << "  <ConceptualModel>\n";
    out << "    <GlobalAssumptions>\n";
    for (const auto& [name, value] : model.global_assumptions)
        out << "      <" << name << " value=\"" << xml_escape(value) << "\"/>\n";
    out << "    </GlobalAssumptions>\n";
    for (const auto& ctx : model.contexts) {
        out << "    <LocalContext contextId=\"" << ctx.context_id << "\">\n";
        out << "      <MoodAndTense>" << xml_escape(ctx.mood_and_tense) << "</MoodAndTense>\n";
        out << "      <StructuralParent name=\"" << xml_escape(ctx.parent.class_name) << "\">\n";
        out << "        <Timeline name=\"" << xml_escape(ctx.parent.timeline_name) << "\"/>\n";
        for (const auto& [ordinal, tp] : ctx.parent.timeline) {
            out << "        <TimelineTimePoint value=\"" << xml_escape(tp.label) << "\">\n";
            out << "          <InstanceStructure>\n";
            for (const auto& inst : tp.instances) {
                out << "            <Component class=\"" << xml_escape(inst.class_name)
                    << "\" instance=\"" << xml_escape(inst.id) << "\" content=\""
                    << xml_escape(inst.content) << "\"";
                if (inst.attributes.empty()) {
                    out << "/>\n";
                    continue;
                }
                out << ">\n";
                out << "              <Attributes>\n";
                for (const auto& a : inst.attributes) emit_attribute(out, a);
                out << "              </Attributes>\n";
                out << "            </Component>\n";
            }
            out << "          </InstanceStructure>\n";
            out << "        </TimelineTimePoint>\n";
        }
        out << "      </StructuralParent>\n";
        out << "    </LocalContext>\n";
    }
    out << "  </ConceptualModel>\n";
    out << "</InstanceModel>\n";
    return out.str();
}

namespace {

// "Declaring.Attr = Value" or "Attr = Value" -> parts
bool split_assertion(const std::string& text, std::string& declaring, std::string& attr,
                     std::string& value) {
    auto eq = text.find(" = ");
    if (eq == std::string::npos) return false;
    std::string lhs = text.substr(0, eq);
    value = text.substr(eq + 3);
    auto dot = lhs.rfind('.');
    if (dot == std::string::npos) {
        declaring.clear();
        attr = lhs;
    } else {
        declaring = lhs.substr(0, dot);
        attr = lhs.substr(dot + 1);
    }
    return !attr.empty() && !value.empty();
}

// Resolves + membership-checks one assertion against the knowledge base.
bool check_assertion(const Infopedia& info, const Instance& inst, const AttributeValue& a,
                     std::string& err) {
    std::string key = a.declaring_class.empty() ? a.attr_type
                                                : a.declaring_class + "." + a.attr_type;
    const AttributeTypeDef* at = info.find_attribute_type(key);
    if (!at) at = info.resolve_attribute_type(inst.class_name, a.attr_type);
    if (!at) {
        err = "unknown attribute type '" + key + "' on instance " + inst.id;
        return false;
    }
    if (at->identity) return true;
    const ValueSetDef* values = info.effective_values(*at);
    if (values && !a.value.empty() && a.value != "nil" &&
        !values->contains(Value::text(a.value))) {
        err = "value '" + a.value + "' is not a member of the value set of attribute type " +
              at->qualified;
        return false;
    }
    return true;
}

}  // namespace

std::optional<InstanceModel> parse_instance_model(const std::string& xml, const Infopedia* info,
                                                  std::string& err) {
    auto root = xml_parse(xml, err);
    if (!root) return std::nullopt;
    if (root->name != "InstanceModel") {
        err = "root element is <" + root->name + ">, expected <InstanceModel>";
        return std::nullopt;
    }
    InstanceModel model;
    if (const XmlNode* header = root->child("TranscriptHeader")) {
        if (const XmlNode* src = header->child("TextSource")) model.text_source = src->attr("value");
        if (const XmlNode* doc = header->child("DocumentFile")) model.document_file = doc->attr("name");
    }
    const XmlNode* conceptual = root->child("ConceptualModel");
    if (!conceptual) {
        err = "missing <ConceptualModel>";
        return std::nullopt;
    }
    if (const XmlNode* ga = conceptual->child("GlobalAssumptions")) {
        for (const auto& a : ga->children)
            model.global_assumptions.emplace_back(a.name, a.attr("value"));
    }
    for (const XmlNode* lc : conceptual->children_named("LocalContext")) {
        LocalContext ctx;
        std::string idText = lc->attr("contextId");
        if (!idText.empty()) ctx.context_id = std::stoi(idText);
        if (const XmlNode* mt = lc->child("MoodAndTense")) ctx.mood_and_tense = mt->text;
        const XmlNode* sp = lc->child("StructuralParent");
        if (!sp) {
            err = "local context " + std::to_string(ctx.context_id) + " has no <StructuralParent>";
            return std::nullopt;
        }
        ctx.parent.class_name = sp->attr("name");
        if (const XmlNode* tl = sp->child("Timeline")) ctx.parent.timeline_name = tl->attr("name");
        if (info) {
            if (auto timeline = info->timeline_of(ctx.parent.class_name); timeline && timeline->time_points) {
                ctx.parent.time_labels = timeline->time_points->members;
            }
        }
        int fallback_ordinal = 0;
        for (const XmlNode* tpn : sp->children_named("TimelineTimePoint")) {
            TimePoint tp;
            tp.label = tpn->attr("value");
            int ordinal = -1;
            for (std::size_t i = 0; i < ctx.parent.time_labels.size(); ++i)
                if (ctx.parent.time_labels[i] == tp.label) ordinal = static_cast<int>(i);
            if (ordinal < 0) ordinal = fallback_ordinal;
            fallback_ordinal = ordinal + 1;
            if (const XmlNode* is = tpn->child("InstanceStructure")) {
                for (const XmlNode* comp : is->children_named("Component")) {
                    Instance inst;
                    inst.class_name = comp->attr("class");
                    inst.id = comp->attr("instance");
                    inst.content = comp->attr("content");
                    if (info && !info->find_class(inst.class_name)) {
                        err = "unknown class '" + inst.class_name + "' for instance " + inst.id;
                        return std::nullopt;
                    }
                    if (const XmlNode* attrs = comp->child("Attributes")) {
                        for (const XmlNode* an : attrs->children_named("Attribute")) {
                            AttributeValue a;
                            if (!split_assertion(an->text, a.declaring_class, a.attr_type, a.value)) {
                                err = "malformed attribute assertion '" + an->text + "' on instance " +
                                      inst.id;
                                return std::nullopt;
                            }
                            if (an->attr("negated") == "true") a.negated = true;
                            std::string p = an->attr("probability");
                            if (!p.empty()) {
                                a.probability = std::stod(p);
                                a.has_probability = true;
                            }
                            if (info && !check_assertion(*info, inst, a, err)) return std::nullopt;
                            inst.attributes.push_back(std::move(a));
                        }
                    }
                    tp.instances.push_back(std::move(inst));
                }
            }
            ctx.parent.timeline[ordinal] = std::move(tp);
        }
        model.contexts.push_back(std::move(ctx));
    }
    return model;
}

std::optional<Scenario> parse_scenario(const std::string& xml, const Infopedia* info,
                                       std::string& err) {
    auto root = xml_parse(xml, err);
    if (!root) return std::nullopt;
    if (root->name != "Scenario") {
        err = "root element is <" + root->name + ">, expected <Scenario>";
        return std::nullopt;
    }
    Scenario scenario;
    if (const XmlNode* sources = root->child("Sources")) {
        scenario.text_source = sources->attr("textSource");
        scenario.document_file = sources->attr("documentFile");
    }
    for (const XmlNode* seedNode : root->children_named("Seed")) {
        ScenarioSeed seed;
        seed.class_name = seedNode->attr("class");
        seed.id = seedNode->attr("id");
        seed.role = seedNode->attr("role");
        seed.multiple = seedNode->attr("multiple") == "true";
        if (seed.class_name.empty() || seed.id.empty()) {
            err = "seed needs class and id attributes";
            return std::nullopt;
        }
        if (seed.role != "actor" && seed.role != "actee" && seed.role != "extra") {
            err = "seed " + seed.id + " has role '" + seed.role +
                  "', expected actor, actee, or extra";
            return std::nullopt;
        }
        const ObjectFrameClassDef* cls = nullptr;
        if (info) {
            cls = info->find_class(seed.class_name);
            if (!cls) {
                err = "unknown class '" + seed.class_name + "' in seed " + seed.id;
                return std::nullopt;
            }
        }
        for (const XmlNode* an : seedNode->children_named("Attribute")) {
            std::string type = an->attr("type");
            std::string value = an->attr("value");
            if (type.empty()) {
                err = "seed " + seed.id + " has an attribute without a type";
                return std::nullopt;
            }
            if (info) {
                const AttributeTypeDef* at = info->resolve_attribute_type(seed.class_name, type);
                if (!at) {
                    err = "unknown attribute type '" + type + "' in seed " + seed.id;
                    return std::nullopt;
                }
                const ValueSetDef* values = info->effective_values(*at);
                if (values && !values->contains(Value::text(value))) {
                    err = "value '" + value + "' is not a member of the value set of attribute type " +
                          at->qualified;
                    return std::nullopt;
                }
            }
            seed.attributes.emplace_back(std::move(type), std::move(value));
        }
        scenario.seeds.push_back(std::move(seed));
    }
    const XmlNode* query = root->child("Query");
    if (!query || query->attr("verb").empty()) {
        err = "scenario needs a <Query verb=\"...\"/>";
        return std::nullopt;
    }
    scenario.query_verb = query->attr("verb");
    scenario.query_prior = query->attr("prior");
    scenario.query_actor_class = query->attr("actorClass");
    scenario.query_actee_class = query->attr("acteeClass");
    if (scenario.seeds.empty()) {
        err = "scenario has no seeds";
        return std::nullopt;
    }
    return scenario;
}

}  // namespace ross
