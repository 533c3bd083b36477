#include "ross/compiler.h"

#include "ross/parser.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace ross {

namespace {

const Attr* attr_of(const Node& el, const std::string& key) {
    for (const auto& a : el.attrs)
        if (a.key == key) return &a;
    return nullptr;
}

// Text form of an element attribute: identifier or quoted string.
std::string attr_text(const Node& el, const std::string& key) {
    const Attr* a = attr_of(el, key);
    if (!a) return {};
    switch (a->kind) {
    case Attr::Kind::Ident:
    case Attr::Kind::Str: return a->text;
    case Attr::Kind::Num: return a->num.to_string();
    case Attr::Kind::Nil: return "nil";
    case Attr::Kind::Expr: return expr_to_string(a->expr);
    case Attr::Kind::Set: return {};
    }
    return {};
}

bool attr_true(const Node& el, const std::string& key = "val") {
    return attr_text(el, key) == "true";
}

class Builder {
public:
    Builder(Infopedia& info, Diagnostics& diags) : info_(info), diags_(diags) {}

    void add_document(const Document& doc) {
        file_ = doc.file;
        for (const auto& stmt : doc.statements) {
            if (stmt.kind == Node::Kind::Include) continue;   // handled by the driver
            add_statement(stmt);
        }
    }

    // Reference resolution and the lexicon run once, after every file.
    void finalize() {
        validate();
        build_lexicon();
    }

private:
    Infopedia& info_;
    Diagnostics& diags_;
    std::string file_;

    void error(const Node& at, const std::string& kind, const std::string& msg) {
        diags_.error(file_, at.line, at.column, kind, msg);
    }

    double const_number(const Attr* a, double fallback, const Node& at) {
        if (!a) return fallback;
        if (a->kind == Attr::Kind::Num)
            return a->num.is_float() ? a->num.as_float() : static_cast<double>(a->num.as_int());
        if (a->kind == Attr::Kind::Expr) {
            std::string err;
            BoundValue v = eval_expr(a->expr, {}, err);
            if (!err.empty()) {
                error(at, "value", "expected a constant: " + err);
                return fallback;
            }
            if (v.value.is_float()) return v.value.as_float();
            if (v.value.is_int()) return static_cast<double>(v.value.as_int());
        }
        error(at, "value", "expected a numeric value for '" + a->key + "'");
        return fallback;
    }

    // ----- dispatch -------------------------------------------------------

    void add_statement(const Node& stmt) {
        if (stmt.kind == Node::Kind::Scalar) return add_scalar(stmt);
        if (stmt.kind != Node::Kind::Section) {
            error(stmt, "compile", "unexpected top-level statement");
            return;
        }
        const std::string& h = stmt.head;
        if (h == "ValueSet") add_value_set(stmt);
        else if (h == "Mapping") add_mapping(stmt);
        else if (h == "Transform") add_transform(stmt);
        else if (h == "AttributeType") add_attribute_type(stmt, "", false, AttrLocus::Plain, true);
        else if (h == "RelationshipType") add_relationship_type(stmt);
        else if (h == "DimensionSystem") add_dimension_system(stmt, "", true);
        else if (h == "SpecificationSystem") add_specification_system(stmt);
        else if (h == "ObjectFrameClass") add_object_frame_class(stmt, "", true);
        else if (h == "TemplateObjectClass") add_template(stmt);
        else if (h == "PopulatedObjectClass") add_populated_class(stmt);
        else if (h == "BehaviorClass") add_behavior_class(stmt);
        else error(stmt, "compile", "unknown declaration '" + h + "'");
    }

    // ----- scalars --------------------------------------------------------

    void add_scalar(const Node& stmt) {
        ScalarDef def;
        def.name = stmt.name;
        def.kind = stmt.head;
        def.value = stmt.scalar_value;
        def.decl_index = static_cast<int>(info_.scalars.size());
        if (!info_.scalar_ix.emplace(def.name, def.decl_index).second) {
            error(stmt, "duplicate", "duplicate declaration '" + def.name + "'");
            return;
        }
        info_.scalars.push_back(std::move(def));
        if (stmt.head == "Integer") ++info_.counts.integers;
        else if (stmt.head == "FloatingPoint") ++info_.counts.floats;
        else ++info_.counts.strings;
    }

    // ----- value sets -----------------------------------------------------

    std::vector<std::string> member_dictionary_words(const std::shared_ptr<Node>& dict) {
        if (!dict) return {};
        return words_from(*dict).words;
    }

    void fill_from_set(ValueSetDef& vs, const SetDepiction& set, const Node& at) {
        for (const auto& m : set.members) {
            if (m.value.is_text() && m.quoted) {
                vs.add_member(m.value.as_text(), member_dictionary_words(m.dictionary));
            } else if (m.value.is_int()) {
                vs.lo = m.value.as_int();   // lower bound of a numeric depiction
            } else {
                error(at, "value-set", "unsupported set member in '" + vs.name + "'");
            }
        }
        if (set.has_range) {
            vs.has_range = true;
            if (set.range_hi.is_int()) {
                vs.hi = set.range_hi.as_int();
            } else if (set.range_hi.is_text() && !set.range_hi_quoted) {
                const ScalarDef* s = info_.find_scalar(set.range_hi.as_text());
                if (s && s->value.is_int()) {
                    vs.hi = s->value.as_int();
                } else {
                    error(at, "resolve",
                          "range bound '" + set.range_hi.as_text() + "' is not an Integer declaration");
                }
            } else {
                error(at, "value-set", "unsupported range bound in '" + vs.name + "'");
            }
        }
    }

    std::shared_ptr<ValueSetDef> build_value_set_body(const Node& sec, std::string set_name) {
        auto vs = std::make_shared<ValueSetDef>();
        vs->name = std::move(set_name);
        if (!sec.args.empty()) {
            const std::string& a = sec.args.front();
            if (a == "IntegerConstant" || a == "FloatConstant" || a == "StringConstant") {
                vs->integer_constants = true;
            } else if (const ValueSetDef* base = info_.find_value_set(a)) {
                std::string keep = vs->name;
                *vs = *base;              // a rename copies the referenced set
                vs->name = std::move(keep);
            } else {
                error(sec, "resolve", "unknown value set '" + a + "'");
            }
            return vs;
        }
        for (const auto& c : sec.children) {
            if (c.kind == Node::Kind::Element) {
                if (c.head == "BaseValueSet") vs->base_unit = attr_text(c, "ref");
                else if (c.head == "SuperTypeUsage") {
                    vs->super_type_usage = attr_text(c, "val");
                    if (vs->super_type_usage == "IntegerConstant") vs->integer_constants = true;
                } else if (c.head == "OrderedCollection") vs->ordered = attr_true(c);
            } else if (c.kind == Node::Kind::Set) {
                fill_from_set(*vs, c.set, c);
            }
        }
        return vs;
    }

    void add_value_set(const Node& stmt) {
        auto vs = build_value_set_body(stmt, stmt.name);
        int index = static_cast<int>(info_.value_sets.size());
        if (!info_.value_set_ix.emplace(vs->name, index).second) {
            error(stmt, "duplicate", "duplicate value set '" + vs->name + "'");
            return;
        }
        info_.value_sets.push_back(std::move(vs));
        ++info_.counts.value_sets;
    }

    // ----- mappings / transforms -----------------------------------------

    void add_mapping(const Node& stmt) {
        MappingDef def;
        def.name = stmt.name;
        def.decl_index = static_cast<int>(info_.mappings.size());
        for (const auto& c : stmt.children) {
            if (c.kind != Node::Kind::Element) continue;
            if (c.head == "Source") def.source_set = attr_text(c, "ref");
            else if (c.head == "Dest") def.dest_set = attr_text(c, "ref");
            else if (c.head == "Function") {
                if (const Attr* a = attr_of(c, "expr")) def.function = a->expr;
            }
        }
        if (!def.function) error(stmt, "compile", "mapping '" + def.name + "' has no Function");
        if (!info_.mapping_ix.emplace(def.name, def.decl_index).second) {
            error(stmt, "duplicate", "duplicate mapping '" + def.name + "'");
            return;
        }
        info_.mappings.push_back(std::move(def));
        ++info_.counts.mappings;
    }

    void add_transform(const Node& stmt) {
        TransformDef def;
        def.name = stmt.name;
        def.decl_index = static_cast<int>(info_.transforms.size());
        for (const auto& c : stmt.children) {
            if (c.kind == Node::Kind::Element) {
                if (c.head == "Source") def.source_ref = attr_text(c, "ref");
                else if (c.head == "Dest") def.dest_ref = attr_text(c, "ref");
            } else if (c.kind == Node::Kind::Routine) {
                def.routine = c.routine;
            }
        }
        if (!def.routine) error(stmt, "compile", "transform '" + def.name + "' has no routine");
        if (!info_.transform_ix.emplace(def.name, def.decl_index).second) {
            error(stmt, "duplicate", "duplicate transform '" + def.name + "'");
            return;
        }
        info_.transforms.push_back(std::move(def));
        ++info_.counts.transforms;
    }

    // ----- attribute types ------------------------------------------------

    std::string normalize_super_type(const std::string& v) {
        if (v.find("Location") != std::string::npos) return "Locational";
        if (v.find("Qual") != std::string::npos) return "Qualitative";
        return v;
    }

    std::string add_attribute_type(const Node& sec, const std::string& owner,
                                   bool owner_is_class, AttrLocus locus, bool top) {
        AttributeTypeDef def;
        def.name = sec.name;
        def.owner = owner;
        def.qualified = owner.empty() ? def.name : owner + "." + def.name;
        def.owner_is_class = owner_is_class;
        def.locus = locus;
        for (const auto& c : sec.children) {
            if (c.kind == Node::Kind::Element) {
                if (c.head == "Probability") {
                    def.probability = const_number(attr_of(c, "expr"), 1.0, c);
                    def.has_probability = true;
                } else if (c.head == "SuperType") {
                    def.super_type = normalize_super_type(attr_text(c, "val"));
                } else if (c.head == "StateAttributeType") def.state = attr_true(c);
                else if (c.head == "OptionalCausalFeature") def.optional_causal_feature = attr_true(c);
                else if (c.head == "ValueSetName") def.value_set_ref = attr_text(c, "ref");
            } else if (c.kind == Node::Kind::Section && c.head.empty() && !c.name.empty()) {
                // inline "Values" / "ValueSet" body
                def.values = build_value_set_body(c, def.qualified);
            }
        }
        def.decl_index = static_cast<int>(info_.attribute_types.size());
        if (!info_.attribute_type_ix.emplace(def.qualified, def.decl_index).second) {
            error(sec, "duplicate", "duplicate attribute type '" + def.qualified + "'");
            return def.qualified;
        }
        std::string qualified = def.qualified;
        info_.attribute_types.push_back(std::move(def));
        if (top) ++info_.counts.attribute_types;
        return qualified;
    }

    void add_relationship_type(const Node& stmt) {
        RelationshipTypeDef def;
        def.name = stmt.name;
        def.decl_index = static_cast<int>(info_.relationship_types.size());
        if (!info_.relationship_type_ix.emplace(def.name, def.decl_index).second) {
            error(stmt, "duplicate", "duplicate relationship type '" + def.name + "'");
            return;
        }
        info_.relationship_types.push_back(std::move(def));
        ++info_.counts.relationship_types;
    }

    // ----- dimension systems -----------------------------------------------

    std::string add_dimension_system(const Node& sec, const std::string& owner, bool top) {
        DimensionSystemDef def;
        def.name = sec.name;
        def.owner = owner;
        def.qualified = owner.empty() ? def.name : owner + "." + def.name;
        if (!sec.args.empty()) {
            def.rename_of = sec.args.front();
        }
        for (const auto& c : sec.children) {
            if (c.kind == Node::Kind::Element && c.head == "RoleTrait") {
                def.role_trait = attr_text(c, "val");
            } else if (c.kind == Node::Kind::Section && c.head == "Merge") {
                def.merge_of = c.args;
            } else if (c.kind == Node::Kind::Section && c.head == "LocationAttributeTypes") {
                for (const auto& axis : c.children) {
                    if (axis.kind != Node::Kind::Section) continue;
                    bool temporal = axis.head == "TemporalAttributeTypes";
                    if (!temporal && axis.head != "SpatialAttributeTypes") continue;
                    auto& list = temporal ? def.temporal : def.spatial;
                    for (const auto& at : axis.children) {
                        if (at.kind == Node::Kind::Section && at.head.empty()) {
                            list.push_back(add_attribute_type(
                                at, def.qualified, false,
                                temporal ? AttrLocus::Temporal : AttrLocus::Spatial, false));
                        } else if (at.kind == Node::Kind::Ref) {
                            list.push_back(at.head);
                        }
                    }
                }
            }
        }
        def.decl_index = static_cast<int>(info_.dimension_systems.size());
        if (!info_.dimension_system_ix.emplace(def.qualified, def.decl_index).second) {
            error(sec, "duplicate", "duplicate dimension system '" + def.qualified + "'");
            return def.qualified;
        }
        std::string qualified = def.qualified;
        info_.dimension_systems.push_back(std::move(def));
        if (top) ++info_.counts.dimension_systems;
        return qualified;
    }

    void add_specification_system(const Node& stmt) {
        SpecificationSystemDef def;
        def.name = stmt.name;
        def.decl_index = static_cast<int>(info_.specification_systems.size());
        for (const auto& c : stmt.children) {
            if (c.kind != Node::Kind::Section) continue;
            if (c.head == "DimensionSystem") {
                def.dimension_system_alias = c.name;
                if (!c.args.empty()) def.dimension_system_ref = c.args.front();
            } else if (c.head == "InnerContent") {
                if (const Node* q = c.find("QualityAttributeTypes")) {
                    for (const auto& e : q->children) {
                        if (e.kind == Node::Kind::Section && !e.args.empty())
                            def.essential_value_type = e.args.front();
                    }
                }
            }
        }
        if (!info_.specification_system_ix.emplace(def.name, def.decl_index).second) {
            error(stmt, "duplicate", "duplicate specification system '" + def.name + "'");
            return;
        }
        info_.specification_systems.push_back(std::move(def));
        ++info_.counts.specification_systems;
    }

    // ----- dictionaries -----------------------------------------------------

    WordList words_from(const Node& sec) {
        WordList wl;
        for (const auto& c : sec.children) {
            if (c.kind == Node::Kind::Element &&
                (c.head == "DictionaryWordsIsNoun" || c.head == "DictionaryWordIsNoun")) {
                wl.is_noun = attr_true(c);
            } else if (c.kind == Node::Kind::Section && c.head == "English") {
                for (const auto& body : c.children) {
                    if (body.kind != Node::Kind::Set) continue;
                    for (const auto& m : body.set.members) {
                        if (m.value.is_text()) wl.words.push_back(m.value.as_text());
                        else wl.words.push_back(m.value.to_string());
                    }
                }
            }
        }
        return wl;   // Dictionary ( nil ) has no English section: empty list
    }

    std::vector<std::string> names_from_set(const Node& sec) {
        std::vector<std::string> names;
        for (const auto& c : sec.children) {
            if (c.kind != Node::Kind::Set) continue;
            for (const auto& m : c.set.members)
                if (m.value.is_text()) names.push_back(m.value.as_text());
        }
        return names;
    }

    // ----- object frame classes ---------------------------------------------

    RuleNodeAttr rule_attr_from(const Node& el) {
        RuleNodeAttr a;
        a.ref = attr_text(el, "ref");
        if (const Attr* v = attr_of(el, "var")) {
            a.form = RuleNodeAttr::Form::Var;
            a.var = v->text;
        } else if (const Attr* e = attr_of(el, "expr")) {
            a.form = RuleNodeAttr::Form::Expr;
            a.expr = e->expr;
        } else {
            a.form = RuleNodeAttr::Form::Val;
            a.value = attr_text(el, "val");
        }
        return a;
    }

    std::string add_object_frame_class(const Node& sec, const std::string& owner, bool top) {
        ObjectFrameClassDef def;
        def.name = sec.name;
        def.owner = owner;
        def.qualified = owner.empty() ? def.name : owner + "." + def.name;
        for (const auto& c : sec.children) {
            if (c.kind == Node::Kind::Element) {
                if (c.head == "SealedClass") def.sealed = attr_true(c);
                else if (c.head == "StructureTrait") {
                    def.structure_trait = attr_text(c, "val");
                    def.mass_substance = def.structure_trait == "MassSubstance";
                } else if (c.head == "StructuralParentClass") def.structural_parent_class = attr_true(c);
                else if (c.head == "ProbabilityInStructuralParent")
                    def.probability_in_structural_parent = const_number(attr_of(c, "expr"), 1.0, c);
                else if (c.head == "Multiple") def.multiple = attr_true(c);
                else if (c.head == "Cardinality") def.cardinality = attr_text(c, "val");
                continue;
            }
            if (c.kind == Node::Kind::Ref) continue;   // stray nil
            if (c.kind != Node::Kind::Section) continue;
            const std::string& h = c.head;
            if (h == "DictionaryPriorWord") def.prior_words = words_from(c);
            else if (h == "Dictionary") def.words = words_from(c);
            else if (h == "HigherClasses") def.higher_classes = names_from_set(c);
            else if (h == "StructuralParentClassesBase")
                def.structural_parent_classes_base = names_from_set(c);
            else if (h == "RelationshipToParent") {
                for (const auto& part : c.children) {
                    if (part.kind != Node::Kind::Section) continue;
                    for (const auto& ls : part.children) {
                        if (ls.kind != Node::Kind::Section) continue;
                        LocationPlaceholder ph;
                        ph.section = ls.head;
                        for (const auto& e : ls.children) {
                            if (e.kind != Node::Kind::Element) continue;
                            if (e.head == "DimensionSystem") ph.dimension_system = attr_text(e, "ref");
                            else if (e.head == "Attribute")
                                ph.attrs.emplace_back(attr_text(e, "ref"), attr_text(e, "val"));
                        }
                        def.relationship_to_parent.push_back(std::move(ph));
                    }
                }
            } else if (h == "AttributeTypes") {
                for (const auto& at : c.children)
                    if (at.kind == Node::Kind::Section && at.head == "AttributeType")
                        def.attribute_types.push_back(
                            add_attribute_type(at, def.qualified, true, AttrLocus::Plain, false));
            } else if (h == "DimensionSystems") {
                for (const auto& ds : c.children)
                    if (ds.kind == Node::Kind::Section && ds.head == "DimensionSystem")
                        def.dimension_systems.push_back(add_dimension_system(ds, def.qualified, false));
            } else if (h == "Attributes" || h == "AttributesSection") {
                for (const auto& at : c.children) {
                    if (at.kind != Node::Kind::Section || at.head != "Attribute") continue;
                    ClassAttribute ca;
                    ca.name = at.name;
                    for (const auto& e : at.children) {
                        if (e.kind != Node::Kind::Element) continue;
                        if (e.head == "Probability") {
                            ca.probability = const_number(attr_of(e, "expr"), 1.0, e);
                            ca.has_probability = true;
                        } else if (e.head == "Attribute") {
                            ca.attr_type = attr_text(e, "ref");
                            if (const Attr* v = attr_of(e, "val")) {
                                ca.value = v->text;
                                ca.has_value = true;
                            }
                            if (const Attr* r = attr_of(e, "range")) ca.range = r->set;
                        }
                    }
                    def.attributes.push_back(std::move(ca));
                }
            } else if (h == "Structure") {
                for (const auto& nested : c.children)
                    if (nested.kind == Node::Kind::Section && nested.head == "ObjectFrameClass")
                        def.structure.push_back(add_object_frame_class(nested, def.name, false));
            } else if (h == "BehaviorsPotentialSection" || h == "BehaviorsActualSection") {
                for (const auto& d : c.children) {
                    if (d.kind != Node::Kind::Section || d.head != "BehaviorClassDesignator") continue;
                    BehaviorDesignator bd;
                    bd.actual = h == "BehaviorsActualSection";
                    for (const auto& e : d.children) {
                        if (e.kind != Node::Kind::Element) continue;
                        if (e.head == "BehaviorClassName") bd.behavior_class = attr_text(e, "val");
                        else if (e.head == "Probability")
                            bd.probability = const_number(attr_of(e, "expr"), 1.0, e);
                    }
                    def.behaviors.push_back(std::move(bd));
                }
            } else {
                error(c, "compile", "unknown section '" + h + "' in class '" + def.name + "'");
            }
        }
        def.decl_index = static_cast<int>(info_.classes.size());
        if (!info_.class_ix.emplace(def.qualified, def.decl_index).second) {
            error(sec, "duplicate", "duplicate class '" + def.qualified + "'");
            return def.qualified;
        }
        std::string qualified = def.qualified;
        info_.classes.push_back(std::move(def));
        if (top) ++info_.counts.object_frame_classes;
        return qualified;
    }

    // ----- templates / populated objects ------------------------------------

    void add_template(const Node& stmt) {
        TemplateDef def;
        def.name = stmt.name;
        def.decl_index = static_cast<int>(info_.templates.size());
        for (const auto& c : stmt.children) {
            if (c.kind != Node::Kind::Element) continue;
            if (c.head == "StructuralParentClass") def.structural_parent_class = attr_text(c, "ref");
            else if (c.head == "ObjectFrameClass") def.object_frame_class = attr_text(c, "ref");
            else if (c.head == "SpecificationSystem") def.specification_system = attr_text(c, "ref");
            else if (c.head == "ShapeTemplate") def.shape_template = attr_true(c);
        }
        if (!info_.template_ix.emplace(def.name, def.decl_index).second) {
            error(stmt, "duplicate", "duplicate template class '" + def.name + "'");
            return;
        }
        info_.templates.push_back(std::move(def));
        ++info_.counts.template_classes;
    }

    void add_populated_class(const Node& stmt) {
        PopulatedObjectClassDef def;
        def.name = stmt.name;
        def.decl_index = static_cast<int>(info_.populated_classes.size());
        for (const auto& c : stmt.children) {
            if (c.kind != Node::Kind::Element) continue;
            if (c.head == "StructuralParentClass") def.structural_parent_class = attr_text(c, "ref");
            else if (c.head == "ObjectFrameClass") def.object_frame_class = attr_text(c, "ref");
            else if (c.head == "DimensionSystem") def.dimension_system = attr_text(c, "ref");
            else if (c.head == "Attribute") def.attrs.push_back(rule_attr_from(c));
        }
        if (!info_.populated_ix.emplace(def.name, def.decl_index).second) {
            error(stmt, "duplicate", "duplicate populated object class '" + def.name + "'");
            return;
        }
        info_.populated_classes.push_back(std::move(def));
        ++info_.counts.populated_object_classes;
    }

    // ----- behavior classes ---------------------------------------------------

    void parse_states(const Node& sec, std::vector<RuleNode>& nodes, std::vector<RuleRef>& refs) {
        int pos = 0;
        for (const auto& c : sec.children) {
            if (c.kind != Node::Kind::Section) continue;
            if (c.head == "PopulatedObjectClass") {
                RuleNode n;
                n.name = c.name;
                n.position = pos++;
                for (const auto& e : c.children) {
                    if (e.kind != Node::Kind::Element) continue;
                    if (e.head == "ObjectFrameClass") n.class_ref = attr_text(e, "ref");
                    else if (e.head == "BinderSourceFlag") n.binder_source = attr_true(e);
                    else if (e.head == "PassiveParticipant") n.passive = attr_true(e);
                    else if (e.head == "ExtraParticipant") n.extra = attr_true(e);
                    else if (e.head == "Multiple") n.multiple = attr_true(e);
                    else if (e.head == "Probability") {
                        n.probability = const_number(attr_of(e, "expr"), 1.0, e);
                        n.has_probability = true;
                    } else if (e.head == "DimensionSystem") n.dimension_system = attr_text(e, "ref");
                    else if (e.head == "Attribute") n.attrs.push_back(rule_attr_from(e));
                }
                nodes.push_back(std::move(n));
            } else if (c.head == "BehaviorClassReference") {
                RuleRef r;
                r.position = pos++;
                for (const auto& e : c.children) {
                    if (e.kind != Node::Kind::Element) continue;
                    if (e.head == "Probability") {
                        r.probability = const_number(attr_of(e, "expr"), 1.0, e);
                        r.has_probability = true;
                    } else if (e.head == "BehaviorClass") r.behavior_class = attr_text(e, "ref");
                    else if (e.head == "ParameterActor") {
                        r.param_actor_class = attr_text(e, "ref");
                        if (const Attr* x = attr_of(e, "expr")) r.param_actor_expr = x->expr;
                    } else if (e.head == "ParameterActee") {
                        r.param_actee_class = attr_text(e, "ref");
                        if (const Attr* x = attr_of(e, "expr")) r.param_actee_expr = x->expr;
                    }
                }
                refs.push_back(std::move(r));
            }
        }
    }

    void add_behavior_class(const Node& stmt) {
        BehaviorClassDef def;
        def.name = stmt.name;
        def.decl_index = static_cast<int>(info_.behavior_classes.size());
        for (const auto& c : stmt.children) {
            if (c.kind == Node::Kind::Element) {
                if (c.head == "CausalRule") def.causal_rule = attr_true(c);
                else if (c.head == "RuleDirection") def.rule_direction = attr_text(c, "type");
                else if (c.head == "BridgeObjectFrameClass") def.bridge_class = attr_text(c, "ref");
                else if (c.head == "Negation") def.negation = attr_true(c);
                continue;
            }
            if (c.kind != Node::Kind::Section) continue;
            if (c.head == "DictionaryPriorWord") def.prior_words = words_from(c);
            else if (c.head == "Dictionary") def.words = words_from(c);
            else if (c.head == "Modification") {
                for (const auto& m : c.children) {
                    if (m.kind != Node::Kind::Section) continue;
                    if (m.head == "DictionaryModifyingVerbs") def.modifying_verbs = words_from(m);
                    else if (m.head == "DictionaryAdverbs") def.adverbs = words_from(m);
                }
            } else if (c.head == "PriorStates") parse_states(c, def.prior_nodes, def.prior_refs);
            else if (c.head == "PostStates") parse_states(c, def.post_nodes, def.post_refs);
        }
        int index = static_cast<int>(info_.behavior_classes.size());
        info_.behavior_ix[def.name].push_back(index);
        info_.behavior_classes.push_back(std::move(def));
        ++info_.counts.behavior_classes;
    }

    // ----- validation ------------------------------------------------------

    void require_class(const std::string& name, const char* what, const std::string& where) {
        if (name.empty() || info_.find_class(name)) return;
        diags_.error(file_, 0, 0, "resolve",
                     std::string(what) + " '" + name + "' in '" + where + "' is not a known class");
    }

    void check_rule_attrs(const std::string& cls, const std::vector<RuleNodeAttr>& attrs,
                          const std::string& where) {
        for (const auto& a : attrs) {
            const AttributeTypeDef* at = info_.resolve_attribute_type(cls, a.ref);
            if (!at) {
                diags_.error(file_, 0, 0, "resolve",
                             "attribute type '" + a.ref + "' in '" + where + "' does not resolve");
                continue;
            }
            if (a.form == RuleNodeAttr::Form::Val && !at->identity) {
                const ValueSetDef* vs = info_.effective_values(*at);
                if (vs && !vs->contains(Value::text(a.value))) {
                    diags_.error(file_, 0, 0, "value",
                                 "'" + a.value + "' is not a member of " + at->qualified +
                                     " (in '" + where + "')");
                }
            }
        }
    }

    void validate() {
        auto cycle = info_.find_inheritance_cycle();
        if (!cycle.empty()) {
            std::string msg = "inheritance cycle:";
            for (const auto& c : cycle) msg += " " + c;
            diags_.error(file_, 0, 0, "inheritance", msg);
        }
        for (const auto& cls : info_.classes) {
            for (const auto& h : cls.higher_classes)
                require_class(h, "higher class", cls.qualified);
            for (const auto& s : cls.structural_parent_classes_base)
                require_class(s, "structural parent class", cls.qualified);
            for (const auto& b : cls.behaviors)
                if (info_.behavior_ix.find(b.behavior_class) == info_.behavior_ix.end())
                    diags_.error(file_, 0, 0, "resolve",
                                 "behavior class '" + b.behavior_class + "' in '" + cls.qualified +
                                     "' is not declared");
            for (const auto& ca : cls.attributes) {
                const AttributeTypeDef* at = info_.resolve_attribute_type(cls.qualified, ca.attr_type);
                if (!at) {
                    diags_.error(file_, 0, 0, "resolve",
                                 "attribute type '" + ca.attr_type + "' in '" + cls.qualified +
                                     "' does not resolve");
                } else if (ca.has_value && ca.value != "nil") {
                    const ValueSetDef* vs = info_.effective_values(*at);
                    if (vs && !vs->contains(Value::text(ca.value)))
                        diags_.error(file_, 0, 0, "value",
                                     "'" + ca.value + "' is not a member of " + at->qualified +
                                         " (in '" + cls.qualified + "')");
                }
            }
        }
        for (const auto& at : info_.attribute_types) {
            if (!at.value_set_ref.empty() && !info_.find_value_set(at.value_set_ref))
                diags_.error(file_, 0, 0, "resolve",
                             "value set '" + at.value_set_ref + "' referenced by " + at.qualified +
                                 " is not declared");
        }
        for (const auto& m : info_.mappings) {
            if (!info_.find_value_set(m.source_set))
                diags_.error(file_, 0, 0, "resolve",
                             "mapping '" + m.name + "' source set '" + m.source_set + "' is unknown");
            if (!info_.find_value_set(m.dest_set))
                diags_.error(file_, 0, 0, "resolve",
                             "mapping '" + m.name + "' dest set '" + m.dest_set + "' is unknown");
        }
        for (const auto& ds : info_.dimension_systems) {
            if (!ds.rename_of.empty() && !info_.find_dimension_system(ds.rename_of))
                diags_.error(file_, 0, 0, "resolve",
                             "dimension system '" + ds.qualified + "' renames unknown '" +
                                 ds.rename_of + "'");
            for (const auto& part : ds.merge_of)
                if (!info_.find_dimension_system(part))
                    diags_.error(file_, 0, 0, "resolve",
                                 "dimension system '" + ds.qualified + "' merges unknown '" + part + "'");
            for (const auto* axis : {&ds.spatial, &ds.temporal})
                for (const auto& name : *axis)
                    if (!info_.find_attribute_type(name) && !info_.resolve_attribute_type("", name))
                        diags_.error(file_, 0, 0, "resolve",
                                     "attribute type '" + name + "' in dimension system '" +
                                         ds.qualified + "' does not resolve");
        }
        for (const auto& ss : info_.specification_systems) {
            if (!ss.dimension_system_ref.empty() && !info_.find_dimension_system(ss.dimension_system_ref))
                diags_.error(file_, 0, 0, "resolve",
                             "specification system '" + ss.name + "' refers to unknown dimension system '" +
                                 ss.dimension_system_ref + "'");
            if (!ss.essential_value_type.empty() &&
                !info_.resolve_attribute_type("", ss.essential_value_type))
                diags_.error(file_, 0, 0, "resolve",
                             "specification system '" + ss.name + "' essential value type '" +
                                 ss.essential_value_type + "' does not resolve");
        }
        for (const auto& bc : info_.behavior_classes) {
            require_class(bc.bridge_class, "bridge class", bc.name);
            for (const auto* nodes : {&bc.prior_nodes, &bc.post_nodes}) {
                for (const auto& n : *nodes) {
                    require_class(n.class_ref, "object frame class", bc.name + "." + n.name);
                    check_rule_attrs(n.class_ref, n.attrs, bc.name + "." + n.name);
                }
            }
            for (const auto* refs : {&bc.prior_refs, &bc.post_refs}) {
                for (const auto& r : *refs) {
                    if (info_.behavior_ix.find(r.behavior_class) == info_.behavior_ix.end())
                        diags_.error(file_, 0, 0, "resolve",
                                     "behavior class reference '" + r.behavior_class + "' in '" +
                                         bc.name + "' is not declared");
                    require_class(r.param_actor_class, "parameter actor class", bc.name);
                    require_class(r.param_actee_class, "parameter actee class", bc.name);
                }
            }
        }
        for (const auto& poc : info_.populated_classes) {
            require_class(poc.structural_parent_class, "structural parent class", poc.name);
            require_class(poc.object_frame_class, "object frame class", poc.name);
            check_rule_attrs(poc.object_frame_class, poc.attrs, poc.name);
        }
        for (const auto& t : info_.templates) {
            require_class(t.structural_parent_class, "structural parent class", t.name);
            require_class(t.object_frame_class, "object frame class", t.name);
            if (!t.specification_system.empty() &&
                !info_.find_specification_system(t.specification_system))
                diags_.error(file_, 0, 0, "resolve",
                             "template '" + t.name + "' refers to unknown specification system '" +
                                 t.specification_system + "'");
        }
    }

    // ----- lexicon -----------------------------------------------------------

    static std::string trimmed(const std::string& w) {
        auto b = w.find_first_not_of(' ');
        if (b == std::string::npos) return {};
        auto e = w.find_last_not_of(' ');
        return w.substr(b, e - b + 1);
    }

    void index_word(const std::string& raw, LexiconEntry e) {
        std::string w = trimmed(raw);
        if (w.empty() || w == "nil") return;
        e.word = w;
        info_.lexicon[w].push_back(std::move(e));
    }

    void index_words(const WordList& wl, LexiconEntry::Kind kind, const std::string& owner,
                     bool verb_forms) {
        for (std::size_t i = 0; i < wl.words.size(); ++i) {
            LexiconEntry e;
            e.kind = kind;
            e.owner = owner;
            e.index = static_cast<int>(i);
            e.detail = verb_forms ? verb_form_name(e.index) : (i % 2 == 0 ? "singular" : "plural");
            index_word(wl.words[i], std::move(e));
        }
    }

    void build_lexicon() {
        for (const auto& cls : info_.classes) {
            index_words(cls.words, LexiconEntry::Kind::Noun, cls.qualified, false);
            index_words(cls.prior_words, LexiconEntry::Kind::PriorWord, cls.qualified, false);
        }
        for (const auto& bc : info_.behavior_classes) {
            index_words(bc.words, LexiconEntry::Kind::Verb, bc.name, true);
            index_words(bc.prior_words, LexiconEntry::Kind::PriorWord, bc.name, true);
            index_words(bc.modifying_verbs, LexiconEntry::Kind::ModifyingVerb, bc.name, true);
        }
        for (const auto& at : info_.attribute_types) {
            if (!at.values) continue;
            index_value_words(*at.values, at.qualified);
        }
        for (const auto& vs : info_.value_sets) {
            index_value_words(*vs, vs->name);
        }
    }

    void index_value_words(const ValueSetDef& vs, const std::string& owner) {
        for (std::size_t i = 0; i < vs.members.size(); ++i) {
            for (const auto& w : vs.member_words[i]) {
                LexiconEntry e;
                e.kind = LexiconEntry::Kind::ValueWord;
                e.owner = owner;
                e.detail = vs.members[i];
                e.index = static_cast<int>(i);
                index_word(w, std::move(e));
            }
        }
    }
};

// ---------------------------------------------------------------------------
// Include-closure driver.
// ---------------------------------------------------------------------------

class Driver {
public:
    Driver(const CompileOptions& opts, CompileResult& result)
        : opts_(opts), result_(result), builder_(*result.infopedia, result.diagnostics) {}

    void load_path(const std::string& path) {
        fs::path p(path);
        if (!fs::exists(p)) {
            result_.diagnostics.error(path, 0, 0, "io", "cannot open file");
            return;
        }
        load_file(p);
    }

    void compile_memory(const std::string& source, const std::string& name) {
        Document doc = parse(source, name, result_.diagnostics);
        process(std::move(doc), fs::path());
    }

    void finalize() { builder_.finalize(); }

private:
    const CompileOptions& opts_;
    CompileResult& result_;
    Builder builder_;
    std::set<std::string> loaded_;

    void load_file(const fs::path& p) {
        std::error_code ec;
        fs::path canon = fs::weakly_canonical(p, ec);
        std::string key = (ec ? p : canon).string();
        if (!loaded_.insert(key).second) return;

        std::ifstream in(p, std::ios::binary);
        if (!in) {
            result_.diagnostics.error(p.string(), 0, 0, "io", "cannot open file");
            return;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        Document doc = parse(buf.str(), p.string(), result_.diagnostics);
        process(std::move(doc), p.parent_path());
    }

    void process(Document doc, const fs::path& own_dir) {
        for (const auto& stmt : doc.statements) {
            if (stmt.kind != Node::Kind::Include) continue;
            fs::path found = resolve_include(stmt.head, own_dir);
            if (found.empty()) {
                result_.diagnostics.error(doc.file, stmt.line, stmt.column, "io",
                                          "include file '" + stmt.head + "' not found");
                continue;
            }
            load_file(found);
        }
        builder_.add_document(doc);
        result_.documents.push_back(std::move(doc));
    }

    fs::path resolve_include(const std::string& name, const fs::path& own_dir) {
        std::vector<fs::path> dirs;
        if (!own_dir.empty()) dirs.push_back(own_dir);
        for (const auto& d : opts_.include_dirs) dirs.emplace_back(d);
        for (const auto& d : dirs) {
            fs::path candidate = d / name;
            if (fs::exists(candidate)) return candidate;
        }
        return {};
    }
};

} // namespace

CompileResult compile_files(const std::vector<std::string>& paths, const CompileOptions& opts) {
    CompileResult result;
    result.infopedia = std::make_shared<Infopedia>();
    Driver driver(opts, result);
    for (const auto& p : paths) driver.load_path(p);
    driver.finalize();
    return result;
}

CompileResult compile_source(const std::string& source, const std::string& name,
                             const CompileOptions& opts) {
    CompileResult result;
    result.infopedia = std::make_shared<Infopedia>();
    Driver driver(opts, result);
    driver.compile_memory(source, name);
    driver.finalize();
    return result;
}

} // namespace ross
