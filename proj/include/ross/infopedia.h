#pragma once

#include "ross/ast.h"
#include "ross/diagnostics.h"
#include "ross/value_set.h"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ross {

// ---------------------------------------------------------------------------
// Compiled definitions. Names are registered under their qualified form:
// top-level declarations under the bare name, scope-local declarations under
// "Owner.Name" (class-local attribute types, dimension systems declared
// inside a class, structure-nested classes, attribute types declared inside
// a dimension system).
// ---------------------------------------------------------------------------

struct WordList {
    std::vector<std::string> words;   // declaration order; may be empty
    bool is_noun = false;             // DictionaryWordsIsNoun
};

struct ScalarDef {
    std::string name;
    std::string kind;                 // Integer / FloatingPoint / String
    Value value;
    int decl_index = 0;
};

enum class AttrLocus { Plain, Spatial, Temporal };

struct AttributeTypeDef {
    std::string name;                 // bare declared name
    std::string owner;                // declaring class or dimension system ("" = top level)
    std::string qualified;            // owner-prefixed name used as the registry key
    bool owner_is_class = false;
    double probability = 1.0;         // word-sense weight
    bool has_probability = false;
    std::string super_type;           // normalized: Qualitative | Locational
    bool state = false;               // StateAttributeType
    bool optional_causal_feature = false;
    bool identity = false;            // the built-in UniqueIdentityAttributeType
    AttrLocus locus = AttrLocus::Plain;
    std::string value_set_ref;        // <ValueSetName ref = .../>
    std::shared_ptr<ValueSetDef> values;  // inline Values / ValueSet
    int decl_index = 0;
};

struct MappingDef {
    std::string name;
    std::string source_set;
    std::string dest_set;
    ExprPtr function;                 // in terms of x$
    int decl_index = 0;
};

struct TransformDef {
    std::string name;
    std::string source_ref;           // e.g. RelativePosition.SpatialAttributeTypes
    std::string dest_ref;
    std::shared_ptr<RoutineDef> routine;
    int decl_index = 0;
};

struct DimensionSystemDef {
    std::string name;                 // bare declared name
    std::string owner;                // declaring class ("" = top level)
    std::string qualified;
    std::string role_trait;           // e.g. Holder
    std::string rename_of;            // DimensionSystem "X" (Y);
    std::vector<std::string> merge_of;        // Merge(A, B)
    std::vector<std::string> spatial;         // attribute type qualified names
    std::vector<std::string> temporal;
    int decl_index = 0;
};

struct SpecificationSystemDef {
    std::string name;
    std::string dimension_system_alias;   // local rename introduced inside
    std::string dimension_system_ref;
    std::string essential_value_type;     // QualityAttributeTypes "EssentialValueType" (ref)
    int decl_index = 0;
};

struct ClassAttribute {               // Attributes / AttributesSection entry
    std::string name;
    double probability = 1.0;
    bool has_probability = false;
    std::string attr_type;            // referenced attribute type
    std::string value;                // quoted value ("" when a range is given)
    bool has_value = false;
    std::shared_ptr<SetDepiction> range;
};

struct LocationPlaceholder {          // AtLocationSet / OuterDimensionSystemExtentSet
    std::string section;
    std::string dimension_system;
    std::vector<std::pair<std::string, std::string>> attrs;  // ref -> value text
};

struct BehaviorDesignator {
    std::string behavior_class;
    double probability = 1.0;
    bool actual = false;              // BehaviorsActual vs BehaviorsPotential
};

struct ObjectFrameClassDef {
    std::string name;
    std::string owner;                // enclosing class for structure-nested
    std::string qualified;
    bool sealed = false;
    bool structural_parent_class = false;
    double probability_in_structural_parent = 1.0;
    std::string structure_trait = "Compound";   // optional in source, Compound by default
    bool multiple = false;
    std::string cardinality;
    bool mass_substance = false;
    WordList prior_words;
    WordList words;
    std::vector<std::string> higher_classes;
    std::vector<std::string> structural_parent_classes_base;
    std::vector<LocationPlaceholder> relationship_to_parent;
    std::vector<std::string> attribute_types;        // qualified names, decl order
    std::vector<std::string> dimension_systems;      // qualified names / refs, decl order
    std::vector<ClassAttribute> attributes;
    std::vector<std::string> structure;              // qualified nested class names
    std::vector<BehaviorDesignator> behaviors;
    int decl_index = 0;
};

struct RuleNodeAttr {
    enum class Form { Var, Expr, Val };
    std::string ref;                  // attribute type reference as written
    Form form = Form::Val;
    std::string var;                  // a$ / q$ / extra$
    ExprPtr expr;
    std::string value;                // quoted member
};

// PopulatedObjectClass node inside PriorStates / PostStates.
struct RuleNode {
    std::string name;                 // descriptive ("AntecedentActor")
    std::string class_ref;
    bool binder_source = false;
    bool passive = false;             // actee
    bool extra = false;
    bool multiple = false;
    double probability = 1.0;
    bool has_probability = false;
    std::string dimension_system;
    std::vector<RuleNodeAttr> attrs;
    int position = 0;                 // declaration order within its states section
};

struct RuleRef {                      // BehaviorClassReference
    std::string behavior_class;
    double probability = 1.0;
    bool has_probability = false;
    std::string param_actor_class;
    ExprPtr param_actor_expr;
    std::string param_actee_class;
    ExprPtr param_actee_expr;
    int position = 0;
};

struct BehaviorClassDef {
    std::string name;
    bool causal_rule = false;
    std::string rule_direction;       // "" / Forward / Backward
    std::string bridge_class;
    bool negation = false;
    WordList prior_words;
    WordList words;                   // verb five-form tuples
    WordList modifying_verbs;
    WordList adverbs;
    std::vector<RuleNode> prior_nodes, post_nodes;
    std::vector<RuleRef> prior_refs, post_refs;
    int decl_index = 0;
};

struct PopulatedObjectClassDef {
    std::string name;
    std::string structural_parent_class;
    std::string object_frame_class;
    std::string dimension_system;
    std::vector<RuleNodeAttr> attrs;
    int decl_index = 0;
};

struct TemplateDef {
    std::string name;
    std::string structural_parent_class;
    std::string object_frame_class;
    std::string specification_system;
    bool shape_template = false;
    int decl_index = 0;
};

struct RelationshipTypeDef {
    std::string name;
    int decl_index = 0;
};

// ---------------------------------------------------------------------------
// Lexicon: derived word index over class nouns, behavior verbs, value-member
// words, and prior words.
// ---------------------------------------------------------------------------

struct LexiconEntry {
    enum class Kind { Noun, Verb, ValueWord, PriorWord, ModifyingVerb };
    Kind kind = Kind::Noun;
    std::string word;
    std::string owner;                // class / behavior class / attribute type / value set
    std::string detail;               // noun: singular|plural; verb: form; value: member name
    int index = 0;                    // position in its word list
};

// Verb dictionaries list five forms per lemma; form = index mod 5.
const char* verb_form_name(int index);

struct Counts {
    int integers = 0, floats = 0, strings = 0;
    int value_sets = 0, mappings = 0, transforms = 0;
    int attribute_types = 0, relationship_types = 0;
    int dimension_systems = 0, specification_systems = 0;
    int object_frame_classes = 0, template_classes = 0;
    int populated_object_classes = 0, behavior_classes = 0;
};

// ---------------------------------------------------------------------------
// The in-memory knowledge base.
// ---------------------------------------------------------------------------

class Infopedia {
public:
    Infopedia();

    std::vector<ScalarDef> scalars;
    std::vector<std::shared_ptr<ValueSetDef>> value_sets;
    std::vector<MappingDef> mappings;
    std::vector<TransformDef> transforms;
    std::vector<AttributeTypeDef> attribute_types;
    std::vector<DimensionSystemDef> dimension_systems;
    std::vector<SpecificationSystemDef> specification_systems;
    std::vector<ObjectFrameClassDef> classes;
    std::vector<BehaviorClassDef> behavior_classes;
    std::vector<PopulatedObjectClassDef> populated_classes;
    std::vector<TemplateDef> templates;
    std::vector<RelationshipTypeDef> relationship_types;

    std::unordered_map<std::string, int> scalar_ix, value_set_ix, mapping_ix, transform_ix,
        attribute_type_ix, dimension_system_ix, specification_system_ix, class_ix,
        populated_ix, template_ix, relationship_type_ix;
    std::unordered_map<std::string, std::vector<int>> behavior_ix;   // name -> all decls

    std::map<std::string, std::vector<LexiconEntry>> lexicon;

    Counts counts;                    // top-level declarations only

    // --- lookup ---
    const ScalarDef* find_scalar(const std::string& name) const;
    const ValueSetDef* find_value_set(const std::string& name) const;
    const MappingDef* find_mapping(const std::string& name) const;
    const TransformDef* find_transform(const std::string& name) const;
    const SpecificationSystemDef* find_specification_system(const std::string& name) const;
    const PopulatedObjectClassDef* find_populated_class(const std::string& name) const;
    const BehaviorClassDef* behavior_at(int index) const;
    std::vector<const BehaviorClassDef*> find_behavior_classes(const std::string& name) const;

    // Exact qualified key, then unique bare-name fallback.
    const ObjectFrameClassDef* find_class(const std::string& name) const;
    const DimensionSystemDef* find_dimension_system(const std::string& name) const;
    const AttributeTypeDef* find_attribute_type(const std::string& qualified) const;

    // Attribute type reference resolution, in order: explicit qualified name;
    // class-local along the flattened ancestry of `class_context` (nearer
    // declarations shadow farther ones); top-level; any dimension-system
    // local declaration by bare name (first declared wins).
    const AttributeTypeDef* resolve_attribute_type(const std::string& class_context,
                                                   const std::string& name) const;

    // The enumerable value set an attribute type draws from (inline set or
    // ValueSetName reference). Null for identity attribute types.
    const ValueSetDef* effective_values(const AttributeTypeDef& at) const;

    // --- inheritance ---
    // True when `cls` equals `ancestor` or reaches it via HigherClasses.
    bool is_a(const std::string& cls, const std::string& ancestor) const;

    // Depth-first flattening in declaration order: the class itself first,
    // then each higher class subtree; duplicates keep the nearest position.
    std::vector<std::string> flattened_ancestry(const std::string& cls) const;

    // Reports an error and returns names on any HigherClasses cycle.
    std::vector<std::string> find_inheritance_cycle() const;

    // First StructuralParentClassesBase entry along the flattened ancestry.
    std::string structural_parent_of(const std::string& cls) const;

    // Attribute types visible on a class: flattened ancestry order,
    // class-local declarations shadowing inherited ones by bare name.
    std::vector<const AttributeTypeDef*> flattened_attribute_types(const std::string& cls) const;

    // --- dimension systems ---
    // Spatial / temporal attribute type lists with renames and merges
    // resolved, in declaration order.
    std::vector<std::string> resolved_spatial(const std::string& ds_name) const;
    std::vector<std::string> resolved_temporal(const std::string& ds_name) const;

    // The timeline of a structural parent class: its first declared
    // dimension system's first temporal attribute type. `timeline_name`
    // is "<class>.<dimension system>".
    struct TimelineInfo {
        std::string timeline_name;
        const AttributeTypeDef* time_type = nullptr;
        const ValueSetDef* time_points = nullptr;
    };
    std::optional<TimelineInfo> timeline_of(const std::string& sp_class) const;

    // --- lexicon ---
    std::vector<LexiconEntry> lookup_word(const std::string& word) const;
};

} // namespace ross
