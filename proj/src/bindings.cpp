// Python bindings for the compiler, lexicon, transforms, and the
// scenario-driven inference engine.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ross/compiler.h"
#include "ross/fact_model.h"
#include "ross/inference.h"
#include "ross/transforms.h"
#include "ross/xml.h"
#include "ross/xml_io.h"

namespace py = pybind11;

namespace {

struct KnowledgeBase {
    std::shared_ptr<ross::Infopedia> info;
    std::vector<std::string> diagnostics;
    bool ok = false;

    py::dict counts() const {
        const ross::Counts& c = info->counts;
        py::dict d;
        d["integer declarations"] = c.integers;
        d["floating point declarations"] = c.floats;
        d["string declarations"] = c.strings;
        d["value sets"] = c.value_sets;
        d["mappings"] = c.mappings;
        d["transforms"] = c.transforms;
        d["attribute types"] = c.attribute_types;
        d["relationship types"] = c.relationship_types;
        d["dimension systems"] = c.dimension_systems;
        d["specification systems"] = c.specification_systems;
        d["object frame classes"] = c.object_frame_classes;
        d["template classes"] = c.template_classes;
        d["populated object classes"] = c.populated_object_classes;
        d["behavior classes"] = c.behavior_classes;
        return d;
    }

    py::list lookup(const std::string& word) const {
        py::list out;
        for (const auto& entry : info->lookup_word(word)) {
            const char* kind = "word";
            switch (entry.kind) {
                case ross::LexiconEntry::Kind::Noun: kind = "noun"; break;
                case ross::LexiconEntry::Kind::Verb: kind = "verb"; break;
                case ross::LexiconEntry::Kind::ValueWord: kind = "value"; break;
                case ross::LexiconEntry::Kind::PriorWord: kind = "prior-word"; break;
                case ross::LexiconEntry::Kind::ModifyingVerb: kind = "modifying-verb"; break;
            }
            py::dict d;
            d["word"] = entry.word;
            d["owner"] = entry.owner;
            d["kind"] = kind;
            d["detail"] = entry.detail;
            out.append(std::move(d));
        }
        return out;
    }

    std::int64_t map_value(const std::string& mapping, std::int64_t input) const {
        std::string err;
        auto result = ross::apply_mapping(*info, mapping, input, err);
        if (!result) throw std::invalid_argument(err);
        return *result;
    }

    std::vector<std::int64_t> transform_value(const std::string& transform,
                                              const std::string& source) const {
        std::string err;
        auto result = ross::apply_transform(*info, transform, source, err);
        if (!result) throw std::invalid_argument(err);
        if (!err.empty()) throw std::invalid_argument(err);
        return *result;
    }

    py::dict run_scenario_xml(const std::string& xml, int max_depth) const {
        std::string err;
        auto scenario = ross::parse_scenario(xml, info.get(), err);
        if (!scenario) throw std::invalid_argument(err);
        ross::InferenceOptions options;
        options.max_depth = max_depth;
        ross::InferenceResult result = ross::run_scenario(*info, *scenario, options);
        py::dict d;
        d["ok"] = result.ok;
        d["error"] = result.error;
        py::list outcomes;
        for (const auto& o : result.outcomes) {
            py::dict row;
            row["behavior_class"] = o.behavior_class;
            row["status"] = o.status;
            row["probability"] = o.probability;
            row["detail"] = o.detail;
            row["applied"] = o.applied;
            outcomes.append(std::move(row));
        }
        d["outcomes"] = std::move(outcomes);
        d["final_xml"] = ross::emit_instance_model(result.final_model);
        return d;
    }
};

KnowledgeBase compile_files_py(const std::vector<std::string>& files,
                               const std::vector<std::string>& include_dirs) {
    ross::CompileOptions options;
    options.include_dirs = include_dirs;
    ross::CompileResult result = ross::compile_files(files, options);
    KnowledgeBase kb;
    kb.info = result.infopedia;
    kb.ok = result.ok();
    for (const auto& d : result.diagnostics.items()) kb.diagnostics.push_back(d.format());
    return kb;
}

KnowledgeBase compile_source_py(const std::string& source, const std::string& name,
                                const std::vector<std::string>& include_dirs) {
    ross::CompileOptions options;
    options.include_dirs = include_dirs;
    ross::CompileResult result = ross::compile_source(source, name, options);
    KnowledgeBase kb;
    kb.info = result.infopedia;
    kb.ok = result.ok();
    for (const auto& d : result.diagnostics.items()) kb.diagnostics.push_back(d.format());
    return kb;
}

std::string demo_model_py(const std::string& name) {
    if (name == "farmer-donkey") return ross::emit_instance_model(ross::build_farmer_donkey_model());
    if (name == "man-boy") return ross::emit_instance_model(ross::build_man_boy_model());
    throw std::invalid_argument("unknown demo '" + name + "'");
}

py::object compare_normalized_py(const std::string& a, const std::string& b) {
    auto diff = ross::compare_normalized(a, b);
    if (!diff) return py::none();
    return py::str(*diff);
}

}  // namespace

PYBIND11_MODULE(rossbind, m) {
    m.doc() = "Star language compiler and behavior-class inference engine";

    py::class_<KnowledgeBase>(m, "KnowledgeBase")
        .def_readonly("ok", &KnowledgeBase::ok)
        .def_readonly("diagnostics", &KnowledgeBase::diagnostics)
        .def("counts", &KnowledgeBase::counts)
        .def("lookup", &KnowledgeBase::lookup, py::arg("word"))
        .def("apply_mapping", &KnowledgeBase::map_value, py::arg("mapping"), py::arg("input"))
        .def("apply_transform", &KnowledgeBase::transform_value, py::arg("transform"),
             py::arg("source"))
        .def("run_scenario_xml", &KnowledgeBase::run_scenario_xml, py::arg("xml"),
             py::arg("max_depth") = 4);

    m.def("compile_files", &compile_files_py, py::arg("files"),
          py::arg("include_dirs") = std::vector<std::string>{});
    m.def("compile_source", &compile_source_py, py::arg("source"), py::arg("name") = "<memory>",
          py::arg("include_dirs") = std::vector<std::string>{});
    m.def("demo_model", &demo_model_py, py::arg("name"));
    m.def("compare_normalized", &compare_normalized_py, py::arg("a"), py::arg("b"));
}
