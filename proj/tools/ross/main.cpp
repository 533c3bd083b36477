// ross: compile Star sources, query the lexicon, run scenarios, and work
// with instance-model XML from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ross/compiler.h"
#include "ross/fact_model.h"
#include "ross/inference.h"
#include "ross/transforms.h"
#include "ross/xml.h"
#include "ross/xml_io.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;  // diagnostics, match failures, bad content
constexpr int kExitUsage = 2;   // unusable invocation or unreadable files

std::optional<std::string> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return false;
    }
    out << text;
    return true;
}

std::string format_counts(const ross::Counts& c) {
    std::ostringstream os;
    os << "integer declarations: " << c.integers << "\n"
       << "floating point declarations: " << c.floats << "\n"
       << "string declarations: " << c.strings << "\n"
       << "value sets: " << c.value_sets << "\n"
       << "mappings: " << c.mappings << "\n"
       << "transforms: " << c.transforms << "\n"
       << "attribute types: " << c.attribute_types << "\n"
       << "relationship types: " << c.relationship_types << "\n"
       << "dimension systems: " << c.dimension_systems << "\n"
       << "specification systems: " << c.specification_systems << "\n"
       << "object frame classes: " << c.object_frame_classes << "\n"
       << "template classes: " << c.template_classes << "\n"
       << "populated object classes: " << c.populated_object_classes << "\n"
       << "behavior classes: " << c.behavior_classes << "\n";
    return os.str();
}

const char* lexicon_kind_name(ross::LexiconEntry::Kind kind) {
    using Kind = ross::LexiconEntry::Kind;
    switch (kind) {
        case Kind::Noun: return "noun";
        case Kind::Verb: return "verb";
        case Kind::ValueWord: return "value";
        case Kind::PriorWord: return "prior-word";
        case Kind::ModifyingVerb: return "modifying-verb";
    }
    return "word";
}

struct CompileArgs {
    std::vector<std::string> files;
    std::vector<std::string> include_dirs;
    bool verbose = false;
};

// Shared "compile these sources" step; prints diagnostics to stderr.
std::optional<ross::CompileResult> compile_or_report(const CompileArgs& args) {
    ross::CompileOptions options;
    options.include_dirs = args.include_dirs;
    ross::CompileResult result = ross::compile_files(args.files, options);
    if (!result.diagnostics.empty()) std::cerr << result.diagnostics.format_all();
    if (!result.ok()) return std::nullopt;
    return result;
}

void add_compile_options(CLI::App* cmd, CompileArgs& args, bool files_required = true) {
    auto* files = cmd->add_option("files", args.files, "Star source files");
    if (files_required) files->required();
    cmd->add_option("--include", args.include_dirs, "directory searched for included files")
        ->type_name("DIR");
    cmd->add_flag("-v,--verbose", args.verbose, "report extra detail");
}

std::string format_outcomes(const ross::InferenceResult& result, bool verbose) {
    std::ostringstream os;
    int rank = 0;
    for (const auto& outcome : result.outcomes) {
        os << ++rank << ". " << outcome.behavior_class << " " << outcome.status;
        if (outcome.applied) os << " probability " << ross::Value::floating(outcome.probability).to_string();
        os << "\n";
        if (verbose && !outcome.detail.empty()) os << "   " << outcome.detail << "\n";
    }
    if (result.ok)
        os << "applied: " << result.outcomes.front().behavior_class << "\n";
    else
        os << "applied: none (" << result.error << ")\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Star language compiler and behavior-class inference engine"};
    app.require_subcommand(1);

    // --- compile ---
    CompileArgs compile_args;
    std::string compile_out;
    CLI::App* compile_cmd = app.add_subcommand("compile", "compile sources and report declaration counts");
    add_compile_options(compile_cmd, compile_args);
    compile_cmd->add_option("--out", compile_out, "write the report here instead of stdout");

    // --- lexicon ---
    CompileArgs lexicon_args;
    std::string lexicon_word;
    std::string lexicon_out;
    CLI::App* lexicon_cmd = app.add_subcommand("lexicon", "look up a word in the compiled lexicon");
    add_compile_options(lexicon_cmd, lexicon_args);
    lexicon_cmd->add_option("--word", lexicon_word, "word to look up")->required();
    lexicon_cmd->add_option("--out", lexicon_out, "write matches here instead of stdout");

    // --- infer ---
    CompileArgs infer_args;
    std::string infer_scenario;
    std::string infer_out;
    std::string infer_format = "text";
    int infer_depth = 4;
    CLI::App* infer_cmd = app.add_subcommand("infer", "run a scenario through the behavior classes");
    add_compile_options(infer_cmd, infer_args);
    infer_cmd->add_option("--scenario", infer_scenario, "scenario XML file")->required();
    infer_cmd->add_option("--format", infer_format, "text (outcome list) or xml (final model)")
        ->check(CLI::IsMember({"text", "xml"}));
    infer_cmd->add_option("--out", infer_out, "write the result here instead of stdout");
    infer_cmd->add_option("--max-depth", infer_depth, "nested behavior-class depth limit");

    // --- emit-xml ---
    CompileArgs emit_args;
    std::string emit_demo;
    std::string emit_in;
    std::string emit_out;
    CLI::App* emit_cmd = app.add_subcommand("emit-xml", "serialize an instance model");
    add_compile_options(emit_cmd, emit_args, /*files_required=*/false);
    emit_cmd->add_option("--demo", emit_demo, "built-in repository: farmer-donkey or man-boy")
        ->check(CLI::IsMember({"farmer-donkey", "man-boy"}));
    emit_cmd->add_option("--in", emit_in, "instance-model XML to read back and re-emit");
    emit_cmd->add_option("--out", emit_out, "write the XML here instead of stdout");

    // --- transform ---
    CompileArgs transform_args;
    std::string transform_name;
    std::string transform_source;
    std::string mapping_name;
    std::int64_t mapping_input = 0;
    bool mapping_input_set = false;
    CLI::App* transform_cmd = app.add_subcommand("transform", "apply a transform routine or a unit mapping");
    add_compile_options(transform_cmd, transform_args);
    transform_cmd->add_option("--name", transform_name, "transform to run");
    transform_cmd->add_option("--source", transform_source, "source value for the transform");
    transform_cmd->add_option("--mapping", mapping_name, "mapping to apply");
    transform_cmd->add_option("--input", mapping_input, "integer input for the mapping")
        ->each([&](const std::string&) { mapping_input_set = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (compile_cmd->parsed()) {
        ross::CompileOptions options;
        options.include_dirs = compile_args.include_dirs;
        ross::CompileResult result = ross::compile_files(compile_args.files, options);
        if (!result.diagnostics.empty()) std::cerr << result.diagnostics.format_all();
        std::ostringstream report;
        report << format_counts(result.infopedia->counts);
        if (compile_args.verbose)
            report << "documents: " << result.documents.size() << "\n";
        if (!write_output(compile_out, report.str())) return kExitUsage;
        return result.ok() ? kExitOk : kExitDomain;
    }

    if (lexicon_cmd->parsed()) {
        auto compiled = compile_or_report(lexicon_args);
        if (!compiled) return kExitDomain;
        auto entries = compiled->infopedia->lookup_word(lexicon_word);
        std::ostringstream os;
        for (const auto& entry : entries)
            os << entry.word << ": " << entry.owner << " " << lexicon_kind_name(entry.kind) << " "
               << entry.detail << "\n";
        if (entries.empty()) os << lexicon_word << ": not found\n";
        if (!write_output(lexicon_out, os.str())) return kExitUsage;
        return entries.empty() ? kExitDomain : kExitOk;
    }

    if (infer_cmd->parsed()) {
        auto scenario_text = slurp(infer_scenario);
        if (!scenario_text) {
            std::cerr << "cannot read " << infer_scenario << "\n";
            return kExitUsage;
        }
        auto compiled = compile_or_report(infer_args);
        if (!compiled) return kExitDomain;
        std::string err;
        auto scenario = ross::parse_scenario(*scenario_text, compiled->infopedia.get(), err);
        if (!scenario) {
            std::cerr << infer_scenario << ": " << err << "\n";
            return kExitDomain;
        }
        ross::InferenceOptions options;
        options.max_depth = infer_depth;
        ross::InferenceResult result = ross::run_scenario(*compiled->infopedia, *scenario, options);
        std::string rendered = infer_format == "xml" ? ross::emit_instance_model(result.final_model)
                                                     : format_outcomes(result, infer_args.verbose);
        if (!write_output(infer_out, rendered)) return kExitUsage;
        return result.ok ? kExitOk : kExitDomain;
    }

    if (emit_cmd->parsed()) {
        if (emit_demo.empty() == emit_in.empty()) {
            std::cerr << "emit-xml needs exactly one of --demo or --in\n";
            return kExitUsage;
        }
        std::string xml;
        if (!emit_demo.empty()) {
            ross::InstanceModel model = emit_demo == "farmer-donkey" ? ross::build_farmer_donkey_model()
                                                                     : ross::build_man_boy_model();
            xml = ross::emit_instance_model(model);
        } else {
            auto text = slurp(emit_in);
            if (!text) {
                std::cerr << "cannot read " << emit_in << "\n";
                return kExitUsage;
            }
            std::shared_ptr<ross::Infopedia> info;
            if (!emit_args.files.empty()) {
                auto compiled = compile_or_report(emit_args);
                if (!compiled) return kExitDomain;
                info = compiled->infopedia;
            }
            std::string err;
            auto model = ross::parse_instance_model(*text, info.get(), err);
            if (!model) {
                std::cerr << emit_in << ": " << err << "\n";
                return kExitDomain;
            }
            xml = ross::emit_instance_model(*model);
        }
        if (!write_output(emit_out, xml)) return kExitUsage;
        return kExitOk;
    }

    if (transform_cmd->parsed()) {
        bool run_transform = !transform_name.empty() || !transform_source.empty();
        bool run_mapping = !mapping_name.empty();
        if (run_transform == run_mapping) {
            std::cerr << "transform needs either --name/--source or --mapping/--input\n";
            return kExitUsage;
        }
        auto compiled = compile_or_report(transform_args);
        if (!compiled) return kExitDomain;
        if (run_transform) {
            if (transform_name.empty() || transform_source.empty()) {
                std::cerr << "transform needs both --name and --source\n";
                return kExitUsage;
            }
            std::string err;
            auto slots = ross::apply_transform(*compiled->infopedia, transform_name,
                                               transform_source, err);
            if (!slots) {
                std::cerr << err << "\n";
                return kExitDomain;
            }
            if (!err.empty()) std::cerr << err << "\n";
            std::ostringstream os;
            for (std::size_t i = 0; i < slots->size(); ++i)
                os << (i ? " " : "") << (*slots)[i];
            os << "\n";
            std::cout << os.str();
            return err.empty() ? kExitOk : kExitDomain;
        }
        if (!mapping_input_set) {
            std::cerr << "transform --mapping needs --input\n";
            return kExitUsage;
        }
        std::string err;
        auto mapped = ross::apply_mapping(*compiled->infopedia, mapping_name, mapping_input, err);
        if (!mapped) {
            std::cerr << err << "\n";
            return kExitDomain;
        }
        std::cout << *mapped << "\n";
        return kExitOk;
    }

    return kExitUsage;
}
