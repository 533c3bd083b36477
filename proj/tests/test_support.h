#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ross/compiler.h"

namespace test_support {

inline std::string corpus_dir() { return ROSS_CORPUS_DIR; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Every Star source in the corpus, sorted for stable ordering.
inline std::vector<std::string> star_fixtures() {
    std::vector<std::string> files;
    for (const char* sub : {"appendix", "examples"}) {
        for (const auto& entry : std::filesystem::directory_iterator(corpus_dir() + "/" + sub))
            if (entry.path().extension() == ".h") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

inline ross::CompileOptions corpus_options() {
    ross::CompileOptions options;
    options.include_dirs = {corpus_dir() + "/appendix", corpus_dir() + "/examples"};
    return options;
}

// The three reference compilation groups.
inline ross::CompileResult compile_appendix_group() {
    return ross::compile_files({corpus_dir() + "/appendix/BasicDefinitions.h",
                                corpus_dir() + "/appendix/EverydayObjectDefinitions.h",
                                corpus_dir() + "/appendix/InformationDefinitions.h",
                                corpus_dir() + "/appendix/IntelligentAgentClasses.h",
                                corpus_dir() + "/appendix/BehaviorClasses.h"},
                               corpus_options());
}

inline ross::CompileResult compile_examples_group() {
    return ross::compile_files({corpus_dir() + "/examples/ValueSetsAndMappings.h",
                                corpus_dir() + "/examples/VehicleClasses.h",
                                corpus_dir() + "/examples/PersonExamples.h",
                                corpus_dir() + "/examples/HospitalClasses.h",
                                corpus_dir() + "/examples/FarmObjects.h",
                                corpus_dir() + "/examples/HouseCatExamples.h",
                                corpus_dir() + "/examples/GroceryExamples.h",
                                corpus_dir() + "/examples/TemplateExamples.h"},
                               corpus_options());
}

inline ross::CompileResult compile_acquisition_group() {
    return ross::compile_files({corpus_dir() + "/examples/AcquisitionClasses.h"},
                               corpus_options());
}

}  // namespace test_support
