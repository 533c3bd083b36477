#pragma once

#include "ross/ast.h"
#include "ross/diagnostics.h"
#include "ross/infopedia.h"

#include <memory>
#include <string>
#include <vector>

namespace ross {

struct CompileOptions {
    // Directories searched for #include <name>; the including file's own
    // directory is searched first.
    std::vector<std::string> include_dirs;
};

struct CompileResult {
    std::shared_ptr<Infopedia> infopedia;
    std::vector<Document> documents;      // compile order, includes first
    Diagnostics diagnostics;

    bool ok() const { return !diagnostics.has_errors(); }
};

// Compile the named files plus their include closure into one knowledge
// base. Each file is loaded once; top-level declarations feed the counts.
CompileResult compile_files(const std::vector<std::string>& paths,
                            const CompileOptions& opts = {});

// Compile a single in-memory source (includes resolve against include_dirs).
CompileResult compile_source(const std::string& source, const std::string& name,
                             const CompileOptions& opts = {});

} // namespace ross
