#pragma once

#include <string>
#include <vector>

namespace ross {

enum class Severity { Error, Warning, Note };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string file;
    int line = 0;
    int column = 0;
    std::string kind;     // short machine-readable category, e.g. "parse", "resolve"
    std::string message;

    std::string format() const;
};

class Diagnostics {
public:
    void error(std::string file, int line, int col, std::string kind, std::string message);
    void warning(std::string file, int line, int col, std::string kind, std::string message);
    void note(std::string file, int line, int col, std::string kind, std::string message);

    bool has_errors() const;
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<Diagnostic>& items() const { return items_; }

    // All diagnostics, one formatted line each.
    std::string format_all() const;

private:
    std::vector<Diagnostic> items_;
};

} // namespace ross
