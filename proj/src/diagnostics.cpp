#include "ross/diagnostics.h"

#include <sstream>

namespace ross {

namespace {
const char* severity_name(Severity s) {
    switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Note: return "note";
    }
    return "error";
}
} // namespace

std::string Diagnostic::format() const {
    std::ostringstream os;
    os << severity_name(severity) << ' ' << file << ':' << line << ':' << column
       << ' ' << kind << ' ' << message;
    return os.str();
}

void Diagnostics::error(std::string file, int line, int col, std::string kind, std::string message) {
    items_.push_back({Severity::Error, std::move(file), line, col, std::move(kind), std::move(message)});
}

void Diagnostics::warning(std::string file, int line, int col, std::string kind, std::string message) {
    items_.push_back({Severity::Warning, std::move(file), line, col, std::move(kind), std::move(message)});
}

void Diagnostics::note(std::string file, int line, int col, std::string kind, std::string message) {
    items_.push_back({Severity::Note, std::move(file), line, col, std::move(kind), std::move(message)});
}

bool Diagnostics::has_errors() const {
    for (const auto& d : items_)
        if (d.severity == Severity::Error) return true;
    return false;
}

std::string Diagnostics::format_all() const {
    std::string out;
    for (const auto& d : items_) {
        out += d.format();
        out += '\n';
    }
    return out;
}

} // namespace ross
