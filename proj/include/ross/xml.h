#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ross {

// Minimal XML document tree. Covers what the transcripts and scenario files
// use: elements, attributes, inline text, comments, one declaration.
struct XmlNode {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<XmlNode> children;
    std::string text;  // concatenated inline character data, trimmed

    const XmlNode* child(const std::string& name) const;
    std::vector<const XmlNode*> children_named(const std::string& name) const;
    std::string attr(const std::string& key) const;  // "" when absent
    bool has_attr(const std::string& key) const;
};

// Strict parse of one document; returns the root element or nullopt + err.
std::optional<XmlNode> xml_parse(const std::string& source, std::string& err);

// Escapes &, <, >, " for use in emitted markup.
std::string xml_escape(const std::string& raw);

// Structural comparison that ignores insignificant whitespace, attribute
// order, comments, and the declaration. Returns a description of the first
// difference, or nullopt when the documents are equivalent.
std::optional<std::string> compare_normalized(const std::string& a, const std::string& b);

}  // namespace ross
