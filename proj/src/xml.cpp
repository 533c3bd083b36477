#include "ross/xml.h"

#include <algorithm>
#include <cctype>

namespace ross {

const XmlNode* XmlNode::child(const std::string& n) const {
    for (const auto& c : children)
        if (c.name == n) return &c;
    return nullptr;
}

std::vector<const XmlNode*> XmlNode::children_named(const std::string& n) const {
    std::vector<const XmlNode*> out;
    for (const auto& c : children)
        if (c.name == n) out.push_back(&c);
    return out;
}

std::string XmlNode::attr(const std::string& key) const {
    for (const auto& [k, v] : attrs)
        if (k == key) return v;
    return "";
}

bool XmlNode::has_attr(const std::string& key) const {
    for (const auto& [k, v] : attrs)
        if (k == key) return true;
    return false;
}

std::string xml_escape(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

namespace {

class Reader {
public:
    Reader(const std::string& src, std::string& err) : src_(src), err_(err) {}

    std::optional<XmlNode> parse() {
        skip_misc();
        if (eof()) return fail("document has no root element");
        auto root = parse_element();
        if (!root) return std::nullopt;
        skip_misc();
        if (!eof()) return fail("trailing content after root element");
        return root;
    }

private:
    const std::string& src_;
    std::string& err_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    bool starts_with(const char* s) const { return src_.compare(pos_, std::char_traits<char>::length(s), s) == 0; }

    std::optional<XmlNode> fail(const std::string& msg) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i)
            if (src_[i] == '\n') ++line;
        err_ = "line " + std::to_string(line) + ": " + msg;
        return std::nullopt;
    }

    void skip_space() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // whitespace, comments, and the <?xml ...?> declaration
    void skip_misc() {
        for (;;) {
            skip_space();
            if (starts_with("<!--")) {
                auto end = src_.find("-->", pos_ + 4);
                pos_ = end == std::string::npos ? src_.size() : end + 3;
            } else if (starts_with("<?")) {
                auto end = src_.find("?>", pos_ + 2);
                pos_ = end == std::string::npos ? src_.size() : end + 2;
            } else {
                return;
            }
        }
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == ':';
    }

    std::string read_name() {
        std::size_t start = pos_;
        while (!eof() && name_char(peek())) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    bool decode_entities(const std::string& raw, std::string& out) {
        out.clear();
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out += raw[i];
                continue;
            }
            auto semi = raw.find(';', i);
            if (semi == std::string::npos) return false;
            std::string ent = raw.substr(i + 1, semi - i - 1);
            if (ent == "lt") out += '<';
            else if (ent == "gt") out += '>';
            else if (ent == "amp") out += '&';
            else if (ent == "quot") out += '"';
            else if (ent == "apos") out += '\'';
            else return false;
            i = semi;
        }
        return true;
    }

    std::optional<XmlNode> parse_element() {
        if (eof() || peek() != '<') return fail("expected '<'");
        ++pos_;
        XmlNode node;
        node.name = read_name();
        if (node.name.empty()) return fail("element name expected");
        for (;;) {
            skip_space();
            if (eof()) return fail("unterminated element <" + node.name + ">");
            if (starts_with("/>")) {
                pos_ += 2;
                return node;
            }
            if (peek() == '>') {
                ++pos_;
                break;
            }
            std::string key = read_name();
            if (key.empty()) return fail("attribute name expected in <" + node.name + ">");
            skip_space();
            if (eof() || peek() != '=') return fail("'=' expected after attribute '" + key + "'");
            ++pos_;
            skip_space();
            if (eof() || (peek() != '"' && peek() != '\''))
                return fail("quoted value expected for attribute '" + key + "'");
            char quote = peek();
            ++pos_;
            auto end = src_.find(quote, pos_);
            if (end == std::string::npos) return fail("unterminated attribute value for '" + key + "'");
            std::string raw = src_.substr(pos_, end - pos_);
            pos_ = end + 1;
            std::string value;
            if (!decode_entities(raw, value)) return fail("bad entity in attribute '" + key + "'");
            node.attrs.emplace_back(std::move(key), std::move(value));
        }
        // content: text, comments, child elements, closing tag
        std::string text;
        for (;;) {
            if (eof()) return fail("missing </" + node.name + ">");
            if (peek() == '<') {
                if (starts_with("<!--")) {
                    auto end = src_.find("-->", pos_ + 4);
                    pos_ = end == std::string::npos ? src_.size() : end + 3;
                    continue;
                }
                if (starts_with("</")) {
                    pos_ += 2;
                    std::string closing = read_name();
                    skip_space();
                    if (eof() || peek() != '>') return fail("malformed closing tag for <" + node.name + ">");
                    ++pos_;
                    if (closing != node.name)
                        return fail("mismatched closing tag </" + closing + "> for <" + node.name + ">");
                    break;
                }
                auto childNode = parse_element();
                if (!childNode) return std::nullopt;
                node.children.push_back(std::move(*childNode));
                continue;
            }
            std::size_t start = pos_;
            while (!eof() && peek() != '<') ++pos_;
            text += src_.substr(start, pos_ - start);
        }
        std::string decoded;
        if (!decode_entities(text, decoded)) return fail("bad entity in text of <" + node.name + ">");
        // trim; the formats carry no mixed content
        std::size_t first = decoded.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) {
            node.text.clear();
        } else {
            std::size_t last = decoded.find_last_not_of(" \t\r\n");
            node.text = decoded.substr(first, last - first + 1);
        }
        return node;
    }
};

std::string collapse_spaces(const std::string& s) {
    std::string out;
    bool in_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out += ' ';
        in_space = false;
        out += c;
    }
    return out;
}

std::optional<std::string> compare_nodes(const XmlNode& a, const XmlNode& b, const std::string& path) {
    std::string here = path + "/" + a.name;
    if (a.name != b.name)
        return path + ": element <" + a.name + "> vs <" + b.name + ">";
    auto sort_attrs = [](const XmlNode& n) {
        auto attrs = n.attrs;
        std::sort(attrs.begin(), attrs.end());
        return attrs;
    };
    auto aa = sort_attrs(a), ba = sort_attrs(b);
    if (aa != ba) {
        for (std::size_t i = 0; i < std::max(aa.size(), ba.size()); ++i) {
            std::string left = i < aa.size() ? aa[i].first + "=\"" + aa[i].second + "\"" : "(none)";
            std::string right = i < ba.size() ? ba[i].first + "=\"" + ba[i].second + "\"" : "(none)";
            if (left != right)
                return here + ": attribute " + left + " vs " + right;
        }
    }
    if (collapse_spaces(a.text) != collapse_spaces(b.text))
        return here + ": text '" + a.text + "' vs '" + b.text + "'";
    if (a.children.size() != b.children.size())
        return here + ": " + std::to_string(a.children.size()) + " children vs " +
               std::to_string(b.children.size());
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        auto diff = compare_nodes(a.children[i], b.children[i],
                                  here + "[" + std::to_string(i) + "]");
        if (diff) return diff;
    }
    return std::nullopt;
}

}  // namespace

std::optional<XmlNode> xml_parse(const std::string& source, std::string& err) {
    Reader reader(source, err);
    return reader.parse();
}

std::optional<std::string> compare_normalized(const std::string& a, const std::string& b) {
    std::string err;
    auto left = xml_parse(a, err);
    if (!left) return "left document: " + err;
    auto right = xml_parse(b, err);
    if (!right) return "right document: " + err;
    return compare_nodes(*left, *right, "");
}

}  // namespace ross
