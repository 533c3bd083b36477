#include "ross/ast.h"

#include <sstream>

namespace ross {

const Node* Node::find(const std::string& h) const {
    for (const auto& c : children)
        if (c.head == h) return &c;
    return nullptr;
}

const Node* Node::find_named(const std::string& n) const {
    for (const auto& c : children)
        if (c.name == n) return &c;
    return nullptr;
}

namespace {

std::string indent_str(int n) { return std::string(static_cast<std::size_t>(n) * 2, ' '); }

void print_set(std::ostringstream& os, const SetDepiction& s, int indent);

void print_attr_value(std::ostringstream& os, const Attr& a, int indent) {
    switch (a.kind) {
    case Attr::Kind::Ident: os << a.text; break;
    case Attr::Kind::Str: os << '"' << a.text << '"'; break;
    case Attr::Kind::Num: os << a.num.to_string(); break;
    case Attr::Kind::Expr: os << expr_to_string(a.expr); break;
    case Attr::Kind::Set: print_set(os, *a.set, indent); break;
    case Attr::Kind::Nil: os << "nil"; break;
    }
}

void print_member_value(std::ostringstream& os, const Value& v, bool quoted) {
    if (quoted) os << '"' << v.to_string() << '"';
    else os << v.to_string();
}

void print_node(std::ostringstream& os, const Node& n, int indent);

void print_set(std::ostringstream& os, const SetDepiction& s, int indent) {
    os << "{ ";
    bool first = true;
    for (const auto& m : s.members) {
        if (!first) os << ", ";
        first = false;
        print_member_value(os, m.value, m.quoted);
        if (m.dictionary) {
            os << " : ";
            std::ostringstream sub;
            print_node(sub, *m.dictionary, indent);
            std::string text = sub.str();
            // inline the member dictionary: strip leading indent and trailing newline
            std::size_t b = text.find_first_not_of(' ');
            std::size_t e = text.find_last_not_of('\n');
            os << text.substr(b, e - b + 1);
        }
    }
    if (s.has_range) {
        if (!s.members.empty() && s.range_comma) os << ",";
        if (!s.members.empty()) os << ' ';
        os << ".. ";
        print_member_value(os, s.range_hi, s.range_hi_quoted);
    }
    os << " }";
}

void print_routine(std::ostringstream& os, const RoutineDef& r, int indent) {
    std::string in0 = indent_str(indent), in1 = indent_str(indent + 1), in2 = indent_str(indent + 2);
    os << in0 << r.return_type << " Routine\n" << in0 << "{\n";
    os << in1 << "Parameters\n" << in1 << "(\n";
    for (const auto& p : r.params) {
        os << in2 << p.type << ' ' << p.name;
        if (p.array_size > 0) os << '[' << p.array_size << ']';
        os << ";\n";
    }
    os << in1 << ");\n\n";
    os << in1 << "Locals\n" << in1 << "(\n";
    for (const auto& l : r.locals)
        os << in2 << "int " << l.name << " = " << l.value << ";\n";
    os << in1 << ");\n\n";
    bool first = true;
    for (const auto& b : r.branches) {
        os << in1 << (first ? "if" : "else if") << " (" << b.param << " == \"" << b.match << "\")\n";
        os << in1 << "{\n";
        for (const auto& a : b.assigns)
            os << in2 << a.target << " [" << a.slot << "] = " << a.value << ";\n";
        os << in1 << "}\n";
        first = false;
    }
    os << '\n' << in1 << "Return " << (r.return_true ? "true" : "false") << ";\n";
    os << in0 << "}\n";
}

void print_node(std::ostringstream& os, const Node& n, int indent) {
    std::string in = indent_str(indent);
    switch (n.kind) {
    case Node::Kind::Include:
        os << "#include <" << n.head << ">\n";
        break;
    case Node::Kind::Scalar:
        os << in << n.head << ' ' << n.name << " = " << n.scalar_value.to_string() << ";\n";
        break;
    case Node::Kind::Element:
        os << in << '<' << n.head;
        for (const auto& a : n.attrs) {
            os << ' ' << a.key << " = ";
            print_attr_value(os, a, indent);
        }
        os << " />\n";
        break;
    case Node::Kind::Ref:
        os << in << n.head << ";\n";
        break;
    case Node::Kind::Set:
        os << in;
        print_set(os, n.set, indent);
        os << '\n';
        break;
    case Node::Kind::Expr:
        os << in << expr_to_string(n.expr) << '\n';
        break;
    case Node::Kind::Routine:
        print_routine(os, *n.routine, indent);
        break;
    case Node::Kind::Section: {
        os << in;
        if (!n.head.empty()) os << n.head;
        if (!n.name.empty()) {
            if (!n.head.empty()) os << ' ';
            os << '"' << n.name << '"';
        }
        if (!n.args.empty()) {
            os << " (";
            for (std::size_t i = 0; i < n.args.size(); ++i)
                os << (i ? ", " : "") << n.args[i];
            os << ");\n";
            break;
        }
        if (n.children.empty()) {
            os << " ();\n";
            break;
        }
        os << "\n" << in << "(\n";
        for (const auto& c : n.children)
            print_node(os, c, indent + 1);
        os << in << ");\n";
        break;
    }
    }
}

} // namespace

std::string pretty_print(const Node& n, int indent) {
    std::ostringstream os;
    print_node(os, n, indent);
    return os.str();
}

std::string pretty_print(const Document& doc) {
    std::ostringstream os;
    for (const auto& s : doc.statements)
        print_node(os, s, 0);
    return os.str();
}

namespace {

bool set_equal(const SetDepiction& a, const SetDepiction& b) {
    if (a.members.size() != b.members.size() || a.has_range != b.has_range) return false;
    if (a.has_range && (a.range_hi != b.range_hi || a.range_comma != b.range_comma ||
                        a.range_hi_quoted != b.range_hi_quoted))
        return false;
    for (std::size_t i = 0; i < a.members.size(); ++i) {
        const auto& ma = a.members[i];
        const auto& mb = b.members[i];
        if (ma.value != mb.value || ma.quoted != mb.quoted) return false;
        if (!ma.dictionary != !mb.dictionary) return false;
        if (ma.dictionary && !node_equal(*ma.dictionary, *mb.dictionary)) return false;
    }
    return true;
}

bool attr_equal(const Attr& a, const Attr& b) {
    if (a.key != b.key || a.kind != b.kind) return false;
    switch (a.kind) {
    case Attr::Kind::Ident:
    case Attr::Kind::Str: return a.text == b.text;
    case Attr::Kind::Num: return a.num == b.num;
    case Attr::Kind::Expr: return expr_equal(a.expr, b.expr);
    case Attr::Kind::Set: return set_equal(*a.set, *b.set);
    case Attr::Kind::Nil: return true;
    }
    return false;
}

bool routine_equal(const RoutineDef& a, const RoutineDef& b) {
    if (a.return_type != b.return_type || a.return_true != b.return_true) return false;
    if (a.params.size() != b.params.size() || a.locals.size() != b.locals.size() ||
        a.branches.size() != b.branches.size())
        return false;
    for (std::size_t i = 0; i < a.params.size(); ++i) {
        if (a.params[i].type != b.params[i].type || a.params[i].name != b.params[i].name ||
            a.params[i].array_size != b.params[i].array_size)
            return false;
    }
    for (std::size_t i = 0; i < a.locals.size(); ++i)
        if (a.locals[i].name != b.locals[i].name || a.locals[i].value != b.locals[i].value)
            return false;
    for (std::size_t i = 0; i < a.branches.size(); ++i) {
        const auto& x = a.branches[i];
        const auto& y = b.branches[i];
        if (x.param != y.param || x.match != y.match || x.assigns.size() != y.assigns.size())
            return false;
        for (std::size_t j = 0; j < x.assigns.size(); ++j)
            if (x.assigns[j].target != y.assigns[j].target || x.assigns[j].slot != y.assigns[j].slot ||
                x.assigns[j].value != y.assigns[j].value)
                return false;
    }
    return true;
}

} // namespace

bool node_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind || a.head != b.head || a.name != b.name || a.args != b.args) return false;
    if (a.attrs.size() != b.attrs.size() || a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.attrs.size(); ++i)
        if (!attr_equal(a.attrs[i], b.attrs[i])) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!node_equal(a.children[i], b.children[i])) return false;
    switch (a.kind) {
    case Node::Kind::Scalar: return a.scalar_value == b.scalar_value;
    case Node::Kind::Set: return set_equal(a.set, b.set);
    case Node::Kind::Expr: return expr_equal(a.expr, b.expr);
    case Node::Kind::Routine: return routine_equal(*a.routine, *b.routine);
    default: return true;
    }
}

bool document_equal(const Document& a, const Document& b) {
    if (a.statements.size() != b.statements.size()) return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i)
        if (!node_equal(a.statements[i], b.statements[i])) return false;
    return true;
}

} // namespace ross
