#pragma once

#include "ross/expr.h"
#include "ross/value.h"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ross {

struct Node;

// One member of a value-set depiction: a literal (quoted text, bare
// identifier, or number), optionally with a per-member dictionary.
struct SetMember {
    Value value;
    bool quoted = false;                 // "White" vs lenMax vs 12
    std::shared_ptr<Node> dictionary;    // Dictionary ( English ( ... ) )
};

// { "A", "B" } / { 1, .. lenMax } / { 0 .. 800 }
struct SetDepiction {
    std::vector<SetMember> members;
    bool has_range = false;
    bool range_comma = false;            // the "1, .. hi" spelling
    Value range_hi;                      // number or identifier (scalar reference)
    bool range_hi_quoted = false;
};

// <Head key = value ... />
struct Attr {
    enum class Kind { Ident, Str, Num, Expr, Set, Nil };
    std::string key;
    Kind kind = Kind::Ident;
    std::string text;     // Ident: possibly qualified / variable; Str: contents
    Value num;
    ExprPtr expr;
    std::shared_ptr<SetDepiction> set;
};

// Embedded transform routine.
struct RoutineParam {
    std::string type;     // "string" / "int" / "bool"...
    std::string name;
    int array_size = 0;   // 0 = scalar
};
struct RoutineLocal {
    std::string name;
    std::int64_t value = 0;
};
struct RoutineAssign {
    std::string target;        // parameter name, e.g. Dest
    std::string slot;          // local used as index, e.g. x
    std::int64_t value = 0;
};
struct RoutineBranch {
    std::string param;         // e.g. Source
    std::string match;         // string compared against
    std::vector<RoutineAssign> assigns;
};
struct RoutineDef {
    std::string return_type;   // "bool"
    std::vector<RoutineParam> params;
    std::vector<RoutineLocal> locals;
    std::vector<RoutineBranch> branches;
    bool return_true = true;
};

// A uniform syntax node. Star is section-structured, so one shape covers
// every statement; the compiler interprets heads and keys.
struct Node {
    enum class Kind {
        Include,   // #include <path>           head = path
        Scalar,    // Integer name = value;     head = kind keyword, name, scalar_value
        Element,   // <Head k = v ... />        head, attrs
        Section,   // Head "Name" ( body );     head and/or name, children or args
        Set,       // { ... }                   set
        Ref,       // BareIdentifier;           head = identifier (possibly qualified)
        Expr,      // ( x$ * 3.2808 )           expr
        Routine,   // bool Routine { ... }      routine
    };

    Kind kind = Kind::Section;
    std::string head;                 // see per-kind notes above
    std::string name;                 // quoted declaration name, if any
    std::vector<std::string> args;    // section argument form: (A, B) / (nil) / rename target
    std::vector<Attr> attrs;
    std::vector<Node> children;
    Value scalar_value;
    SetDepiction set;
    ExprPtr expr;
    std::shared_ptr<RoutineDef> routine;

    int line = 0, column = 0;

    // First child section with the given head (or head+name), if any.
    const Node* find(const std::string& head) const;
    const Node* find_named(const std::string& name) const;
};

struct Document {
    std::string file;                 // source path as given
    std::vector<Node> statements;
};

// Canonical source text. parse(pretty_print(doc)) yields a structurally
// equal document; comments and incidental layout are not preserved.
std::string pretty_print(const Document& doc);
std::string pretty_print(const Node& n, int indent = 0);

bool node_equal(const Node& a, const Node& b);
bool document_equal(const Document& a, const Document& b);

} // namespace ross
