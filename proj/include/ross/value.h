#pragma once

#include <cstdint>
#include <string>
#include <variant>

namespace ross {

// A literal value appearing in Star source: nil, integer, floating point,
// or text (quoted strings and bare identifiers both carry text).
class Value {
public:
    enum class Kind { Nil, Int, Float, Text };

    Value() : data_(std::monostate{}) {}
    static Value nil() { return Value(); }
    static Value integer(std::int64_t v) { Value x; x.data_ = v; return x; }
    static Value floating(double v) { Value x; x.data_ = v; return x; }
    static Value text(std::string v) { Value x; x.data_ = std::move(v); return x; }

    Kind kind() const {
        switch (data_.index()) {
        case 1: return Kind::Int;
        case 2: return Kind::Float;
        case 3: return Kind::Text;
        default: return Kind::Nil;
        }
    }
    bool is_nil() const { return kind() == Kind::Nil; }
    bool is_int() const { return kind() == Kind::Int; }
    bool is_float() const { return kind() == Kind::Float; }
    bool is_number() const { return is_int() || is_float(); }
    bool is_text() const { return kind() == Kind::Text; }

    std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
    double as_float() const { return std::get<double>(data_); }
    const std::string& as_text() const { return std::get<std::string>(data_); }
    double as_number() const { return is_int() ? double(as_int()) : as_float(); }

    // Rendering used by the pretty printer and the instance-model emitter:
    // integers as-is, floats with a minimal round-trip form, text bare.
    std::string to_string() const;

    bool operator==(const Value& o) const { return data_ == o.data_; }
    bool operator!=(const Value& o) const { return !(*this == o); }

private:
    std::variant<std::monostate, std::int64_t, double, std::string> data_;
};

// Minimal decimal form of a double that parses back to the same value.
std::string format_double(double v);

} // namespace ross
