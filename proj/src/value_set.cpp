#include "ross/value_set.h"

namespace ross {

void ValueSetDef::add_member(std::string m, std::vector<std::string> words) {
    member_index.emplace(m, static_cast<int>(members.size()));
    members.push_back(std::move(m));
    member_words.push_back(std::move(words));
}

bool ValueSetDef::contains(const Value& v) const {
    if (v.is_text()) return member_index.count(v.as_text()) != 0;
    if (v.is_int()) {
        if (integer_constants) return true;
        if (has_range) return v.as_int() >= lo && v.as_int() <= hi;
        // enumerated sets hold symbols only
        return false;
    }
    if (v.is_float()) {
        // floats belong only to unconstrained numeric sets
        return integer_constants;
    }
    return false;
}

std::optional<int> ValueSetDef::ordinal(const Value& v) const {
    if (!v.is_text()) return std::nullopt;
    auto it = member_index.find(v.as_text());
    if (it == member_index.end()) return std::nullopt;
    return it->second;
}

std::optional<Value> ValueSetDef::successor(const Value& v, std::int64_t n) const {
    if (v.is_int() && (has_range || integer_constants)) {
        std::int64_t next = v.as_int() + n;
        if (has_range && (next < lo || next > hi)) return std::nullopt;
        return Value::integer(next);
    }
    auto ord = ordinal(v);
    if (!ord) return std::nullopt;
    std::int64_t next = *ord + n;
    if (next < 0 || next >= static_cast<std::int64_t>(members.size())) return std::nullopt;
    return Value::text(members[static_cast<std::size_t>(next)]);
}

std::optional<Value> ValueSetDef::first_member() const {
    if (!members.empty()) return Value::text(members.front());
    if (has_range) return Value::integer(lo);
    if (integer_constants) return Value::integer(0);
    return std::nullopt;
}

bool contains_brute_force(const ValueSetDef& s, const Value& v) {
    if (v.is_text()) {
        for (const auto& m : s.members)
            if (m == v.as_text()) return true;
        return false;
    }
    if (v.is_int()) {
        if (s.integer_constants) return true;
        if (s.has_range) {
            for (std::int64_t x = s.lo; x <= s.hi; ++x)
                if (x == v.as_int()) return true;
        }
        return false;
    }
    if (v.is_float()) return s.integer_constants;
    return false;
}

} // namespace ross
