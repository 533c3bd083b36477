#include "ross/value.h"

#include <cstdio>
#include <cstring>

namespace ross {

std::string format_double(double v) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) break;
    }
    // Keep an explicit decimal point so floats stay visually distinct
    // from integers when re-lexed.
    if (!std::strchr(buf, '.') && !std::strchr(buf, 'e') && !std::strchr(buf, 'n'))
        std::strcat(buf, ".0");
    return buf;
}

std::string Value::to_string() const {
    switch (kind()) {
    case Kind::Nil: return "nil";
    case Kind::Int: return std::to_string(as_int());
    case Kind::Float: return format_double(as_float());
    case Kind::Text: return as_text();
    }
    return "nil";
}

} // namespace ross
