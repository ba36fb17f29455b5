#include "regdet/textio.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace regdet::textio {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex_pair(Complex v) {
    return "[" + format_double(v.real()) + ", " + format_double(v.imag()) + "]";
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (unsigned char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    return out;
}

namespace {

[[noreturn]] void bad(const std::string& text) {
    throw std::invalid_argument("cannot parse complex literal \"" + text +
                                "\"; expected the form a+bi (examples: 2, 3i, 1-0.5i)");
}

// Reads one signed double starting at *pos; also accepts a bare sign (or
// nothing) immediately followed by 'i', which means coefficient +/-1.
// Returns false if no number could be read at all.
bool read_part(const std::string& t, size_t* pos, double* value, bool* bare_sign) {
    size_t p = *pos;
    double sign = 1.0;
    *bare_sign = false;
    if (p < t.size() && (t[p] == '+' || t[p] == '-')) {
        if (t[p] == '-')
            sign = -1.0;
        ++p;
    }
    if (p < t.size() && (t[p] == 'i' || t[p] == 'I')) {
        *value = sign;
        *bare_sign = true;
        *pos = p; // leave the 'i' for the caller
        return true;
    }
    if (p < t.size() && (t[p] == '+' || t[p] == '-'))
        return false; // doubled sign: strtod would silently accept it
    const char* start = t.c_str() + p;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start)
        return false;
    *value = sign * v;
    *pos = p + static_cast<size_t>(end - start);
    return true;
}

} // namespace

Complex parse_complex(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.empty())
        bad(text);

    size_t pos = 0;
    double first = 0.0;
    bool bare = false;
    if (!read_part(t, &pos, &first, &bare))
        bad(text);

    // "<num>i" or "i": purely imaginary
    if (pos < t.size() && (t[pos] == 'i' || t[pos] == 'I')) {
        if (pos + 1 != t.size() || !std::isfinite(first))
            bad(text);
        return Complex(0.0, first);
    }
    if (bare)
        bad(text); // bare sign not followed by i
    if (pos == t.size()) {
        if (!std::isfinite(first))
            bad(text);
        return Complex(first, 0.0); // purely real
    }

    // must be followed by a signed imaginary part ending in 'i'
    if (t[pos] != '+' && t[pos] != '-')
        bad(text);
    double second = 0.0;
    if (!read_part(t, &pos, &second, &bare))
        bad(text);
    if (pos >= t.size() || (t[pos] != 'i' && t[pos] != 'I') || pos + 1 != t.size())
        bad(text);
    if (!std::isfinite(first) || !std::isfinite(second))
        bad(text);
    return Complex(first, second);
}

} // namespace regdet::textio
