#pragma once

#include <string>

#include "regdet/specfun.hpp"

// Text helpers shared by the CLI and its tests: deterministic float
// formatting (17 significant digits, so identical invocations emit identical
// bytes) and the "a+bi" complex literal grammar.

namespace regdet::textio {

using specfun::Complex;

// %.17g — fixed 17 significant digits, round-trippable and byte-stable.
std::string format_double(double x);

// JSON array "[re, im]" using format_double for both parts.
std::string format_complex_pair(Complex v);

// Minimal JSON string escaping (quotes, backslash, control characters).
std::string json_escape(const std::string& s);

// Parses the complex grammar "a+bi" with optional parts: "2", "3i",
// "1-0.5i", "-1.5e-3+2i", "i", "-i".  Throws std::invalid_argument on
// anything else.
Complex parse_complex(const std::string& text);

} // namespace regdet::textio
