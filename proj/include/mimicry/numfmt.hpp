#pragma once

#include <string>

namespace mimicry {

// Shortest decimal text that parses back to exactly `value`. Always uses `.`
// as the decimal separator regardless of the global locale.
std::string format_double(double value);

// Fixed-point text with `decimals` digits after the point, locale-independent.
std::string format_fixed(double value, int decimals);

// Locale-independent parse of a full string as a double. Returns false on any
// trailing garbage.
bool parse_double(const std::string& text, double& out);

}  // namespace mimicry
