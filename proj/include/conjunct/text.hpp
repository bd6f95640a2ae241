#pragma once

// Locale-independent number formatting shared by the CLI and file writers.

#include <string>

namespace conjunct {

/// Fixed-point with `precision` digits after '.', never locale-dependent.
/// Negative zero is printed without a sign.
std::string fixed(double value, int precision = 2);

/// Shortest round-trip representation of `value`.
std::string shortest(double value);

}  // namespace conjunct
