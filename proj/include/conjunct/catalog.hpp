#pragma once

// Built-in period sets and the body definition file format.
//
//   clock    second 1/60 h, minute 1 h, hour 12 h
//   coarse   earth 1 y, mars 9/5 y, jupiter 12 y, saturn 30 y
//   refined  earth 1 y, jupiter 11.86 y, saturn 29.46 y
//   alt      earth 1 y, mars 1.8 y, jupiter 11.8 y, saturn 29.5 y
//
// Mars is listed at 1.8 y (labelled coarse); the sidereal value is about 1.88 y.

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conjunct/kinematics.hpp"

namespace conjunct {

struct Catalog {
  std::string name;
  std::vector<Body> bodies;

  /// Case-insensitive lookup.
  std::optional<Body> find(std::string_view body_name) const;
  std::vector<std::string> names() const;
};

const std::vector<Catalog>& builtin_catalogs();
/// Throws ParseError listing the available catalog names.
const Catalog& builtin_catalog(std::string_view name);

/// One body per line: `name period units`. Blank lines and lines starting
/// with '#' are skipped. Errors report the 1-based line number.
std::vector<Body> read_body_file(std::istream& in);

}  // namespace conjunct
