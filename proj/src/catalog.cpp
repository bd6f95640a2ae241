#include "conjunct/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace conjunct {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Body years(std::string name, std::string_view period) {
  return Body::make(std::move(name), Ratio::parse(period), TimeUnit::years);
}

Body hours(std::string name, std::string_view period) {
  return Body::make(std::move(name), Ratio::parse(period), TimeUnit::hours);
}

}  // namespace

std::optional<Body> Catalog::find(std::string_view body_name) const {
  const std::string key = lower(body_name);
  for (const auto& b : bodies) {
    if (lower(b.name) == key) return b;
  }
  return std::nullopt;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& b : bodies) out.push_back(b.name);
  return out;
}

const std::vector<Catalog>& builtin_catalogs() {
  static const std::vector<Catalog> catalogs = {
      {"clock", {hours("second", "1/60"), hours("minute", "1"), hours("hour", "12")}},
      {"coarse", {years("earth", "1"), years("mars", "1.8"), years("jupiter", "12"), years("saturn", "30")}},
      {"refined", {years("earth", "1"), years("jupiter", "11.86"), years("saturn", "29.46")}},
      {"alt", {years("earth", "1"), years("mars", "1.8"), years("jupiter", "11.8"), years("saturn", "29.5")}},
  };
  return catalogs;
}

const Catalog& builtin_catalog(std::string_view name) {
  const std::string key = lower(name);
  std::string available;
  for (const auto& c : builtin_catalogs()) {
    if (c.name == key) return c;
    available += (available.empty() ? "" : ", ") + c.name;
  }
  throw ParseError("unknown catalog '" + std::string(name) + "' (available: " + available + ")");
}

std::vector<Body> read_body_file(std::istream& in) {
  std::vector<Body> bodies;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::istringstream fields(line);
    std::string name, period, units, extra;
    if (!(fields >> name) || name.front() == '#') continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!(fields >> period >> units) || (fields >> extra)) {
      throw ParseError(where + "expected 'name period units', got '" + line + "'");
    }
    try {
      bodies.push_back(Body::make(name, Ratio::parse(period), parse_time_unit(units)));
    } catch (const std::exception& e) {
      throw ParseError(where + e.what());
    }
  }
  return bodies;
}

}  // namespace conjunct
