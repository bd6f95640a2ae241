#include "conjunct/svg.hpp"

#include <array>
#include <sstream>

#include "conjunct/text.hpp"

namespace conjunct {

namespace {

constexpr double kSize = 800.0;
constexpr double kCenter = kSize / 2.0;
constexpr double kDrawRadius = 320.0;

// Solid, dashed, dotted.
constexpr std::array<const char*, 3> kFamilyDash = {"none", "12 6", "2 5"};

struct Canvas {
  double x;
  double y;
};

Canvas to_canvas(const PlanePoint& p, double radius) {
  // SVG y grows downward.
  return {kCenter + kDrawRadius * p.x / radius, kCenter - kDrawRadius * p.y / radius};
}

}  // namespace

std::string render_trigon_svg(const SeriesParams& params, std::size_t count) {
  const auto events = generate_series(params, count);
  const auto points = trigon_points(params, count);
  const Families families = classify_families(events);

  std::ostringstream svg;
  svg << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n'
      << R"(<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">)"
      << '\n'
      << R"(  <rect width="800" height="800" fill="white"/>)" << '\n'
      << R"(  <circle cx="400" cy="400" r=")" << fixed(kDrawRadius, 0)
      << R"(" fill="none" stroke="black" stroke-width="1"/>)" << '\n'
      << R"(  <line x1="400" y1="400" x2="760" y2="400" stroke="black" stroke-width="0.5"/>)" << '\n';

  for (std::size_t f = 0; f < families.members.size(); ++f) {
    const auto& members = families.members[f];
    if (members.size() < 2) continue;
    svg << R"(  <polygon class="family-)" << f << R"(" fill="none" stroke="black" stroke-width="2")";
    if (std::string_view(kFamilyDash[f]) != "none") svg << R"( stroke-dasharray=")" << kFamilyDash[f] << '"';
    svg << R"( points=")";
    for (std::size_t m = 0; m < members.size(); ++m) {
      const Canvas c = to_canvas(points[members[m].index], params.radius);
      svg << (m ? " " : "") << fixed(c.x) << ',' << fixed(c.y);
    }
    svg << R"("/>)" << '\n';
  }

  for (std::size_t n = 0; n < points.size(); ++n) {
    const Canvas c = to_canvas(points[n], params.radius);
    // Labels sit just outside the circle along the same ray.
    const double lx = kCenter + (c.x - kCenter) * 1.09;
    const double ly = kCenter + (c.y - kCenter) * 1.09;
    svg << R"(  <circle id="C_)" << n << R"(" cx=")" << fixed(c.x) << R"(" cy=")" << fixed(c.y)
        << R"(" r="5" fill="black"/>)" << '\n'
        << R"(  <text x=")" << fixed(lx) << R"(" y=")" << fixed(ly)
        << R"(" font-family="serif" font-size="16" text-anchor="middle" dominant-baseline="middle">C_)"
        << n << "</text>\n";
  }

  svg << R"(  <text x="20" y="780" font-family="serif" font-size="14">synodic )" << fixed(params.synodic)
      << " y, advance " << fixed(params.advance) << " deg; families: solid n=0, dashed n=1, dotted n=2 (mod 3)</text>\n"
      << "</svg>\n";
  return svg.str();
}

}  // namespace conjunct
