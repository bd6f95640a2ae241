#include "conjunct/coords.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "conjunct/angles.hpp"
#include "conjunct/ratio.hpp"

namespace conjunct {

namespace {

constexpr double kPolarEpsilon = 1e-12;

constexpr std::string_view kDegreeGlyph = "°";
constexpr std::string_view kMinuteGlyph = "′";
constexpr std::string_view kSecondGlyph = "″";

struct Spherical {
  double lon_deg;
  double lat_deg;
  bool polar;
};

Spherical unit_to_spherical(const Vec3& v) {
  const double rho = std::hypot(v[0], v[1]);
  const double lat = to_degrees(std::atan2(v[2], rho));
  if (rho < kPolarEpsilon) return {0.0, lat > 0 ? 90.0 : -90.0, true};
  return {wrap_degrees(to_degrees(std::atan2(v[1], v[0]))), lat, false};
}

void check_latitude(double lat, const char* what) {
  if (!(lat >= -90.0 && lat <= 90.0)) {
    throw DomainError(std::string(what) + " must lie in [-90, 90]");
  }
}

}  // namespace

Obliquity::Obliquity(double degrees) : degrees_(degrees) {
  if (!(degrees >= 0.0 && degrees < 90.0)) throw DomainError("obliquity must lie in [0, 90)");
}

Vec3 Rotation3::apply(const Vec3& v) const {
  Vec3 out{};
  for (std::size_t r = 0; r < 3; ++r) {
    out[r] = m_[r][0] * v[0] + m_[r][1] * v[1] + m_[r][2] * v[2];
  }
  return out;
}

Rotation3 Rotation3::transpose() const {
  Rows t{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) t[r][c] = m_[c][r];
  }
  return Rotation3(t);
}

Rotation3 Rotation3::operator*(const Rotation3& rhs) const {
  Rows p{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t k = 0; k < 3; ++k) p[r][c] += m_[r][k] * rhs.m_[k][c];
    }
  }
  return Rotation3(p);
}

double Rotation3::determinant() const {
  const auto& m = m_;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool Rotation3::is_orthogonal(double tol) const {
  const Rotation3 g = transpose() * *this;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const double expected = r == c ? 1.0 : 0.0;
      if (std::abs(g(r, c) - expected) > tol) return false;
    }
  }
  return true;
}

Rotation3 eq_to_ecl_matrix(Obliquity obliquity) {
  const double phi = to_radians(obliquity.degrees());
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return Rotation3({{{1.0, 0.0, 0.0}, {0.0, c, s}, {0.0, -s, c}}});
}

Rotation3 ecl_to_eq_matrix(Obliquity obliquity) { return eq_to_ecl_matrix(obliquity).transpose(); }

Vec3 spherical_to_unit(double lon_deg, double lat_deg) {
  const double lon = to_radians(lon_deg);
  const double lat = to_radians(lat_deg);
  return {std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)};
}

EquatorialCoord ecl_to_eq(const EclipticCoord& c, Obliquity obliquity) {
  check_latitude(c.latitude, "ecliptic latitude");
  const Spherical s =
      unit_to_spherical(ecl_to_eq_matrix(obliquity).apply(spherical_to_unit(c.longitude, c.latitude)));
  double ra_hours = s.lon_deg / 15.0;
  if (ra_hours >= 24.0) ra_hours = 0.0;
  return {ra_hours, s.lat_deg, s.polar};
}

EclipticCoord eq_to_ecl(const EquatorialCoord& c, Obliquity obliquity) {
  check_latitude(c.declination, "declination");
  const Spherical s = unit_to_spherical(
      eq_to_ecl_matrix(obliquity).apply(spherical_to_unit(c.right_ascension * 15.0, c.declination)));
  return {s.lon_deg, s.lat_deg, s.polar};
}

double parse_sexagesimal(std::string_view text, SexagesimalKind kind) {
  auto fail = [&](std::string_view why) {
    return ParseError("malformed sexagesimal '" + std::string(text) + "': " + std::string(why));
  };

  const std::vector<std::vector<std::string_view>> units =
      kind == SexagesimalKind::hours
          ? std::vector<std::vector<std::string_view>>{{"h"}, {"m"}, {"s"}}
          : std::vector<std::vector<std::string_view>>{
                {kDegreeGlyph, "d"}, {kMinuteGlyph, "'", "m"}, {kSecondGlyph, "\"", "''", "s"}};

  std::string_view s = text;
  auto skip_space = [&] {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  };

  skip_space();
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  std::array<double, 3> parts{0.0, 0.0, 0.0};
  std::size_t field = 0;
  while (true) {
    skip_space();
    if (s.empty()) break;
    if (field == 3) throw fail("trailing text");
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, std::chars_format::fixed);
    if (ec != std::errc{} || ptr == s.data() || !(value >= 0.0)) throw fail("expected a number");
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));

    // Fields must appear in order; omitted fields count as zero.
    bool matched = false;
    for (std::size_t f = field; f < 3 && !matched; ++f) {
      // Longest glyph first so "''" wins over "'".
      std::vector<std::string_view> glyphs = units[f];
      std::sort(glyphs.begin(), glyphs.end(),
                [](std::string_view a, std::string_view b) { return a.size() > b.size(); });
      for (auto g : glyphs) {
        if (s.substr(0, g.size()) == g) {
          if (g == "'" && s.substr(0, 2) == "''") continue;  // seconds marker
          parts[f] = value;
          field = f + 1;
          s.remove_prefix(g.size());
          matched = true;
          break;
        }
      }
    }
    if (!matched) throw fail("missing or out-of-order unit marker");
  }
  if (field == 0) throw fail("empty");
  if (parts[1] >= 60.0) throw fail("minutes must be < 60");
  if (parts[2] >= 60.0) throw fail("seconds must be < 60");

  const double value = parts[0] + parts[1] / 60.0 + parts[2] / 3600.0;
  return negative ? -value : value;
}

std::string format_sexagesimal(double value, SexagesimalKind kind) {
  const long long total = std::llround(std::abs(value) * 3600.0);
  const long long whole = total / 3600;
  const long long minutes = (total % 3600) / 60;
  const long long seconds = total % 60;
  std::string out = value < 0 && total != 0 ? "-" : "";
  if (kind == SexagesimalKind::hours) {
    out += std::to_string(whole) + "h " + std::to_string(minutes) + "m " + std::to_string(seconds) + "s";
  } else {
    out += std::to_string(whole) + std::string(kDegreeGlyph) + " " + std::to_string(minutes) +
           std::string(kMinuteGlyph) + " " + std::to_string(seconds) + std::string(kSecondGlyph);
  }
  return out;
}

bool is_ecliptic_conjunction(const EclipticCoord& a, const EclipticCoord& b, double tol_deg) {
  if (tol_deg < 0.0) throw DomainError("tolerance must be non-negative");
  return circular_distance(a.longitude, b.longitude) <= tol_deg;
}

bool is_equatorial_conjunction(const EquatorialCoord& a, const EquatorialCoord& b,
                               double tol_hours) {
  if (tol_hours < 0.0) throw DomainError("tolerance must be non-negative");
  return circular_distance(a.right_ascension * 15.0, b.right_ascension * 15.0) <= tol_hours * 15.0;
}

}  // namespace conjunct
