#pragma once

// Geocentric ecliptic and equatorial coordinates.
//
// Both frames share the x axis, which points at the vernal equinox. The
// equatorial frame is the ecliptic frame rotated about that axis by the
// obliquity phi:
//
//   equatorial = R * ecliptic,   R = [1 0 0; 0 cos(phi) -sin(phi); 0 sin(phi) cos(phi)]
//
// and the inverse is R^T = [1 0 0; 0 cos(phi) sin(phi); 0 -sin(phi) cos(phi)].
// With this orientation the summer solstice (longitude 90) lies at
// declination +phi and the north ecliptic pole at RA 18h.

#include <array>
#include <string>
#include <string_view>

namespace conjunct {

struct EclipticCoord {
  double longitude = 0.0;  // degrees, [0, 360)
  double latitude = 0.0;   // degrees, [-90, 90]
  bool polar = false;      // longitude undefined at |latitude| = 90; reported as 0
};

struct EquatorialCoord {
  double right_ascension = 0.0;  // hours, [0, 24)
  double declination = 0.0;      // degrees, [-90, 90]
  bool polar = false;            // RA undefined at |declination| = 90; reported as 0
};

class Obliquity {
 public:
  static constexpr double kDefaultDegrees = 23.4;

  Obliquity() = default;
  /// Throws DomainError unless 0 <= degrees < 90.
  explicit Obliquity(double degrees);

  double degrees() const { return degrees_; }

 private:
  double degrees_ = kDefaultDegrees;
};

using Vec3 = std::array<double, 3>;

class Rotation3 {
 public:
  using Rows = std::array<std::array<double, 3>, 3>;

  Rotation3() = default;
  explicit Rotation3(const Rows& rows) : m_(rows) {}

  double operator()(std::size_t row, std::size_t col) const { return m_[row][col]; }
  const Rows& rows() const { return m_; }

  Vec3 apply(const Vec3& v) const;
  Rotation3 transpose() const;
  Rotation3 operator*(const Rotation3& rhs) const;
  double determinant() const;
  /// max |(M^T M - I)_ij| <= tol
  bool is_orthogonal(double tol) const;

 private:
  Rows m_{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
};

/// The rotation taking ecliptic components to equatorial components.
Rotation3 ecl_to_eq_matrix(Obliquity obliquity);
/// The inverse: [1 0 0; 0 cos sin; 0 -sin cos].
Rotation3 eq_to_ecl_matrix(Obliquity obliquity);

/// Unit vector for (longitude, latitude) in degrees, and back. At the poles
/// the returned longitude is 0 and `polar` is set.
Vec3 spherical_to_unit(double lon_deg, double lat_deg);

EquatorialCoord ecl_to_eq(const EclipticCoord& c, Obliquity obliquity = {});
EclipticCoord eq_to_ecl(const EquatorialCoord& c, Obliquity obliquity = {});

enum class SexagesimalKind { hours, degrees };

/// "20h 10m 58s" (hours) or "300° 26′ 17″" (degrees). ASCII fallbacks d ' "
/// are accepted for degrees. Minutes or seconds >= 60 raise ParseError.
double parse_sexagesimal(std::string_view text, SexagesimalKind kind);

/// Rounded to the nearest whole second, formatted with the glyphs above and
/// single spaces, no zero padding.
std::string format_sexagesimal(double value, SexagesimalKind kind);

/// Same ecliptic longitude within `tol_deg` degrees (circular distance).
bool is_ecliptic_conjunction(const EclipticCoord& a, const EclipticCoord& b, double tol_deg);
/// Same right ascension within `tol_hours` hours (circular distance).
bool is_equatorial_conjunction(const EquatorialCoord& a, const EquatorialCoord& b,
                               double tol_hours);

}  // namespace conjunct
