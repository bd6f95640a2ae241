#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
//
// Every Ratio is kept in canonical form: positive denominator, numerator and
// denominator coprime, zero stored as 0/1. All orbital periods and derived
// exact results (synodic periods, alignment periods, exact angles) are Ratios.

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace conjunct {

using BigInt = boost::multiprecision::cpp_int;

/// Raised for arithmetic on values outside an operation's domain
/// (zero denominators, degenerate body pairs, non-positive lcm operands).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for malformed textual input; the message names the offending token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Ratio {
 public:
  Ratio() = default;
  Ratio(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Ratio(BigInt value) : num_(std::move(value)) {}

  /// Builds num/den in lowest terms. Throws DomainError("zero denominator").
  Ratio(BigInt num, BigInt den);

  static Ratio make(BigInt num, BigInt den) { return Ratio(std::move(num), std::move(den)); }

  /// Accepts "a/b", an integer, or a decimal literal such as "29.46" or "-0.5".
  /// Decimal literals are converted exactly (29.46 -> 1473/50).
  static Ratio parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  double to_double() const;

  /// "num/den", or the plain integer when den = 1.
  std::string str() const;

  Ratio operator-() const;
  Ratio& operator+=(const Ratio& rhs);
  Ratio& operator-=(const Ratio& rhs);
  Ratio& operator*=(const Ratio& rhs);
  Ratio& operator/=(const Ratio& rhs);

  friend Ratio operator+(Ratio lhs, const Ratio& rhs) { return lhs += rhs; }
  friend Ratio operator-(Ratio lhs, const Ratio& rhs) { return lhs -= rhs; }
  friend Ratio operator*(Ratio lhs, const Ratio& rhs) { return lhs *= rhs; }
  friend Ratio operator/(Ratio lhs, const Ratio& rhs) { return lhs /= rhs; }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

/// Largest integer <= r.
BigInt floor(const Ratio& r);

/// r reduced into [0, modulus). modulus must be positive.
Ratio floor_mod(const Ratio& r, const Ratio& modulus);

/// Greatest common divisor / least common multiple of positive integers.
/// Zero or negative operands raise DomainError.
BigInt gcd_int(const BigInt& a, const BigInt& b);
BigInt lcm_int(const BigInt& a, const BigInt& b);

/// Least positive rational r such that r/p and r/q are both integers:
///   lcm(a/b, c/d) = lcm(a, c) / gcd(b, d)   with a/b, c/d in lowest terms.
Ratio lcm_ratio(const Ratio& p, const Ratio& q);

}  // namespace conjunct
