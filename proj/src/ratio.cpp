#include "conjunct/ratio.hpp"

#include <cctype>
#include <ostream>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace conjunct {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

// Digits only. cpp_int would read a leading 0 as an octal prefix, so strip it.
BigInt from_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt{std::string(digits.substr(first))};
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  BigInt value = from_digits(s);
  return negative ? BigInt(-value) : value;
}

BigInt abs_big(const BigInt& v) { return v.sign() < 0 ? BigInt(-v) : v; }

BigInt pow10(std::size_t n) {
  BigInt p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

Ratio::Ratio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Ratio::normalize() {
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(abs_big(num_), den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Ratio Ratio::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  auto fail = [&]() -> ParseError {
    return ParseError("malformed rational literal '" + std::string(text) + "'");
  };
  if (s.empty()) throw fail();

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view n = s.substr(0, slash);
    std::string_view d = s.substr(slash + 1);
    if (!is_integer_literal(n) || !is_integer_literal(d)) throw fail();
    return Ratio(parse_integer(n), parse_integer(d));
  }

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view whole = s;
  std::string_view frac;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    whole = s.substr(0, dot);
    frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if (!whole.empty() && !all_digits(whole)) throw fail();
    if (!frac.empty() && !all_digits(frac)) throw fail();
  } else if (!all_digits(whole)) {
    throw fail();
  }

  Ratio r(from_digits(std::string(whole) + std::string(frac)), pow10(frac.size()));
  return negative ? -r : r;
}

double Ratio::to_double() const {
  using boost::multiprecision::cpp_bin_float_100;
  cpp_bin_float_100 q = cpp_bin_float_100(num_) / cpp_bin_float_100(den_);
  return q.convert_to<double>();
}

std::string Ratio::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Ratio Ratio::operator-() const {
  Ratio r = *this;
  r.num_ = -r.num_;
  return r;
}

Ratio& Ratio::operator+=(const Ratio& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Ratio& Ratio::operator-=(const Ratio& rhs) { return *this += -rhs; }

Ratio& Ratio::operator*=(const Ratio& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Ratio& Ratio::operator/=(const Ratio& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  BigInt n = num_ * rhs.den_;
  BigInt d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

BigInt floor(const Ratio& r) {
  BigInt q = r.num() / r.den();  // truncates toward zero
  if (r.sign() < 0 && q * r.den() != r.num()) q -= 1;
  return q;
}

Ratio floor_mod(const Ratio& r, const Ratio& modulus) {
  if (modulus.sign() <= 0) throw DomainError("modulus must be positive");
  return r - Ratio(floor(r / modulus)) * modulus;
}

BigInt gcd_int(const BigInt& a, const BigInt& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("gcd requires positive integers");
  return boost::multiprecision::gcd(a, b);
}

BigInt lcm_int(const BigInt& a, const BigInt& b) {
  if (a.sign() <= 0 || b.sign() <= 0) throw DomainError("lcm requires positive integers");
  return a / boost::multiprecision::gcd(a, b) * b;
}

Ratio lcm_ratio(const Ratio& p, const Ratio& q) {
  if (p.sign() <= 0 || q.sign() <= 0) throw DomainError("lcm requires positive rationals");
  // Ratio is always canonical, so num/den are already in lowest terms here.
  return Ratio(lcm_int(p.num(), q.num()), gcd_int(p.den(), q.den()));
}

}  // namespace conjunct
