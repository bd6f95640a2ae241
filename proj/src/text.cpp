#include "conjunct/text.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace conjunct {

std::string fixed(double value, int precision) {
  std::array<char, 512> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, precision);
  std::string out(buf.data(), ec == std::errc{} ? end : buf.data());
  if (!out.empty() && out.front() == '-' &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::string shortest(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ec == std::errc{} ? end : buf.data());
}

}  // namespace conjunct
