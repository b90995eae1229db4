#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "pcf/errors.hpp"

namespace pcf {

/// Exact charge / density / threshold arithmetic. Always in lowest terms.
using rational = boost::rational<std::int64_t>;

/// "p/q" (q is always printed, also for integers).
inline std::string to_string(const rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Accepts "p/q" or a bare integer "p".
inline rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      auto num = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return rational(num);
    }
    auto num_text = s.substr(0, slash);
    auto den_text = s.substr(slash + 1);
    auto num = std::stoll(num_text, &used);
    if (used != num_text.size()) throw std::invalid_argument(s);
    auto den = std::stoll(den_text, &used);
    if (used != den_text.size() || den == 0) throw std::invalid_argument(s);
    return rational(num, den);
  } catch (const std::logic_error&) {
    throw error(errc::parse, "malformed rational '" + s + "'");
  }
}

/// mad(K*_{c+1}) = 4c/(c+2), the sparse threshold for c >= 5.
inline rational kstar_threshold(int colors) { return rational(4 * colors, colors + 2); }

/// Strict mad bound for four colors.
inline rational four_color_threshold() { return rational(12, 5); }

}  // namespace pcf
