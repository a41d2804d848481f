#include "qiso/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace qiso {

Integer floor(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer quot = num / den;
  if (num < 0 && quot * den != num) --quot;
  return quot;
}

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    return Integer(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t common_denominator(const QVector& v) {
  std::int64_t d = 1;
  for (const auto& q : v) d = std::lcm(d, to_int64(denominator(q)));
  return d;
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer " + z.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(z);
}

}  // namespace qiso
