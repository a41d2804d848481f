#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qiso {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using QVector = std::vector<Rational>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Largest integer not exceeding q.
Integer floor(const Rational& q);

/// Serializes as "num/den" (den is always printed, "0/1" for zero).
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// lcm of the denominators of every entry; 1 for an empty vector.
std::int64_t common_denominator(const QVector& v);

std::int64_t to_int64(const Integer& z);

}  // namespace qiso
