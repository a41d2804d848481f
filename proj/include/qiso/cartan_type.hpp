#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qiso {

/// Raised for an illegal (family, rank) pair or a malformed type string.
class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

bool is_legal(SimpleType t);
std::string to_string(SimpleType t);
std::uint64_t weyl_group_order(SimpleType t);

/// Maps low-rank coincidences to one name: B1, C1 -> A1; C2 -> B2; D3 -> A3.
SimpleType canonical(SimpleType t);

/// Normalizes a list that may contain degenerate entries produced by
/// parametric formulas (A0, B0, C0, D0, D1 vanish; D2 -> A1 x A1), then
/// canonicalizes and sorts.
std::vector<SimpleType> normalize_components(std::vector<SimpleType> parts);

/// Sort order used everywhere for display: family ascending, rank descending.
void sort_components(std::vector<SimpleType>& parts);

/// "1" for the empty list, otherwise e.g. "A2xA2xA2".
std::string format_components(const std::vector<SimpleType>& parts);

std::uint64_t weyl_group_order(const std::vector<SimpleType>& parts);

/// Ordered list of irreducible components. Never empty.
class CartanType {
 public:
  explicit CartanType(std::vector<SimpleType> components);
  CartanType(Family family, int rank) : CartanType(std::vector<SimpleType>{{family, rank}}) {}

  /// Parses "E6", "A1xB2", "A1*A1", or a bare family letter combined with `rank`.
  static CartanType parse(std::string_view text);
  static CartanType parse(std::string_view family, int rank);

  const std::vector<SimpleType>& components() const { return components_; }
  int num_components() const { return static_cast<int>(components_.size()); }
  int rank() const;
  bool is_simple() const { return components_.size() == 1; }
  std::uint64_t weyl_order() const { return weyl_group_order(components_); }
  std::string to_string() const { return format_components(components_); }

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  std::vector<SimpleType> components_;
};

}  // namespace qiso
