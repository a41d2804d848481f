#pragma once

#include "qiso/classify.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace test {

inline std::shared_ptr<const qiso::AffineDiagram> diagram(const std::string& type) {
  return std::make_shared<const qiso::AffineDiagram>(qiso::build_root_system(qiso::CartanType::parse(type)));
}

inline qiso::CocharLattice lattice(const std::string& type, const std::string& spec) {
  return qiso::make_lattice(diagram(type), spec);
}

inline qiso::Coweight coweight(std::vector<qiso::Rational> v) { return qiso::Coweight(std::move(v)); }

/// Random coweight with small numerators and denominators.
inline qiso::Coweight random_coweight(std::mt19937& rng, int rank, int den = 12) {
  std::uniform_int_distribution<int> num(-2 * den, 2 * den), d(1, den);
  qiso::QVector v;
  for (int i = 0; i < rank; ++i) v.emplace_back(num(rng), d(rng));
  return qiso::Coweight(v);
}

/// Random Weyl element as a word in the simple reflections.
inline qiso::WeylElement random_weyl(std::mt19937& rng, const qiso::RootSystem& rs, int length = 20) {
  std::uniform_int_distribution<int> pick(0, rs.rank() - 1);
  auto w = qiso::WeylElement::identity(static_cast<std::size_t>(rs.num_roots()));
  for (int k = 0; k < length; ++k) w = rs.simple_reflection(pick(rng)) * w;
  return w;
}

inline const std::vector<std::string>& simple_types_up_to_8() {
  static const std::vector<std::string> types = {
      "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "C2", "C3",
      "C4", "C5", "C6", "C7", "C8", "D3", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2"};
  return types;
}

}  // namespace test
