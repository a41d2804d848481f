#pragma once

#include "qiso/classify.hpp"
#include "qiso/weyl_oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qiso {

struct VerifyOptions {
  std::optional<int> max_den;                 // default: 2 * lcm of the predicted orders
  std::uint64_t weyl_cap = default_weyl_cap;
  std::uint64_t point_cap = 2'000'000;
};

struct VerifyReport {
  bool pass = false;
  int max_den = 0;
  std::size_t weyl_order = 0;
  std::uint64_t points = 0;
  std::uint64_t quasi_isolated_points = 0;
  std::size_t classes = 0;
  std::size_t oracle_orbits = 0;
  std::vector<std::string> lines;       // one per class, in classification order
  std::vector<std::string> mismatches;  // empty iff pass
};

/// Grid denominator that contains every lambda_Omega of the classification.
int default_max_den(const Classification& c);

/// Runs the classifier and the brute-force oracle and compares them orbit by orbit.
VerifyReport verify(const CocharLattice& L, int p, const VerifyOptions& options = {});

}  // namespace qiso
