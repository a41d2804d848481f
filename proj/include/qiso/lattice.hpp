#pragma once

#include "qiso/affine.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qiso {

/// An intermediate lattice Y(T_sc) <= Y(T) <= Y(T_ad), stored as the
/// subgroup S of the automorphism group with varpi(S) = Y(T)/Y(T_sc).
class CocharLattice {
 public:
  CocharLattice(std::shared_ptr<const AffineDiagram> diagram, std::vector<std::size_t> subgroup, std::string spec);

  const AffineDiagram& diagram() const { return *diagram_; }
  const std::shared_ptr<const AffineDiagram>& diagram_ptr() const { return diagram_; }
  /// Sorted indices into diagram().automorphisms(); always contains 0.
  const std::vector<std::size_t>& subgroup() const { return subgroup_; }
  bool contains(std::size_t z) const;
  std::size_t size() const { return subgroup_.size(); }
  /// The spec string this lattice was built from ("sc", "ad", "z1,zn", ...).
  const std::string& spec() const { return spec_; }

 private:
  std::shared_ptr<const AffineDiagram> diagram_;
  std::vector<std::size_t> subgroup_;
  std::vector<bool> member_;
  std::string spec_;
};

/// "sc", "ad", or comma separated generators such as "z1,zn", "z1[1],z2[2]" or the product "z1[1]*z1[2]".
/// Throws std::invalid_argument for an unknown generator.
CocharLattice make_lattice(std::shared_ptr<const AffineDiagram> d, std::string_view spec);

/// Index of the automorphism z with v - varpi(z) in Y(T_sc), or nullopt when v is not in Y(T_ad).
std::optional<std::size_t> coset_of(const AffineDiagram& d, const Coweight& v);

bool lattice_member(const Coweight& v, const CocharLattice& L);

enum class OrderKind { simply_connected, group, adjoint };

/// Smallest k >= 1 with k*v in Y(T_sc), Y(T) or Y(T_ad).
std::int64_t order_mod(const Coweight& v, const CocharLattice& L, OrderKind kind = OrderKind::group);
std::int64_t order_mod(const Coweight& v, const AffineDiagram& d, OrderKind kind);

/// Throws std::invalid_argument unless p is 0 or a prime.
void check_characteristic(int p);

std::vector<int> prime_factors(std::int64_t n);

/// Nodes alpha whose vertex varpi_alpha / n_alpha has simply connected order prime to p.
std::vector<int> p_prime_nodes(const AffineDiagram& d, int p);

/// Elements of S whose order is prime to p (S itself for p = 0).
std::vector<std::size_t> p_prime_part(const AutomorphismGroup& a, const std::vector<std::size_t>& S, int p);

/// p divides no mark of the affine diagram and not |A_G|.
bool is_almost_very_good(const CocharLattice& L, int p);

}  // namespace qiso
