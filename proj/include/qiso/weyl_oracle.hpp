#pragma once

#include "qiso/lattice.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qiso {

inline constexpr std::uint64_t default_weyl_cap = 5'000'000;

/// The finite Weyl group, enumerated breadth-first from the simple reflections.
/// Each element is stored by the images of the simple roots only; the full
/// root permutation is rebuilt on demand.
class WeylGroup {
 public:
  /// Throws std::length_error when |W| exceeds `cap`.
  explicit WeylGroup(RootSystem rs, std::uint64_t cap = default_weyl_cap);

  const RootSystem& root_system() const { return rs_; }
  std::size_t size() const { return count_; }
  std::span<const std::uint16_t> images(std::size_t k) const {
    return {images_.data() + k * rank_, rank_};
  }
  WeylElement element(std::size_t k) const;
  /// Index of the element with these simple-root images, or nullopt.
  std::optional<std::size_t> find(std::span<const std::uint16_t> images) const;
  /// Index of w, or nullopt if w has the wrong size.
  std::optional<std::size_t> index_of(const WeylElement& w) const;
  /// Matrix of element k on V in the simple-coroot basis.
  IntMatrix matrix(std::size_t k) const;

 private:
  std::size_t insert(std::span<const std::uint16_t> images);
  std::uint64_t hash(std::span<const std::uint16_t> images) const;
  void rehash();

  RootSystem rs_;
  std::size_t rank_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint16_t> images_;
  std::vector<std::uint32_t> slots_;  // 0 = empty, otherwise index + 1
};

WeylGroup enumerate_weyl(const RootSystem& rs, std::uint64_t cap = default_weyl_cap);

/// Roots with integral pairing against lambda.
std::vector<int> phi_of(const RootSystem& rs, const Coweight& lambda);

/// Type of a closed root subsystem, identified per irreducible component by its rank, number of
/// roots and numbers of long and short roots (components are the classes of the relation
/// "not orthogonal"). Canonical and sorted as for Dynkin subdiagrams.
std::vector<SimpleType> subsystem_type(const RootSystem& rs, const std::vector<int>& roots);

/// {w in W : w(lambda) - lambda in Y(T)}, as indices into W.
std::vector<std::size_t> stabilizer_W(const WeylGroup& W, const Coweight& lambda, const CocharLattice& L);

/// Dimension of the common fixed space of the given matrices (dim V if none).
int fixed_dim(const std::vector<IntMatrix>& generators, std::size_t dim);
int fixed_dim(const RootSystem& rs, const std::vector<WeylElement>& generators);

struct Decomposition {
  std::vector<std::size_t> reflection_part;  // W°(lambda)
  std::vector<std::size_t> complement;       // A_G(lambda), elements preserving the positive system on I_lambda
  bool semidirect = false;                   // |W_G| = |A||W°|, A ∩ W° = 1, W° is the kernel to Y(T)/Y(T_sc)
};

/// Splits the stabilizer of lambda (which must lie in the alcove; throws std::invalid_argument otherwise).
Decomposition decompose(const WeylGroup& W, const std::vector<std::size_t>& stabilizer, const Coweight& lambda,
                        const AffineDiagram& d);

struct QuasiIsolation {
  bool quasi_isolated = false;
  bool isolated = false;
};

/// Quasi-isolated iff W_G(lambda) fixes no nonzero vector; isolated iff the reflections in Phi(lambda) fix none.
QuasiIsolation is_quasi_isolated_bruteforce(const WeylGroup& W, const Coweight& lambda, const CocharLattice& L);

/// Brute force: some w in W with w(lambda) - mu in Y(T).
bool conjugate_bruteforce(const WeylGroup& W, const CocharLattice& L, const Coweight& lambda, const Coweight& mu);
/// For lambda, mu in the alcove: some z in A_G with z(lambda) - mu in Y(T).
bool conjugate_by_automorphisms(const CocharLattice& L, const Coweight& lambda, const Coweight& mu);

struct OraclePoint {
  AffineCoordinates coords;
  Coweight lambda;
  std::int64_t order = 0;            // smallest k with k*lambda in Y(T)
  std::size_t reflection_order = 0;  // |W°(lambda)|
  std::size_t component_order = 0;   // |A_G(lambda)|
  std::vector<SimpleType> centralizer;  // type of Phi(lambda)
  bool isolated = false;
};

struct SearchResult {
  std::vector<OraclePoint> orbits;
  std::uint64_t points = 0;               // grid points examined
  std::uint64_t quasi_isolated_points = 0;
  std::vector<std::string> problems;      // failed internal checks, empty when all hold
};

/// Number of alcove points whose affine coordinates have denominator dividing max_den.
std::uint64_t grid_size(const AffineDiagram& d, int max_den);

/// All quasi-isolated lambda in the alcove with affine coordinates in (1/max_den)Z and
/// o_sc(lambda) prime to p, merged into W ⋉ Y(T)-orbits. Throws std::length_error when
/// the grid has more than point_cap points.
SearchResult exhaustive_search(const WeylGroup& W, const CocharLattice& L, int p, int max_den,
                               std::uint64_t point_cap = 2'000'000);

}  // namespace qiso
