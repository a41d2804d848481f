#pragma once

#include "qiso/lattice.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qiso {

/// A subset of the affine diagram's nodes, kept sorted.
struct OmegaSet {
  std::vector<int> nodes;

  OmegaSet() = default;
  explicit OmegaSet(std::vector<int> ids);
  std::size_t size() const { return nodes.size(); }
  bool contains(int id) const;
  friend auto operator<=>(const OmegaSet&, const OmegaSet&) = default;
};

/// Invariant factors of a finite abelian group, d_1 | d_2 | ... (empty when trivial).
struct GroupStructure {
  std::size_t order = 1;
  std::vector<int> invariants;
  int exponent = 1;

  /// "1", "Z3", "Z2xZ2", ...
  std::string to_string() const;
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

struct QuasiIsolatedClass {
  OmegaSet omega;
  Coweight lambda;
  std::int64_t order = 1;
  std::vector<SimpleType> centralizer;         // type of the connected centralizer
  std::vector<std::size_t> component_group;    // stabilizer of omega in A_G
  GroupStructure component_structure;
  bool isolated = false;
  std::vector<int> excluded_primes;            // the class does not exist in these characteristics
};

struct Classification {
  CocharLattice lattice;
  int characteristic = 0;
  std::vector<QuasiIsolatedClass> classes;
};

/// Image of omega under a diagram automorphism.
OmegaSet apply(const DiagramAutomorphism& z, const OmegaSet& omega);

/// Elements of `group` (indices into the automorphism group) fixing omega as a set.
std::vector<std::size_t> set_stabilizer(const AffineDiagram& d, const std::vector<std::size_t>& group, const OmegaSet& omega);

/// Whether omega is admissible for this lattice in characteristic p.
bool in_Q(const CocharLattice& L, const OmegaSet& omega, int p);

/// All admissible subsets. Throws std::length_error when more than `cap` nodes are eligible.
std::vector<OmegaSet> enumerate_Q(const CocharLattice& L, int p, std::size_t cap = 24);

/// The barycentre of the face of the alcove spanned by omega, per component.
/// Throws std::invalid_argument when omega misses a component or mixes marks.
Coweight lambda_of(const AffineDiagram& d, const OmegaSet& omega);

/// One representative per orbit of `group`; the representative is the smallest member.
std::vector<OmegaSet> orbits(const AffineDiagram& d, const std::vector<OmegaSet>& Q, const std::vector<std::size_t>& group);

/// lcm over components of n_alpha * o_G(varpi_alpha) * |omega_i|, with alpha the first node of
/// omega_i. Agrees with the order of lambda_of(omega) for adjoint and simply connected lattices,
/// but can overshoot for intermediate ones (SO(2n): {a_{n-1}, a_n} has order 2, not 4).
std::int64_t order_by_components(const CocharLattice& L, const OmegaSet& omega);

/// Invariants of the class attached to omega. Throws std::invalid_argument when omega is not admissible.
QuasiIsolatedClass class_invariants(const CocharLattice& L, const OmegaSet& omega, int p);

/// Cartan type of the subdiagram on `nodes`, canonical and sorted. Throws std::logic_error
/// if a connected component is not of finite type.
std::vector<SimpleType> subdiagram_type(const AffineDiagram& d, const std::vector<int>& nodes);

GroupStructure group_structure(const AutomorphismGroup& a, const std::vector<std::size_t>& subgroup);

/// Full classification, sorted: isolated first, then by order, size of omega, and omega.
Classification classify(const CocharLattice& L, int p);

/// Classical name of the class (t_i, s_i, I_k ⊗ J_d) for simple classical groups with the
/// adjoint, simply connected (type C) or SO (type D) lattice.
std::optional<std::string> classical_label(const CocharLattice& L, const QuasiIsolatedClass& c);

/// The node labels of omega, e.g. "{a0,a3}".
std::string format_omega(const AffineDiagram& d, const OmegaSet& omega);

/// Per-type generators of the automorphism group as usually tabulated
/// (empty for the trivial group), e.g. {"z1", "zn"} for D_n with n even.
std::vector<std::string> standard_generators(SimpleType t);

}  // namespace qiso
