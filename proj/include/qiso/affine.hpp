#pragma once

#include "qiso/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qiso {

/// One node of the affine diagram: a simple root, or the lowest root of a component.
struct AffineNode {
  int component = 0;
  int label = 0;   // 0 for the affine node, k for alpha_k (Bourbaki numbering)
  int root = 0;    // index into RootSystem::roots()
  int mark = 1;    // n_alpha
  int wall = 0;    // m_alpha: 0 on simple nodes, -1 on the affine node
  bool affine() const { return label == 0; }
};

/// Affine coordinates (lambda_alpha) indexed by global node id.
struct AffineCoordinates {
  QVector values;
  friend bool operator==(const AffineCoordinates&, const AffineCoordinates&) = default;
};

/// Diagram automorphism z in A, realized by a Weyl element with z(Delta~) = Delta~.
struct DiagramAutomorphism {
  std::vector<int> perm;           // node id -> node id
  std::vector<int> choice;         // per component: node id alpha_i with z = prod z_{alpha_i}
  Coweight varpi;                  // varpi^vee(z)
  std::optional<WeylElement> weyl;
  std::string name;                // e.g. "1", "z1", "z1*z3[2]"
};

/// The finite abelian group A, elements indexed from 0 (identity).
class AutomorphismGroup {
 public:
  AutomorphismGroup() = default;
  explicit AutomorphismGroup(std::vector<DiagramAutomorphism> elements);

  std::size_t size() const { return elements_.size(); }
  const DiagramAutomorphism& operator[](std::size_t k) const { return elements_[k]; }
  const std::vector<DiagramAutomorphism>& elements() const { return elements_; }

  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  int order(std::size_t a) const { return orders_[a]; }
  /// Element whose node permutation equals `perm`, or nullopt.
  std::optional<std::size_t> find(const std::vector<int>& perm) const;
  /// Subgroup generated by the given elements (sorted indices).
  std::vector<std::size_t> generated(const std::vector<std::size_t>& gens) const;
  /// All subgroups, each as a sorted index list; deterministic order.
  std::vector<std::vector<std::size_t>> subgroups() const;

 private:
  std::vector<DiagramAutomorphism> elements_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<int> orders_;
};

class AffineDiagram {
 public:
  explicit AffineDiagram(RootSystem base);

  const RootSystem& base() const { return base_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_components() const { return base_.num_components(); }
  const AffineNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  const std::vector<AffineNode>& nodes() const { return nodes_; }
  int affine_node(int comp) const { return component_nodes_[static_cast<std::size_t>(comp)].front(); }
  /// Node ids of a component; the affine node comes first, then alpha_1..alpha_n.
  const std::vector<int>& component_nodes(int comp) const { return component_nodes_[static_cast<std::size_t>(comp)]; }
  /// Node id of the simple root alpha_i (global simple index).
  int simple_node(int simple) const { return simple_node_[static_cast<std::size_t>(simple)]; }

  /// varpi_alpha^vee, zero on affine nodes.
  const Coweight& varpi(int node) const { return varpi_[static_cast<std::size_t>(node)]; }
  /// <alpha, beta^vee> for nodes alpha, beta.
  int pairing(int alpha, int beta) const;
  /// Pairs of distinct adjacent nodes.
  std::vector<std::pair<int, int>> adjacency() const;

  /// "a3" for one component, "a3[2]" for the second of several.
  std::string label(int node) const;
  /// Node id from its label; throws std::invalid_argument.
  int node_from_label(const std::string& label) const;

  const AutomorphismGroup& automorphisms() const { return automorphisms_; }

 private:
  RootSystem base_;
  std::vector<AffineNode> nodes_;
  std::vector<std::vector<int>> component_nodes_;
  std::vector<int> simple_node_;
  std::vector<Coweight> varpi_;
  AutomorphismGroup automorphisms_;
};

AffineDiagram extend(const RootSystem& rs);

/// Affine coordinates: per-component sum 1 and lambda = sum (lambda_alpha / n_alpha) varpi_alpha^vee.
AffineCoordinates affine_coords(const AffineDiagram& d, const Coweight& lambda);
Coweight from_coords(const AffineDiagram& d, const AffineCoordinates& c);

/// "(1/2, 0, 1/2)" in node order.
std::string format_coords(const AffineCoordinates& c);

/// lambda lies in the fundamental alcove iff every affine coordinate is >= 0.
bool alcove_contains(const AffineCoordinates& c);

/// Reflection in the wall {<alpha, v> = m_alpha} of the alcove.
Coweight reflect_in_wall(const AffineDiagram& d, int node, const Coweight& v);

struct AlcoveReduction {
  Coweight point;
  std::vector<int> walls;  // node ids, in the order the reflections were applied
};

/// Moves lambda into the fundamental alcove by wall reflections, always
/// choosing the violated wall with the smallest node id.
AlcoveReduction alcove_reduce(const AffineDiagram& d, const Coweight& lambda);

/// Replays a transcript of wall reflections.
Coweight replay(const AffineDiagram& d, const Coweight& lambda, const std::vector<int>& walls);

/// Generators z_alpha (alpha with mark 1) per component and their products.
AutomorphismGroup diagram_automorphisms(const AffineDiagram& d);

/// (z(lambda) + varpi^vee(z))_alpha = lambda_{z^{-1}(alpha)}.
AffineCoordinates act_on_coords(const DiagramAutomorphism& z, const AffineCoordinates& c);

}  // namespace qiso
