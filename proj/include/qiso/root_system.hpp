#pragma once

#include "qiso/cartan_type.hpp"
#include "qiso/linalg.hpp"
#include "qiso/rational.hpp"

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace qiso {

/// A root in the simple-root basis. `coords` spans the whole (concatenated)
/// simple system; entries outside `component` are zero.
struct Root {
  int component = 0;
  std::vector<int> coords;

  int height() const;
  bool positive() const;
  friend bool operator==(const Root&, const Root&) = default;
};

/// An element of V = Q (x) Y(T_sc), stored in the simple-coroot basis.
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(QVector coords) : coords_(std::move(coords)) {}
  static Coweight zero(std::size_t rank) { return Coweight(QVector(rank, Rational(0))); }

  const QVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  /// True iff every simple-coroot coordinate is an integer, i.e. the vector lies in Y(T_sc).
  bool in_coroot_lattice() const;

  Coweight& operator+=(const Coweight& o);
  Coweight& operator-=(const Coweight& o);
  Coweight& operator*=(const Rational& q);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator*(const Rational& q, Coweight a) { return a *= q; }
  friend Coweight operator-(Coweight a) { return a *= Rational(-1); }
  friend bool operator==(const Coweight&, const Coweight&) = default;

 private:
  QVector coords_;
};

/// A Weyl group element, stored as the permutation it induces on the root list.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<std::uint16_t> perm) : perm_(std::move(perm)) {}
  static WeylElement identity(std::size_t num_roots);

  std::size_t num_roots() const { return perm_.size(); }
  int operator()(int root) const { return perm_[static_cast<std::size_t>(root)]; }
  const std::vector<std::uint16_t>& permutation() const { return perm_; }
  bool is_identity() const;
  WeylElement inverse() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<std::uint16_t> perm_;
};

class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  int num_components() const { return type_.num_components(); }

  /// First global simple index of a component, and its size.
  int component_offset(int comp) const { return offsets_[static_cast<std::size_t>(comp)]; }
  int component_rank(int comp) const { return type_.components()[static_cast<std::size_t>(comp)].rank; }
  int component_of_simple(int i) const { return simple_component_[static_cast<std::size_t>(i)]; }

  /// C[i][j] = <alpha_j, alpha_i^vee>.
  const IntMatrix& cartan_matrix() const { return cartan_; }

  /// All roots: simple roots first (index i is alpha_i), then the remaining
  /// positive roots by component and height, then the negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  int negative_of(int root) const { return root < num_positive_ ? root + num_positive_ : root - num_positive_; }
  /// Index of the root with these coordinates, or -1.
  int find_root(const std::vector<int>& coords) const;
  std::vector<int> positive_roots_of(int comp) const;

  int highest_root(int comp) const { return highest_[static_cast<std::size_t>(comp)]; }
  /// Coefficient n_alpha of alpha_i in the highest root of its component.
  int mark(int simple) const;

  /// Fundamental coweight varpi_i^vee (dual to the simple roots).
  const Coweight& fundamental_coweight(int i) const { return fundamental_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coroot_coords(int root) const { return coroots_[static_cast<std::size_t>(root)]; }
  Coweight coroot(int root) const;

  /// Invariant form (beta, gamma); long roots of simply-laced types have norm 2.
  int form(int beta, int gamma) const;
  /// <beta, gamma^vee>.
  int pair_roots(int beta, int gamma) const;

  Rational pair(const Root& root, const Coweight& v) const;
  Rational pair(int root, const Coweight& v) const { return pair(roots_[static_cast<std::size_t>(root)], v); }

  WeylElement simple_reflection(int i) const { return simple_reflections_[static_cast<std::size_t>(i)]; }
  WeylElement reflection(int root) const;

  /// Longest element of the parabolic subgroup generated by the simple
  /// reflections in `subset` (global simple indices).
  WeylElement longest_element(std::span<const int> subset) const;

  Coweight act(const WeylElement& w, const Coweight& v) const;
  /// Action on coweights given only the images of the simple roots.
  Coweight act_by_simple_images(std::span<const std::uint16_t> images, const Coweight& v) const;
  Root act(const WeylElement& w, const Root& r) const;

  /// Matrix of w on V in the simple-coroot basis (integral).
  IntMatrix matrix(const WeylElement& w) const;

  /// Completes a partial action (images of simple roots) to the full root permutation.
  WeylElement from_simple_images(std::span<const std::uint16_t> images) const;

 private:
  void build_component(int comp);

  CartanType type_;
  int rank_ = 0;
  std::vector<int> offsets_;
  std::vector<int> simple_component_;
  IntMatrix cartan_;
  IntMatrix gram_;  // (alpha_i, alpha_j)
  std::vector<Root> roots_;
  int num_positive_ = 0;
  std::vector<int> highest_;
  std::vector<Coweight> fundamental_;
  std::vector<std::vector<int>> coroots_;
  std::vector<int> norms_;  // (beta, beta) per root
  std::vector<WeylElement> simple_reflections_;
  std::unordered_map<std::string, int> index_;
};

/// Builds the root system of a (possibly reducible) Cartan type with node
/// numbering as in the Bourbaki tables, except G2 where alpha_1 is the long
/// root so that the highest root is 2 alpha_1 + 3 alpha_2.
RootSystem build_root_system(const CartanType& ct);

/// <alpha, v> over the same root system; throws std::invalid_argument on a dimension mismatch.
Rational pair(const RootSystem& rs, const Root& alpha, const Coweight& v);

}  // namespace qiso
