#include "qiso/weyl_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace qiso {

WeylGroup::WeylGroup(RootSystem rs, std::uint64_t cap) : rs_(std::move(rs)), rank_(static_cast<std::size_t>(rs_.rank())) {
  const std::uint64_t expected = rs_.type().weyl_order();
  if (expected > cap) {
    throw std::length_error("Weyl group of " + rs_.type().to_string() + " has " + std::to_string(expected) +
                            " elements, more than the oracle cap of " + std::to_string(cap));
  }
  images_.reserve(expected * rank_);
  slots_.assign(64, 0);
  std::vector<std::vector<std::uint16_t>> reflections;
  for (std::size_t i = 0; i < rank_; ++i) reflections.push_back(rs_.simple_reflection(static_cast<int>(i)).permutation());

  std::vector<std::uint16_t> buffer(rank_), next(rank_);
  std::iota(buffer.begin(), buffer.end(), std::uint16_t{0});
  insert(buffer);
  for (std::size_t k = 0; k < count_; ++k) {
    auto current = images(k);
    std::copy(current.begin(), current.end(), buffer.begin());
    for (const auto& s : reflections) {
      for (std::size_t j = 0; j < rank_; ++j) next[j] = s[buffer[j]];
      if (!find(next)) {
        if (count_ >= cap) throw std::length_error("Weyl group enumeration exceeded the oracle cap");
        insert(next);
      }
    }
  }
  if (count_ != expected) throw std::logic_error("Weyl group enumeration produced the wrong number of elements");
}

std::uint64_t WeylGroup::hash(std::span<const std::uint16_t> images) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : images) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<std::size_t> WeylGroup::find(std::span<const std::uint16_t> key) const {
  if (key.size() != rank_) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t pos = hash(key) & mask;; pos = (pos + 1) & mask) {
    const std::uint32_t slot = slots_[pos];
    if (slot == 0) return std::nullopt;
    auto stored = images(slot - 1);
    if (std::equal(stored.begin(), stored.end(), key.begin())) return slot - 1;
  }
}

std::size_t WeylGroup::insert(std::span<const std::uint16_t> key) {
  if ((count_ + 1) * 2 > slots_.size()) rehash();
  images_.insert(images_.end(), key.begin(), key.end());
  const std::size_t index = count_++;
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash(key) & mask;
  while (slots_[pos] != 0) pos = (pos + 1) & mask;
  slots_[pos] = static_cast<std::uint32_t>(index + 1);
  return index;
}

void WeylGroup::rehash() {
  std::vector<std::uint32_t> old(slots_.size() * 2, 0);
  old.swap(slots_);
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t k = 0; k < count_; ++k) {
    std::size_t pos = hash(images(k)) & mask;
    while (slots_[pos] != 0) pos = (pos + 1) & mask;
    slots_[pos] = static_cast<std::uint32_t>(k + 1);
  }
}

WeylElement WeylGroup::element(std::size_t k) const { return rs_.from_simple_images(images(k)); }

std::optional<std::size_t> WeylGroup::index_of(const WeylElement& w) const {
  if (w.num_roots() != static_cast<std::size_t>(rs_.num_roots())) return std::nullopt;
  std::vector<std::uint16_t> key(w.permutation().begin(), w.permutation().begin() + static_cast<std::ptrdiff_t>(rank_));
  return find(key);
}

IntMatrix WeylGroup::matrix(std::size_t k) const {
  IntMatrix m(rank_, std::vector<int>(rank_, 0));
  auto img = images(k);
  for (std::size_t c = 0; c < rank_; ++c) {
    const auto& col = rs_.coroot_coords(img[c]);
    for (std::size_t r = 0; r < rank_; ++r) m[r][c] = col[r];
  }
  return m;
}

WeylGroup enumerate_weyl(const RootSystem& rs, std::uint64_t cap) { return WeylGroup(rs, cap); }

std::vector<int> phi_of(const RootSystem& rs, const Coweight& lambda) {
  std::vector<int> out;
  for (int r = 0; r < rs.num_roots(); ++r) {
    if (is_integral(rs.pair(r, lambda))) out.push_back(r);
  }
  return out;
}

namespace {

/// <beta, lambda> for every root, from the values on the simple roots.
QVector root_pairings(const RootSystem& rs, const Coweight& lambda) {
  QVector simple(static_cast<std::size_t>(rs.rank()));
  for (int j = 0; j < rs.rank(); ++j) simple[static_cast<std::size_t>(j)] = rs.pair(j, lambda);
  QVector out(static_cast<std::size_t>(rs.num_roots()));
  for (int r = 0; r < rs.num_roots(); ++r) {
    Rational s = 0;
    const auto& c = rs.roots()[static_cast<std::size_t>(r)].coords;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] != 0) s += c[j] * simple[j];
    }
    out[static_cast<std::size_t>(r)] = s;
  }
  return out;
}

/// Fractional parts of the pairings as residues modulo a common denominator.
std::vector<std::int64_t> residues(const QVector& values, std::int64_t den) {
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (const auto& q : values) {
    Integer n = numerator(q * den) % den;
    if (n < 0) n += den;
    out.push_back(to_int64(n));
  }
  return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

QVector apply(const IntMatrix& m, const QVector& v) {
  QVector out(v.size(), Rational(0));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (m[r][c] != 0) out[r] += m[r][c] * v[c];
    }
  }
  return out;
}

/// Shrinks `basis` to its intersection with the fixed space of m; returns false if unchanged.
bool intersect_fixed(std::vector<QVector>& basis, const IntMatrix& m) {
  const std::size_t dim = m.size();
  std::vector<QVector> moved;
  bool fixed = true;
  for (const auto& k : basis) {
    QVector diff = apply(m, k);
    for (std::size_t r = 0; r < dim; ++r) diff[r] -= k[r];
    if (std::any_of(diff.begin(), diff.end(), [](const Rational& q) { return q != 0; })) fixed = false;
    moved.push_back(std::move(diff));
  }
  if (fixed) return false;
  QMatrix b(dim, QVector(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::size_t r = 0; r < dim; ++r) b[r][c] = moved[c][r];
  }
  std::vector<QVector> next;
  for (const auto& coeffs : kernel(b, basis.size())) {
    QVector v(dim, Rational(0));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      if (coeffs[c] != 0) {
        for (std::size_t r = 0; r < dim; ++r) v[r] += coeffs[c] * basis[c][r];
      }
    }
    next.push_back(std::move(v));
  }
  basis = std::move(next);
  return true;
}

std::vector<QVector> identity_basis(std::size_t dim) {
  std::vector<QVector> basis(dim, QVector(dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) basis[i][i] = 1;
  return basis;
}

int fixed_dim_of(const WeylGroup& W, const std::vector<std::size_t>& elements) {
  auto basis = identity_basis(static_cast<std::size_t>(W.root_system().rank()));
  for (auto k : elements) {
    if (basis.empty()) break;
    intersect_fixed(basis, W.matrix(k));
  }
  return static_cast<int>(basis.size());
}

std::vector<IntMatrix> reflection_matrices(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<IntMatrix> out;
  for (int r : roots) {
    if (rs.roots()[static_cast<std::size_t>(r)].positive()) out.push_back(rs.matrix(rs.reflection(r)));
  }
  return out;
}

std::int64_t brute_order(const Coweight& lambda, const CocharLattice& L) {
  for (std::int64_t k = 1; k <= 1'000'000; ++k) {
    if (lattice_member(Rational(k) * lambda, L)) return k;
  }
  throw std::runtime_error("brute-force order search did not terminate");
}

/// Simple roots of the positive system Phi(lambda) ∩ Phi^+.
std::vector<int> simple_roots_of(const RootSystem& rs, const std::vector<int>& phi) {
  std::vector<int> positive;
  std::set<int> in_positive;
  for (int r : phi) {
    if (rs.roots()[static_cast<std::size_t>(r)].positive()) {
      positive.push_back(r);
      in_positive.insert(r);
    }
  }
  std::vector<int> out;
  for (int g : positive) {
    bool decomposable = false;
    const auto& gc = rs.roots()[static_cast<std::size_t>(g)].coords;
    for (int a : positive) {
      if (a == g) continue;
      std::vector<int> diff = gc;
      const auto& ac = rs.roots()[static_cast<std::size_t>(a)].coords;
      for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= ac[j];
      int b = rs.find_root(diff);
      if (b >= 0 && in_positive.count(b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(g);
  }
  return out;
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(total - k, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return r > 1e18L ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(r + 0.5L);
}

}  // namespace

std::vector<SimpleType> subsystem_type(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<int> comp(roots.size(), -1);
  int count = 0;
  for (std::size_t start = 0; start < roots.size(); ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = count;
    std::vector<std::size_t> queue{start};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t other = 0; other < roots.size(); ++other) {
        if (comp[other] < 0 && rs.form(roots[queue[q]], roots[other]) != 0) {
          comp[other] = count;
          queue.push_back(other);
        }
      }
    }
    ++count;
  }
  std::vector<SimpleType> parts;
  for (int c = 0; c < count; ++c) {
    std::vector<int> members;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (comp[k] == c) members.push_back(roots[k]);
    }
    QMatrix span;
    int longest = 0;
    for (int r : members) {
      QVector row;
      for (int x : rs.roots()[static_cast<std::size_t>(r)].coords) row.emplace_back(x);
      span.push_back(std::move(row));
      longest = std::max(longest, rs.form(r, r));
    }
    const int r = static_cast<int>(rank(span, static_cast<std::size_t>(rs.rank())));
    const int n = static_cast<int>(members.size());
    const int n_long = static_cast<int>(std::count_if(members.begin(), members.end(), [&](int x) { return rs.form(x, x) == longest; }));
    const int n_short = n - n_long;
    SimpleType t{Family::A, r};
    if (n_short == 0) {
      if (n == r * (r + 1)) {
        t = {Family::A, r};
      } else if (n == 2 * r * (r - 1)) {
        t = {Family::D, r};
      } else if ((r == 6 && n == 72) || (r == 7 && n == 126) || (r == 8 && n == 240)) {
        t = {Family::E, r};
      } else {
        throw std::logic_error("unrecognized root subsystem");
      }
    } else if (r == 2 && n == 12) {
      t = {Family::G, 2};
    } else if (r == 4 && n == 48 && n_long == 24) {
      t = {Family::F, 4};
    } else if (n == 2 * r * r && n_short == 2 * r) {
      t = {Family::B, r};
    } else if (n == 2 * r * r && n_long == 2 * r) {
      t = {Family::C, r};
    } else {
      throw std::logic_error("unrecognized root subsystem");
    }
    parts.push_back(canonical(t));
  }
  sort_components(parts);
  return parts;
}

std::vector<std::size_t> stabilizer_W(const WeylGroup& W, const Coweight& lambda, const CocharLattice& L) {
  const auto& rs = W.root_system();
  const QVector values = root_pairings(rs, lambda);
  std::int64_t den = common_denominator(values);
  const auto res = residues(values, den);
  const std::size_t rank = static_cast<std::size_t>(rs.rank());
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < W.size(); ++k) {
    auto img = W.images(k);
    bool candidate = true;
    for (std::size_t j = 0; j < rank && candidate; ++j) candidate = res[img[j]] == res[j];
    if (!candidate) continue;
    if (lattice_member(rs.act_by_simple_images(img, lambda) - lambda, L)) out.push_back(k);
  }
  return out;
}

int fixed_dim(const std::vector<IntMatrix>& generators, std::size_t dim) {
  auto basis = identity_basis(dim);
  for (const auto& m : generators) {
    if (basis.empty()) break;
    if (m.size() != dim) throw std::invalid_argument("fixed_dim: matrix of the wrong size");
    intersect_fixed(basis, m);
  }
  return static_cast<int>(basis.size());
}

int fixed_dim(const RootSystem& rs, const std::vector<WeylElement>& generators) {
  std::vector<IntMatrix> ms;
  for (const auto& w : generators) ms.push_back(rs.matrix(w));
  return fixed_dim(ms, static_cast<std::size_t>(rs.rank()));
}

Decomposition decompose(const WeylGroup& W, const std::vector<std::size_t>& stabilizer, const Coweight& lambda,
                        const AffineDiagram& d) {
  const auto& rs = W.root_system();
  const auto coords = affine_coords(d, lambda);
  if (!alcove_contains(coords)) throw std::invalid_argument("decompose: lambda must lie in the fundamental alcove");
  const std::size_t rank = static_cast<std::size_t>(rs.rank());

  // A vector taking the value 1 on each root of I_lambda picks out the positive system with that basis.
  std::vector<int> basis_roots;
  for (int id = 0; id < d.num_nodes(); ++id) {
    if (coords.values[static_cast<std::size_t>(id)] == 0) basis_roots.push_back(d.node(id).root);
  }
  QVector v(rank, Rational(0));
  if (!basis_roots.empty()) {
    QMatrix rows;
    for (int r : basis_roots) {
      QVector row(rank);
      for (std::size_t i = 0; i < rank; ++i) {
        QVector unit(rank, Rational(0));
        unit[i] = 1;
        row[i] = rs.pair(r, Coweight(unit));
      }
      rows.push_back(std::move(row));
    }
    auto sol = solve(rows, QVector(basis_roots.size(), Rational(1)), rank);
    if (!sol) throw std::logic_error("decompose: the roots of I_lambda are not independent");
    v = *sol;
  }
  const QVector height = root_pairings(rs, Coweight(v));

  Decomposition out;
  for (auto k : stabilizer) {
    auto img = W.images(k);
    bool preserves = true;
    for (int r : basis_roots) {
      Rational h = 0;
      const auto& c = rs.roots()[static_cast<std::size_t>(r)].coords;
      for (std::size_t j = 0; j < rank; ++j) {
        if (c[j] != 0) h += c[j] * height[img[j]];
      }
      if (h <= 0) {
        preserves = false;
        break;
      }
    }
    if (preserves) out.complement.push_back(k);
  }

  // W° as the closure of the reflections in the simple roots of Phi(lambda) ∩ Phi^+.
  std::vector<std::vector<std::uint16_t>> gens;
  for (int g : simple_roots_of(rs, phi_of(rs, lambda))) gens.push_back(rs.reflection(g).permutation());
  std::vector<std::size_t> group{0};
  std::unordered_set<std::size_t> seen{0};
  std::vector<std::uint16_t> next(rank);
  for (std::size_t k = 0; k < group.size(); ++k) {
    auto img = W.images(group[k]);
    std::vector<std::uint16_t> cur(img.begin(), img.end());
    for (const auto& s : gens) {
      for (std::size_t j = 0; j < rank; ++j) next[j] = s[cur[j]];
      auto idx = W.find(next);
      if (!idx) throw std::logic_error("decompose: reflection closure left the Weyl group");
      if (seen.insert(*idx).second) group.push_back(*idx);
    }
  }
  std::sort(group.begin(), group.end());
  out.reflection_part = std::move(group);

  const std::set<std::size_t> stab(stabilizer.begin(), stabilizer.end());
  const std::set<std::size_t> refl(out.reflection_part.begin(), out.reflection_part.end());
  bool ok = stab.count(0) && out.complement.size() * out.reflection_part.size() == stabilizer.size();
  for (auto k : out.reflection_part) ok = ok && stab.count(k);
  for (auto k : out.complement) ok = ok && (k == 0 || !refl.count(k));
  // W° is also the kernel of W_G(lambda) -> Y(T)/Y(T_sc).
  for (auto k : stabilizer) {
    const bool in_kernel = (rs.act_by_simple_images(W.images(k), lambda) - lambda).in_coroot_lattice();
    ok = ok && in_kernel == (refl.count(k) > 0);
  }
  out.semidirect = ok;
  return out;
}

QuasiIsolation is_quasi_isolated_bruteforce(const WeylGroup& W, const Coweight& lambda, const CocharLattice& L) {
  const auto& rs = W.root_system();
  QuasiIsolation q;
  q.quasi_isolated = fixed_dim_of(W, stabilizer_W(W, lambda, L)) == 0;
  q.isolated = fixed_dim(reflection_matrices(rs, phi_of(rs, lambda)), static_cast<std::size_t>(rs.rank())) == 0;
  return q;
}

bool conjugate_bruteforce(const WeylGroup& W, const CocharLattice& L, const Coweight& lambda, const Coweight& mu) {
  const auto& rs = W.root_system();
  const QVector lv = root_pairings(rs, lambda);
  const QVector mv = root_pairings(rs, mu);
  const std::int64_t den = lcm64(common_denominator(lv), common_denominator(mv));
  const auto lr = residues(lv, den);
  const auto mr = residues(mv, den);
  const std::size_t rank = static_cast<std::size_t>(rs.rank());
  // With u = w^{-1}: <alpha_j, w(lambda)> = <u(alpha_j), lambda>, and w(lambda) - mu in Y(T) iff lambda - u(mu) is.
  for (std::size_t k = 0; k < W.size(); ++k) {
    auto img = W.images(k);
    bool candidate = true;
    for (std::size_t j = 0; j < rank && candidate; ++j) candidate = lr[img[j]] == mr[j];
    if (candidate && lattice_member(lambda - rs.act_by_simple_images(img, mu), L)) return true;
  }
  return false;
}

bool conjugate_by_automorphisms(const CocharLattice& L, const Coweight& lambda, const Coweight& mu) {
  const auto& d = L.diagram();
  for (auto z : L.subgroup()) {
    const auto& w = d.automorphisms()[z].weyl;
    if (!w) throw std::logic_error("automorphism without a Weyl realization");
    if (lattice_member(d.base().act(*w, lambda) - mu, L)) return true;
  }
  return false;
}

std::uint64_t grid_size(const AffineDiagram& d, int max_den) {
  std::uint64_t total = 1;
  for (int c = 0; c < d.num_components(); ++c) {
    const auto k = static_cast<std::uint64_t>(d.component_nodes(c).size());
    const std::uint64_t n = binomial(static_cast<std::uint64_t>(max_den) + k - 1, k - 1);
    if (n != 0 && total > std::numeric_limits<std::uint64_t>::max() / n) return std::numeric_limits<std::uint64_t>::max();
    total *= n;
  }
  return total;
}

SearchResult exhaustive_search(const WeylGroup& W, const CocharLattice& L, int p, int max_den, std::uint64_t point_cap) {
  check_characteristic(p);
  if (max_den < 1) throw std::invalid_argument("max_den must be positive");
  const auto& d = L.diagram();
  const auto& rs = W.root_system();
  if (!(rs.type() == d.base().type())) throw std::invalid_argument("Weyl group and lattice belong to different root systems");
  const std::uint64_t total = grid_size(d, max_den);
  if (total > point_cap) {
    throw std::length_error("search grid has " + std::to_string(total) + " points, more than the cap of " +
                            std::to_string(point_cap) + "; lower max_den or raise the cap");
  }
  std::vector<std::vector<std::vector<int>>> per_comp;
  for (int c = 0; c < d.num_components(); ++c) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    compositions(max_den, static_cast<int>(d.component_nodes(c).size()), cur, parts);
    per_comp.push_back(std::move(parts));
  }

  SearchResult result;
  std::vector<std::size_t> digit(per_comp.size(), 0);
  while (true) {
    AffineCoordinates coords;
    coords.values.assign(static_cast<std::size_t>(d.num_nodes()), Rational(0));
    for (std::size_t c = 0; c < per_comp.size(); ++c) {
      const auto& ids = d.component_nodes(static_cast<int>(c));
      const auto& comp = per_comp[c][digit[c]];
      for (std::size_t k = 0; k < ids.size(); ++k) coords.values[static_cast<std::size_t>(ids[k])] = Rational(comp[k], max_den);
    }
    ++result.points;
    const Coweight lambda = from_coords(d, coords);

    const bool p_regular = p == 0 || order_mod(lambda, d, OrderKind::simply_connected) % p != 0;
    if (p_regular) {
      const auto stab = stabilizer_W(W, lambda, L);
      if (fixed_dim_of(W, stab) == 0) {
        ++result.quasi_isolated_points;
        bool merged = false;
        for (const auto& rep : result.orbits) {
          const bool brute = conjugate_bruteforce(W, L, lambda, rep.lambda);
          const bool rule = conjugate_by_automorphisms(L, lambda, rep.lambda);
          if (brute != rule) {
            result.problems.push_back("conjugacy by automorphisms disagrees with brute force at " + format_coords(coords));
          }
          if (brute) {
            merged = true;
            break;
          }
        }
        if (!merged) {
          OraclePoint pt;
          pt.coords = coords;
          pt.lambda = lambda;
          pt.order = brute_order(lambda, L);
          const auto parts = decompose(W, stab, lambda, d);
          if (!parts.semidirect) result.problems.push_back("stabilizer is not A ⋉ W° at " + format_coords(coords));
          pt.reflection_order = parts.reflection_part.size();
          pt.component_order = parts.complement.size();
          pt.centralizer = subsystem_type(rs, phi_of(rs, lambda));
          pt.isolated = fixed_dim(reflection_matrices(rs, phi_of(rs, lambda)), static_cast<std::size_t>(rs.rank())) == 0;

          // A_G(lambda) must be realized by the automorphisms preserving the affine coordinates.
          std::set<std::size_t> expected;
          for (auto z : L.subgroup()) {
            const auto& aut = d.automorphisms()[z];
            if (act_on_coords(aut, coords) == coords) expected.insert(*W.index_of(*aut.weyl));
          }
          if (expected != std::set<std::size_t>(parts.complement.begin(), parts.complement.end())) {
            result.problems.push_back("A_G(lambda) differs from the coordinate-preserving automorphisms at " +
                                      format_coords(coords));
          }
          result.orbits.push_back(std::move(pt));
        }
      }
    }
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == per_comp[pos].size()) digit[pos++] = 0;
    if (pos == digit.size()) break;
  }
  return result;
}

}  // namespace qiso
