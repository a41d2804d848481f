#include "qiso/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qiso {

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::positive() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool Coweight::in_coroot_lattice() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integral(q); });
}

Coweight& Coweight::operator+=(const Coweight& o) {
  if (o.size() != size()) throw std::invalid_argument("coweight dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Coweight& Coweight::operator-=(const Coweight& o) {
  if (o.size() != size()) throw std::invalid_argument("coweight dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Coweight& Coweight::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

WeylElement WeylElement::identity(std::size_t num_roots) {
  std::vector<std::uint16_t> p(num_roots);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return WeylElement(std::move(p));
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

WeylElement WeylElement::inverse() const {
  std::vector<std::uint16_t> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = static_cast<std::uint16_t>(i);
  return WeylElement(std::move(inv));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.perm_.size() != b.perm_.size()) throw std::invalid_argument("Weyl elements over different root systems");
  std::vector<std::uint16_t> p(b.perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.perm_[b.perm_[i]];
  return WeylElement(std::move(p));
}

namespace {

std::string key_of(const std::vector<int>& coords) {
  std::string k(coords.size(), '\0');
  for (std::size_t i = 0; i < coords.size(); ++i) k[i] = static_cast<char>(coords[i]);
  return k;
}

// Gram matrix (alpha_i, alpha_j) of one simple type.
IntMatrix local_gram(SimpleType t) {
  const int n = t.rank;
  IntMatrix g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto link = [&](int i, int j, int value) {  // 1-based labels
    g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = value;
    g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = value;
  };
  auto norm = [&](int i, int value) { g[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = value; };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) norm(i, 2);
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 1; i < n; ++i) norm(i, 4);
      norm(n, 2);
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:  // alpha_n long
      for (int i = 1; i < n; ++i) norm(i, 2);
      norm(n, 4);
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case Family::D:
      for (int i = 1; i <= n; ++i) norm(i, 2);
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case Family::E:
      for (int i = 1; i <= n; ++i) norm(i, 2);
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      norm(1, 4);
      norm(2, 4);
      norm(3, 2);
      norm(4, 2);
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case Family::G:  // alpha_1 long, alpha_2 short
      norm(1, 6);
      norm(2, 2);
      link(1, 2, -3);
      break;
  }
  return g;
}

}  // namespace

RootSystem::RootSystem(CartanType type) : type_(std::move(type)) {
  rank_ = type_.rank();
  const auto n = static_cast<std::size_t>(rank_);
  gram_.assign(n, std::vector<int>(n, 0));
  int offset = 0;
  for (int comp = 0; comp < num_components(); ++comp) {
    offsets_.push_back(offset);
    auto g = local_gram(type_.components()[static_cast<std::size_t>(comp)]);
    for (std::size_t i = 0; i < g.size(); ++i) {
      simple_component_.push_back(comp);
      for (std::size_t j = 0; j < g.size(); ++j) gram_[static_cast<std::size_t>(offset) + i][static_cast<std::size_t>(offset) + j] = g[i][j];
    }
    offset += static_cast<int>(g.size());
  }
  cartan_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[i][i];
  }

  for (int i = 0; i < rank_; ++i) {
    std::vector<int> c(n, 0);
    c[static_cast<std::size_t>(i)] = 1;
    roots_.push_back({simple_component_[static_cast<std::size_t>(i)], std::move(c)});
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(key_of(roots_[i].coords), static_cast<int>(i));
  for (int comp = 0; comp < num_components(); ++comp) build_component(comp);
  num_positive_ = static_cast<int>(roots_.size());
  for (int k = 0; k < num_positive_; ++k) {
    Root neg = roots_[static_cast<std::size_t>(k)];
    for (auto& c : neg.coords) c = -c;
    index_.emplace(key_of(neg.coords), static_cast<int>(roots_.size()));
    roots_.push_back(std::move(neg));
  }
  if (roots_.size() > 65535) throw TypeError("root system too large for 16-bit root indices");

  for (const auto& r : roots_) {
    int norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) norm += r.coords[i] * gram_[i][j] * r.coords[j];
    }
    norms_.push_back(norm);
    std::vector<int> co(n, 0);
    for (std::size_t i = 0; i < n; ++i) co[i] = r.coords[i] * gram_[i][i] / norm;
    coroots_.push_back(std::move(co));
  }

  for (int comp = 0; comp < num_components(); ++comp) {
    int best = -1;
    for (int k = 0; k < num_positive_; ++k) {
      const auto& r = roots_[static_cast<std::size_t>(k)];
      if (r.component == comp && (best < 0 || r.height() > roots_[static_cast<std::size_t>(best)].height())) best = k;
    }
    highest_.push_back(best);
  }

  auto inv = inverse(to_rational(cartan_));
  for (std::size_t k = 0; k < n; ++k) fundamental_.emplace_back(inv[k]);

  for (int i = 0; i < rank_; ++i) simple_reflections_.push_back(reflection(i));
}

// Positive roots of one component by the root-string criterion, in order of height.
void RootSystem::build_component(int comp) {
  const int first = offsets_[static_cast<std::size_t>(comp)];
  const int last = first + component_rank(comp);
  std::vector<int> layer;
  for (int i = first; i < last; ++i) layer.push_back(i);
  while (!layer.empty()) {
    std::vector<int> next;
    for (int b : layer) {
      for (int i = first; i < last; ++i) {
        const std::vector<int> beta = roots_[static_cast<std::size_t>(b)].coords;
        int p = 0;
        {
          auto down = beta;
          while (true) {
            down[static_cast<std::size_t>(i)] -= 1;
            if (find_root(down) < 0) break;
            ++p;
          }
        }
        int pairing = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) pairing += beta[j] * cartan_[static_cast<std::size_t>(i)][j];
        if (p - pairing <= 0) continue;
        auto up = beta;
        up[static_cast<std::size_t>(i)] += 1;
        if (find_root(up) >= 0) continue;
        index_.emplace(key_of(up), static_cast<int>(roots_.size()));
        next.push_back(static_cast<int>(roots_.size()));
        roots_.push_back({comp, std::move(up)});
      }
    }
    layer = std::move(next);
  }
}

int RootSystem::find_root(const std::vector<int>& coords) const {
  for (int c : coords) {
    if (c < -127 || c > 127) return -1;
  }
  auto it = index_.find(key_of(coords));
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> RootSystem::positive_roots_of(int comp) const {
  std::vector<int> out;
  for (int k = 0; k < num_positive_; ++k) {
    if (roots_[static_cast<std::size_t>(k)].component == comp) out.push_back(k);
  }
  return out;
}

int RootSystem::mark(int simple) const {
  int comp = component_of_simple(simple);
  return roots_[static_cast<std::size_t>(highest_[static_cast<std::size_t>(comp)])].coords[static_cast<std::size_t>(simple)];
}

Coweight RootSystem::coroot(int root) const {
  QVector v;
  for (int c : coroots_[static_cast<std::size_t>(root)]) v.emplace_back(c);
  return Coweight(std::move(v));
}

int RootSystem::form(int beta, int gamma) const {
  const auto& b = roots_[static_cast<std::size_t>(beta)].coords;
  const auto& c = roots_[static_cast<std::size_t>(gamma)].coords;
  int s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) s += b[i] * gram_[i][j] * c[j];
  }
  return s;
}

int RootSystem::pair_roots(int beta, int gamma) const {
  return 2 * form(beta, gamma) / norms_[static_cast<std::size_t>(gamma)];
}

Rational RootSystem::pair(const Root& root, const Coweight& v) const {
  if (root.coords.size() != v.size() || v.size() != static_cast<std::size_t>(rank_)) {
    throw std::invalid_argument("pair: dimension mismatch");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    int row = 0;
    for (std::size_t j = 0; j < root.coords.size(); ++j) row += cartan_[i][j] * root.coords[j];
    s += v[i] * row;
  }
  return s;
}

Rational pair(const RootSystem& rs, const Root& alpha, const Coweight& v) { return rs.pair(alpha, v); }

WeylElement RootSystem::reflection(int root) const {
  const auto& g = roots_[static_cast<std::size_t>(root)].coords;
  std::vector<std::uint16_t> perm(roots_.size());
  for (std::size_t b = 0; b < roots_.size(); ++b) {
    int c = pair_roots(static_cast<int>(b), root);
    auto img = roots_[b].coords;
    for (std::size_t i = 0; i < img.size(); ++i) img[i] -= c * g[i];
    perm[b] = static_cast<std::uint16_t>(find_root(img));
  }
  return WeylElement(std::move(perm));
}

WeylElement RootSystem::longest_element(std::span<const int> subset) const {
  WeylElement w = WeylElement::identity(roots_.size());
  for (int i : subset) {
    if (i < 0 || i >= rank_) throw std::invalid_argument("longest_element: not a simple root index");
  }
  while (true) {
    auto it = std::find_if(subset.begin(), subset.end(), [&](int i) { return w(i) < num_positive_; });
    if (it == subset.end()) return w;
    w = w * simple_reflections_[static_cast<std::size_t>(*it)];
  }
}

Coweight RootSystem::act(const WeylElement& w, const Coweight& v) const {
  Coweight out = Coweight::zero(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    const Rational& x = v[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    const auto& co = coroots_[static_cast<std::size_t>(w(i))];
    for (std::size_t r = 0; r < co.size(); ++r) {
      if (co[r]) out[r] += x * co[r];
    }
  }
  return out;
}

Coweight RootSystem::act_by_simple_images(std::span<const std::uint16_t> images, const Coweight& v) const {
  Coweight out = Coweight::zero(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    const Rational& x = v[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    const auto& co = coroots_[images[static_cast<std::size_t>(i)]];
    for (std::size_t r = 0; r < co.size(); ++r) {
      if (co[r]) out[r] += x * co[r];
    }
  }
  return out;
}

Root RootSystem::act(const WeylElement& w, const Root& r) const {
  int idx = find_root(r.coords);
  if (idx < 0) throw std::invalid_argument("act: not a root of this system");
  return roots_[static_cast<std::size_t>(w(idx))];
}

IntMatrix RootSystem::matrix(const WeylElement& w) const {
  const auto n = static_cast<std::size_t>(rank_);
  IntMatrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& co = coroots_[static_cast<std::size_t>(w(static_cast<int>(i)))];
    for (std::size_t r = 0; r < n; ++r) m[r][i] = co[r];
  }
  return m;
}

WeylElement RootSystem::from_simple_images(std::span<const std::uint16_t> images) const {
  std::vector<std::uint16_t> perm(roots_.size());
  std::vector<int> img(static_cast<std::size_t>(rank_));
  for (std::size_t b = 0; b < roots_.size(); ++b) {
    std::fill(img.begin(), img.end(), 0);
    const auto& c = roots_[b].coords;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      const auto& s = roots_[images[i]].coords;
      for (std::size_t j = 0; j < s.size(); ++j) img[j] += c[i] * s[j];
    }
    int k = find_root(img);
    if (k < 0) throw std::invalid_argument("from_simple_images: images do not define a Weyl element");
    perm[b] = static_cast<std::uint16_t>(k);
  }
  return WeylElement(std::move(perm));
}

RootSystem build_root_system(const CartanType& ct) { return RootSystem(ct); }

}  // namespace qiso
