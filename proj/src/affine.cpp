#include "qiso/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qiso {

AutomorphismGroup::AutomorphismGroup(std::vector<DiagramAutomorphism> elements) : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  table_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> p(elements_[b].perm.size());
      for (std::size_t x = 0; x < p.size(); ++x) p[x] = elements_[a].perm[static_cast<std::size_t>(elements_[b].perm[x])];
      auto k = find(p);
      if (!k) throw std::logic_error("automorphism group is not closed under composition");
      table_[a][b] = *k;
    }
  }
  inverse_.assign(n, 0);
  orders_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == 0) inverse_[a] = b;
    }
    std::size_t x = a;
    while (x != 0) {
      x = table_[x][a];
      ++orders_[a];
    }
  }
}

std::optional<std::size_t> AutomorphismGroup::find(const std::vector<int>& perm) const {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k].perm == perm) return k;
  }
  return std::nullopt;
}

std::vector<std::size_t> AutomorphismGroup::generated(const std::vector<std::size_t>& gens) const {
  std::set<std::size_t> group{0};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto x : frontier) {
      for (auto g : gens) {
        auto y = table_[x][g];
        if (group.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

std::vector<std::vector<std::size_t>> AutomorphismGroup::subgroups() const {
  std::set<std::vector<std::size_t>> found;
  for (std::size_t g = 0; g < size(); ++g) found.insert(generated({g}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::size_t>> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<std::size_t> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (found.insert(generated(gens)).second) grew = true;
      }
    }
  }
  std::vector<std::vector<std::size_t>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

AffineDiagram::AffineDiagram(RootSystem base) : base_(std::move(base)) {
  const std::size_t rank = static_cast<std::size_t>(base_.rank());
  simple_node_.assign(rank, -1);
  for (int comp = 0; comp < base_.num_components(); ++comp) {
    std::vector<int> ids;
    AffineNode aff;
    aff.component = comp;
    aff.label = 0;
    aff.root = base_.negative_of(base_.highest_root(comp));
    aff.mark = 1;
    aff.wall = -1;
    ids.push_back(static_cast<int>(nodes_.size()));
    nodes_.push_back(aff);
    varpi_.push_back(Coweight::zero(rank));
    for (int k = 0; k < base_.component_rank(comp); ++k) {
      int simple = base_.component_offset(comp) + k;
      AffineNode nd;
      nd.component = comp;
      nd.label = k + 1;
      nd.root = simple;
      nd.mark = base_.mark(simple);
      nd.wall = 0;
      simple_node_[static_cast<std::size_t>(simple)] = static_cast<int>(nodes_.size());
      ids.push_back(static_cast<int>(nodes_.size()));
      nodes_.push_back(nd);
      varpi_.push_back(base_.fundamental_coweight(simple));
    }
    component_nodes_.push_back(std::move(ids));
  }
  automorphisms_ = diagram_automorphisms(*this);
}

int AffineDiagram::pairing(int alpha, int beta) const {
  return base_.pair_roots(node(alpha).root, node(beta).root);
}

std::vector<std::pair<int, int>> AffineDiagram::adjacency() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_nodes(); ++a) {
    for (int b = a + 1; b < num_nodes(); ++b) {
      if (node(a).component == node(b).component && pairing(a, b) != 0) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string AffineDiagram::label(int id) const {
  const auto& nd = node(id);
  std::string s = "a" + std::to_string(nd.label);
  if (num_components() > 1) s += "[" + std::to_string(nd.component + 1) + "]";
  return s;
}

int AffineDiagram::node_from_label(const std::string& text) const {
  for (int id = 0; id < num_nodes(); ++id) {
    if (label(id) == text) return id;
  }
  throw std::invalid_argument("unknown node label '" + text + "'");
}

AffineDiagram extend(const RootSystem& rs) { return AffineDiagram(rs); }

AffineCoordinates affine_coords(const AffineDiagram& d, const Coweight& lambda) {
  const auto& rs = d.base();
  AffineCoordinates c;
  c.values.assign(static_cast<std::size_t>(d.num_nodes()), Rational(0));
  for (int comp = 0; comp < d.num_components(); ++comp) {
    Rational total = 0;
    const auto& ids = d.component_nodes(comp);
    for (std::size_t k = 1; k < ids.size(); ++k) {
      const auto& nd = d.node(ids[k]);
      Rational v = nd.mark * rs.pair(nd.root, lambda);
      c.values[static_cast<std::size_t>(ids[k])] = v;
      total += v;
    }
    c.values[static_cast<std::size_t>(ids.front())] = 1 - total;
  }
  return c;
}

Coweight from_coords(const AffineDiagram& d, const AffineCoordinates& c) {
  if (c.values.size() != static_cast<std::size_t>(d.num_nodes())) throw std::invalid_argument("from_coords: wrong number of coordinates");
  Coweight out = Coweight::zero(static_cast<std::size_t>(d.base().rank()));
  for (int id = 0; id < d.num_nodes(); ++id) {
    const auto& nd = d.node(id);
    if (nd.affine()) continue;
    out += (c.values[static_cast<std::size_t>(id)] / nd.mark) * d.varpi(id);
  }
  return out;
}

std::string format_coords(const AffineCoordinates& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.values.size(); ++k) {
    if (k) s += ", ";
    s += is_integral(c.values[k]) ? numerator(c.values[k]).str() : to_string(c.values[k]);
  }
  return s + ")";
}

bool alcove_contains(const AffineCoordinates& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](const Rational& q) { return q >= 0; });
}

Coweight reflect_in_wall(const AffineDiagram& d, int id, const Coweight& v) {
  const auto& nd = d.node(id);
  const auto& rs = d.base();
  Rational shift = rs.pair(nd.root, v) - nd.wall;
  return v - shift * rs.coroot(nd.root);
}

AlcoveReduction alcove_reduce(const AffineDiagram& d, const Coweight& lambda) {
  AlcoveReduction out{lambda, {}};
  const auto& rs = d.base();
  while (true) {
    int violated = -1;
    for (int id = 0; id < d.num_nodes(); ++id) {
      if (rs.pair(d.node(id).root, out.point) < d.node(id).wall) {
        violated = id;
        break;
      }
    }
    if (violated < 0) return out;
    out.point = reflect_in_wall(d, violated, out.point);
    out.walls.push_back(violated);
  }
}

Coweight replay(const AffineDiagram& d, const Coweight& lambda, const std::vector<int>& walls) {
  Coweight v = lambda;
  for (int id : walls) v = reflect_in_wall(d, id, v);
  return v;
}

namespace {

struct Generator {
  int node;
  WeylElement weyl;
  std::vector<int> perm;  // on the component's node ids (global ids)
};

}  // namespace

AutomorphismGroup diagram_automorphisms(const AffineDiagram& d) {
  const auto& rs = d.base();
  const std::size_t num_nodes = static_cast<std::size_t>(d.num_nodes());
  std::vector<std::vector<Generator>> per_comp;
  for (int comp = 0; comp < d.num_components(); ++comp) {
    const auto& ids = d.component_nodes(comp);
    std::vector<int> simples;
    for (std::size_t k = 1; k < ids.size(); ++k) simples.push_back(d.node(ids[k]).root);
    const WeylElement w_top = rs.longest_element(simples);
    std::vector<Generator> gens;
    for (int alpha : ids) {
      if (d.node(alpha).mark != 1) continue;
      Generator g{alpha, WeylElement::identity(static_cast<std::size_t>(rs.num_roots())), {}};
      if (!d.node(alpha).affine()) {
        std::vector<int> rest;
        for (int s : simples) {
          if (s != d.node(alpha).root) rest.push_back(s);
        }
        g.weyl = rs.longest_element(rest) * w_top;
      }
      // z(varpi_beta / n_beta) + varpi_alpha = varpi_{z(beta)} / n_{z(beta)}
      for (int beta : ids) {
        Coweight image = rs.act(g.weyl, Rational(1, d.node(beta).mark) * d.varpi(beta)) + d.varpi(alpha);
        int target = -1;
        for (int gamma : ids) {
          if (Rational(1, d.node(gamma).mark) * d.varpi(gamma) == image) target = gamma;
        }
        if (target < 0) throw std::logic_error("diagram automorphism does not permute the alcove vertices");
        g.perm.push_back(target);
      }
      gens.push_back(std::move(g));
    }
    per_comp.push_back(std::move(gens));
  }

  std::vector<DiagramAutomorphism> elements;
  std::vector<std::size_t> digit(per_comp.size(), 0);
  while (true) {
    DiagramAutomorphism z;
    z.perm.resize(num_nodes);
    std::iota(z.perm.begin(), z.perm.end(), 0);
    z.varpi = Coweight::zero(static_cast<std::size_t>(rs.rank()));
    WeylElement w = WeylElement::identity(static_cast<std::size_t>(rs.num_roots()));
    std::string name;
    for (std::size_t comp = 0; comp < per_comp.size(); ++comp) {
      const auto& g = per_comp[comp][digit[comp]];
      const auto& ids = d.component_nodes(static_cast<int>(comp));
      for (std::size_t k = 0; k < ids.size(); ++k) z.perm[static_cast<std::size_t>(ids[k])] = g.perm[k];
      z.choice.push_back(g.node);
      z.varpi += d.varpi(g.node);
      w = w * g.weyl;
      if (!d.node(g.node).affine()) {
        if (!name.empty()) name += "*";
        name += "z" + std::to_string(d.node(g.node).label);
        if (per_comp.size() > 1) name += "[" + std::to_string(comp + 1) + "]";
      }
    }
    z.weyl = std::move(w);
    z.name = name.empty() ? "1" : name;
    elements.push_back(std::move(z));
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == per_comp[pos].size()) digit[pos++] = 0;
    if (pos == digit.size()) break;
  }
  return AutomorphismGroup(std::move(elements));
}

AffineCoordinates act_on_coords(const DiagramAutomorphism& z, const AffineCoordinates& c) {
  if (c.values.size() != z.perm.size()) throw std::invalid_argument("act_on_coords: incompatible diagram");
  AffineCoordinates out;
  out.values.assign(c.values.size(), Rational(0));
  for (std::size_t beta = 0; beta < z.perm.size(); ++beta) out.values[static_cast<std::size_t>(z.perm[beta])] = c.values[beta];
  return out;
}

}  // namespace qiso
