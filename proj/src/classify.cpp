#include "qiso/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qiso {

OmegaSet::OmegaSet(std::vector<int> ids) : nodes(std::move(ids)) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
}

bool OmegaSet::contains(int id) const { return std::binary_search(nodes.begin(), nodes.end(), id); }

std::string GroupStructure::to_string() const {
  if (invariants.empty()) return "1";
  std::string s;
  for (int k : invariants) {
    if (!s.empty()) s += "x";
    s += "Z" + std::to_string(k);
  }
  return s;
}

OmegaSet apply(const DiagramAutomorphism& z, const OmegaSet& omega) {
  std::vector<int> image;
  for (int id : omega.nodes) image.push_back(z.perm[static_cast<std::size_t>(id)]);
  return OmegaSet(std::move(image));
}

std::vector<std::size_t> set_stabilizer(const AffineDiagram& d, const std::vector<std::size_t>& group, const OmegaSet& omega) {
  std::vector<std::size_t> out;
  for (auto z : group) {
    if (apply(d.automorphisms()[z], omega) == omega) out.push_back(z);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> split_by_component(const AffineDiagram& d, const OmegaSet& omega) {
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(d.num_components()));
  for (int id : omega.nodes) {
    if (id < 0 || id >= d.num_nodes()) throw std::invalid_argument("node id out of range");
    parts[static_cast<std::size_t>(d.node(id).component)].push_back(id);
  }
  return parts;
}

bool admissible(const CocharLattice& L, const OmegaSet& omega, int p, const std::vector<bool>& eligible) {
  const auto& d = L.diagram();
  for (int id : omega.nodes) {
    if (!eligible[static_cast<std::size_t>(id)]) return false;
  }
  const auto parts = split_by_component(d, omega);
  for (const auto& part : parts) {
    if (part.empty()) return false;
    if (p != 0 && part.size() % static_cast<std::size_t>(p) == 0) return false;
  }
  const auto stab = set_stabilizer(d, L.subgroup(), omega);
  for (const auto& part : parts) {
    std::set<int> orbit;
    for (auto z : stab) orbit.insert(d.automorphisms()[z].perm[static_cast<std::size_t>(part.front())]);
    if (orbit.size() != part.size()) return false;
  }
  return true;
}

std::vector<bool> eligible_mask(const AffineDiagram& d, int p) {
  std::vector<bool> mask(static_cast<std::size_t>(d.num_nodes()), false);
  for (int id : p_prime_nodes(d, p)) mask[static_cast<std::size_t>(id)] = true;
  return mask;
}

SimpleType recognize(const AffineDiagram& d, const std::vector<int>& comp) {
  const int k = static_cast<int>(comp.size());
  const auto& rs = d.base();
  std::map<int, std::vector<int>> nbr;
  int edges = 0;
  int max_bond = 1;
  std::pair<int, int> multiple{-1, -1};
  int multiple_count = 0;
  for (int a : comp) nbr[a];
  for (std::size_t x = 0; x < comp.size(); ++x) {
    for (std::size_t y = x + 1; y < comp.size(); ++y) {
      int a = comp[x], b = comp[y];
      int bond = d.pairing(a, b) * d.pairing(b, a);
      if (bond == 0) continue;
      if (bond > 3) throw std::logic_error("subdiagram has an affine component");
      nbr[a].push_back(b);
      nbr[b].push_back(a);
      ++edges;
      if (bond > 1) {
        max_bond = std::max(max_bond, bond);
        multiple = {a, b};
        ++multiple_count;
      }
    }
  }
  if (edges != k - 1) throw std::logic_error("subdiagram has an affine component");
  if (k == 1) return {Family::A, 1};
  int max_degree = 0;
  for (const auto& [node, ns] : nbr) max_degree = std::max(max_degree, static_cast<int>(ns.size()));
  auto norm = [&](int id) { return rs.form(d.node(id).root, d.node(id).root); };

  if (max_bond == 3) {
    if (k != 2) throw std::logic_error("subdiagram has an affine component");
    return {Family::G, 2};
  }
  if (max_bond == 2) {
    if (multiple_count != 1 || max_degree > 2) throw std::logic_error("subdiagram has an affine component");
    if (k == 2) return canonical({Family::B, 2});
    auto [u, v] = multiple;
    const bool u_end = nbr[u].size() == 1;
    const bool v_end = nbr[v].size() == 1;
    if (!u_end && !v_end) {
      if (k != 4) throw std::logic_error("subdiagram has an affine component");
      return {Family::F, 4};
    }
    int end = u_end ? u : v;
    int other = u_end ? v : u;
    return canonical({norm(end) < norm(other) ? Family::B : Family::C, k});
  }
  if (max_degree <= 2) return {Family::A, k};
  int branch = -1;
  for (const auto& [node, ns] : nbr) {
    if (ns.size() == 3) {
      if (branch >= 0) throw std::logic_error("subdiagram has an affine component");
      branch = node;
    } else if (ns.size() > 3) {
      throw std::logic_error("subdiagram has an affine component");
    }
  }
  std::vector<int> arms;
  for (int start : nbr[branch]) {
    int prev = branch, cur = start, len = 1;
    while (nbr[cur].size() == 2) {
      int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return canonical({Family::D, k});
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, k};
  throw std::logic_error("subdiagram has an affine component");
}

std::size_t power(const AutomorphismGroup& a, std::size_t x, std::int64_t m) {
  std::size_t r = 0;
  for (std::int64_t k = 0; k < m; ++k) r = a.multiply(r, x);
  return r;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

bool class_less(const QuasiIsolatedClass& x, const QuasiIsolatedClass& y) {
  if (x.isolated != y.isolated) return x.isolated;
  if (x.order != y.order) return x.order < y.order;
  if (x.omega.size() != y.omega.size()) return x.omega.size() < y.omega.size();
  return x.omega < y.omega;
}

}  // namespace

bool in_Q(const CocharLattice& L, const OmegaSet& omega, int p) {
  return admissible(L, omega, p, eligible_mask(L.diagram(), p));
}

std::vector<OmegaSet> enumerate_Q(const CocharLattice& L, int p, std::size_t cap) {
  const auto& d = L.diagram();
  const auto nodes = p_prime_nodes(d, p);
  if (nodes.size() > cap || nodes.size() >= 63) {
    throw std::length_error("enumerate_Q: " + std::to_string(nodes.size()) + " eligible nodes exceed the subset cap of " +
                            std::to_string(cap) + "; raise the cap to proceed");
  }
  const auto mask = eligible_mask(d, p);
  std::vector<OmegaSet> out;
  const std::uint64_t total = std::uint64_t{1} << nodes.size();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    std::vector<int> ids;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (bits >> k & 1U) ids.push_back(nodes[k]);
    }
    OmegaSet omega(std::move(ids));
    if (admissible(L, omega, p, mask)) out.push_back(std::move(omega));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Coweight lambda_of(const AffineDiagram& d, const OmegaSet& omega) {
  Coweight lambda = Coweight::zero(static_cast<std::size_t>(d.base().rank()));
  for (const auto& part : split_by_component(d, omega)) {
    if (part.empty()) throw std::invalid_argument("omega misses a component of the diagram");
    const int mark = d.node(part.front()).mark;
    Coweight sum = Coweight::zero(lambda.size());
    for (int id : part) {
      if (d.node(id).mark != mark) throw std::invalid_argument("omega mixes nodes of different marks in one component");
      sum += d.varpi(id);
    }
    lambda += Rational(1, mark * static_cast<int>(part.size())) * sum;
  }
  return lambda;
}

std::vector<OmegaSet> orbits(const AffineDiagram& d, const std::vector<OmegaSet>& Q, const std::vector<std::size_t>& group) {
  std::set<OmegaSet> reps;
  for (const auto& omega : Q) {
    OmegaSet best = omega;
    for (auto z : group) best = std::min(best, apply(d.automorphisms()[z], omega));
    reps.insert(best);
  }
  return {reps.begin(), reps.end()};
}

std::vector<SimpleType> subdiagram_type(const AffineDiagram& d, const std::vector<int>& nodes) {
  std::vector<bool> in(static_cast<std::size_t>(d.num_nodes()), false);
  for (int id : nodes) in[static_cast<std::size_t>(id)] = true;
  std::vector<bool> seen(in.size(), false);
  std::vector<SimpleType> parts;
  for (int start : nodes) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (int other = 0; other < d.num_nodes(); ++other) {
        auto o = static_cast<std::size_t>(other);
        if (!in[o] || seen[o] || other == comp[k]) continue;
        if (d.node(other).component != d.node(comp[k]).component || d.pairing(comp[k], other) == 0) continue;
        seen[o] = true;
        comp.push_back(other);
      }
    }
    parts.push_back(recognize(d, comp));
  }
  sort_components(parts);
  return parts;
}

GroupStructure group_structure(const AutomorphismGroup& a, const std::vector<std::size_t>& subgroup) {
  GroupStructure g;
  g.order = subgroup.size();
  for (auto x : subgroup) g.exponent = static_cast<int>(lcm64(g.exponent, a.order(x)));
  // Elementary divisors per prime from the sizes of the q^k-torsion subgroups.
  std::vector<std::vector<int>> prime_powers;
  for (int q : prime_factors(static_cast<std::int64_t>(g.order))) {
    std::vector<std::size_t> torsion{1};
    std::int64_t qk = 1;
    while (true) {
      qk *= q;
      std::size_t count = 0;
      for (auto x : subgroup) {
        if (power(a, x, qk) == 0) ++count;
      }
      torsion.push_back(count);
      if (count == torsion[torsion.size() - 2]) break;
    }
    // at_least[k] = number of cyclic factors of order >= q^k
    std::vector<int> at_least(torsion.size(), 0);
    for (std::size_t k = 1; k < torsion.size(); ++k) {
      std::size_t ratio = torsion[k] / torsion[k - 1];
      int r = 0;
      while (ratio > 1) {
        ratio /= static_cast<std::size_t>(q);
        ++r;
      }
      at_least[k] = r;
    }
    std::vector<int> orders;
    for (std::size_t k = 1; k < at_least.size(); ++k) {
      int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      int qpow = 1;
      for (std::size_t e = 0; e < k; ++e) qpow *= q;
      for (int c = 0; c < exact; ++c) orders.push_back(qpow);
    }
    std::sort(orders.rbegin(), orders.rend());
    prime_powers.push_back(std::move(orders));
  }
  std::size_t factors = 0;
  for (const auto& v : prime_powers) factors = std::max(factors, v.size());
  for (std::size_t k = 0; k < factors; ++k) {
    int f = 1;
    for (const auto& v : prime_powers) {
      if (k < v.size()) f *= v[k];
    }
    g.invariants.push_back(f);
  }
  std::reverse(g.invariants.begin(), g.invariants.end());
  return g;
}

std::int64_t order_by_components(const CocharLattice& L, const OmegaSet& omega) {
  const auto& d = L.diagram();
  std::int64_t out = 1;
  for (const auto& part : split_by_component(d, omega)) {
    if (part.empty()) throw std::invalid_argument("omega misses a component of the diagram");
    const std::int64_t o = order_mod(d.varpi(part.front()), L);
    out = lcm64(out, d.node(part.front()).mark * o * static_cast<std::int64_t>(part.size()));
  }
  return out;
}

QuasiIsolatedClass class_invariants(const CocharLattice& L, const OmegaSet& omega, int p) {
  check_characteristic(p);
  if (!in_Q(L, omega, p)) throw std::invalid_argument("omega is not admissible for this group and characteristic");
  const auto& d = L.diagram();
  QuasiIsolatedClass c;
  c.omega = omega;
  c.lambda = lambda_of(d, omega);
  c.order = order_mod(c.lambda, L);

  c.isolated = true;
  for (const auto& part : split_by_component(d, omega)) c.isolated = c.isolated && part.size() == 1;

  std::vector<int> rest;
  for (int id = 0; id < d.num_nodes(); ++id) {
    if (!omega.contains(id)) rest.push_back(id);
  }
  c.centralizer = subdiagram_type(d, rest);
  c.component_group = set_stabilizer(d, L.subgroup(), omega);
  c.component_structure = group_structure(d.automorphisms(), c.component_group);

  std::set<int> candidates;
  for (int q : prime_factors(static_cast<std::int64_t>(L.size()))) candidates.insert(q);
  for (const auto& part : split_by_component(d, omega)) {
    for (int q : prime_factors(static_cast<std::int64_t>(part.size()))) candidates.insert(q);
    for (int id : part) {
      const Coweight vertex = Rational(1, d.node(id).mark) * d.varpi(id);
      const std::int64_t n = d.node(id).mark * order_mod(vertex, d, OrderKind::simply_connected);
      for (int q : prime_factors(n)) candidates.insert(q);
    }
  }
  for (int q : candidates) {
    if (!in_Q(L, omega, q)) c.excluded_primes.push_back(q);
  }
  return c;
}

Classification classify(const CocharLattice& L, int p) {
  check_characteristic(p);
  const auto& d = L.diagram();
  const auto Q = enumerate_Q(L, p);
  const auto group = p_prime_part(d.automorphisms(), L.subgroup(), p);
  Classification out{L, p, {}};
  for (const auto& omega : orbits(d, Q, group)) out.classes.push_back(class_invariants(L, omega, p));
  std::sort(out.classes.begin(), out.classes.end(), class_less);
  return out;
}

std::string format_omega(const AffineDiagram& d, const OmegaSet& omega) {
  std::string s = "{";
  for (std::size_t k = 0; k < omega.nodes.size(); ++k) {
    if (k) s += ",";
    s += d.label(omega.nodes[k]);
  }
  return s + "}";
}

std::vector<std::string> standard_generators(SimpleType t) {
  switch (t.family) {
    case Family::A:
    case Family::B:
      return {"z1"};
    case Family::C:
      return {"zn"};
    case Family::D:
      if (t.rank % 2 == 0) return {"z1", "zn"};
      return {"zn"};
    case Family::E:
      if (t.rank == 6) return {"z1"};
      if (t.rank == 7) return {"z7"};
      return {};
    default:
      return {};
  }
}

std::optional<std::string> classical_label(const CocharLattice& L, const QuasiIsolatedClass& c) {
  const auto& d = L.diagram();
  if (d.num_components() != 1) return std::nullopt;
  const SimpleType t = d.base().type().components().front();
  const int n = t.rank;
  const auto& a = d.automorphisms();
  const bool adjoint = L.size() == a.size();
  const bool simply_connected = L.size() == 1;
  bool special_orthogonal = false;
  if (t.family == Family::D && !adjoint) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].choice.front() == 1 && a.generated({k}) == L.subgroup()) special_orthogonal = true;
    }
  }
  std::vector<std::pair<std::string, OmegaSet>> named;
  auto add = [&](std::string name, std::vector<int> ids) { named.emplace_back(std::move(name), OmegaSet(std::move(ids))); };
  auto idx = [](std::string base, int i) { return base + "_" + std::to_string(i); };

  switch (t.family) {
    case Family::A:
      if (adjoint) {
        const int d_ = static_cast<int>(c.omega.size());
        if ((n + 1) % d_ == 0) return "I_" + std::to_string((n + 1) / d_) + " ⊗ J_" + std::to_string(d_);
      }
      return std::nullopt;
    case Family::B:
      if (!adjoint) return std::nullopt;
      add("t_0", {0});
      add("t_1", {0, 1});
      for (int i = 2; i <= n; ++i) add(idx("t", i), {i});
      break;
    case Family::C:
      if (simply_connected) {
        for (int i = 0; i <= n; ++i) add(idx("t", i), {i});
      } else if (adjoint) {
        for (int i = 0; 2 * i <= n; ++i) add(idx("t", i), {i});
        for (int i = 0; 2 * i < n; ++i) add(idx("s", i), {i, n - i});
      } else {
        return std::nullopt;
      }
      break;
    case Family::D:
      if (adjoint) {
        add("t_0", {0});
        add("t_1", {0, 1});
        for (int i = 2; 2 * i <= n; ++i) add(idx("t", i), {i});
        add("s_1", {0, 1, n - 1, n});
        for (int i = 2; 2 * i < n; ++i) add(idx("s", i), {i, n - i});
        if (n % 2 == 0) {
          add("s_0", {0, n - 1});
          add("s_0'", {0, n});
        }
      } else if (special_orthogonal) {
        add("t_0", {0});
        add("t_1", {0, 1});
        for (int i = 2; i <= n - 2; ++i) add(idx("t", i), {i});
        add(idx("t", n - 1), {n - 1, n});
        add(idx("t", n), {n});
      } else {
        return std::nullopt;
      }
      break;
    default:
      return std::nullopt;
  }
  for (auto z : L.subgroup()) {
    const OmegaSet image = apply(a[z], c.omega);
    for (const auto& [name, set] : named) {
      if (set == image) return name;
    }
  }
  return std::nullopt;
}

}  // namespace qiso
