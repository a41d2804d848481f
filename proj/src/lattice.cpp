#include "qiso/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace qiso {

CocharLattice::CocharLattice(std::shared_ptr<const AffineDiagram> diagram, std::vector<std::size_t> subgroup, std::string spec)
    : diagram_(std::move(diagram)), subgroup_(std::move(subgroup)), spec_(std::move(spec)) {
  const auto& a = diagram_->automorphisms();
  member_.assign(a.size(), false);
  for (auto z : subgroup_) {
    if (z >= a.size()) throw std::invalid_argument("lattice subgroup index out of range");
    member_[z] = true;
  }
  std::sort(subgroup_.begin(), subgroup_.end());
  for (auto x : subgroup_) {
    for (auto y : subgroup_) {
      if (!member_[a.multiply(x, y)]) throw std::invalid_argument("lattice data is not a subgroup");
    }
  }
  if (subgroup_.empty() || subgroup_.front() != 0) throw std::invalid_argument("lattice data is not a subgroup");
}

bool CocharLattice::contains(std::size_t z) const { return z < member_.size() && member_[z]; }

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string_view::npos ? std::string() : std::string(s.substr(b, e - b + 1));
}

std::size_t resolve_generator(const AffineDiagram& d, const std::string& text) {
  static const std::regex pattern(R"(z(\d+|n)(?:\[(\d+)\])?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("malformed lattice generator '" + text + "'");
  int comp = 0;
  if (m[2].matched) {
    comp = std::stoi(m[2].str()) - 1;
  } else if (d.num_components() > 1) {
    throw std::invalid_argument("generator '" + text + "' needs a component suffix such as [1]");
  }
  if (comp < 0 || comp >= d.num_components()) throw std::invalid_argument("generator '" + text + "' names no component");
  const int rank = d.base().component_rank(comp);
  const int label = m[1].str() == "n" ? rank : std::stoi(m[1].str());
  if (label < 0 || label > rank) throw std::invalid_argument("generator '" + text + "' names no node");
  const int node = d.component_nodes(comp)[static_cast<std::size_t>(label)];
  const auto& a = d.automorphisms();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& z = a[k];
    bool match = true;
    for (int c = 0; c < d.num_components(); ++c) {
      int want = c == comp ? node : d.affine_node(c);
      if (z.choice[static_cast<std::size_t>(c)] != want) match = false;
    }
    if (match) return k;
  }
  throw std::invalid_argument("'" + text + "' is not a diagram automorphism (its node has mark " +
                              std::to_string(d.node(node).mark) + ")");
}

}  // namespace

CocharLattice make_lattice(std::shared_ptr<const AffineDiagram> d, std::string_view spec) {
  const std::string s = trim(spec);
  const auto& a = d->automorphisms();
  if (s == "sc") return CocharLattice(d, {0}, s);
  if (s == "ad") {
    std::vector<std::size_t> all(a.size());
    std::iota(all.begin(), all.end(), 0);
    return CocharLattice(d, all, s);
  }
  if (s.empty()) throw std::invalid_argument("empty lattice spec");
  std::vector<std::size_t> gens;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    const std::string word = trim(std::string_view(s).substr(start, end - start));
    std::size_t product = 0, from = 0;
    while (from <= word.size()) {
      auto star = word.find('*', from);
      if (star == std::string::npos) star = word.size();
      product = a.multiply(product, resolve_generator(*d, trim(std::string_view(word).substr(from, star - from))));
      from = star + 1;
    }
    gens.push_back(product);
    start = end + 1;
  }
  return CocharLattice(d, a.generated(gens), s);
}

std::optional<std::size_t> coset_of(const AffineDiagram& d, const Coweight& v) {
  const auto& a = d.automorphisms();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if ((v - a[k].varpi).in_coroot_lattice()) return k;
  }
  return std::nullopt;
}

bool lattice_member(const Coweight& v, const CocharLattice& L) {
  auto z = coset_of(L.diagram(), v);
  return z && L.contains(*z);
}

std::int64_t order_mod(const Coweight& v, const AffineDiagram& d, OrderKind kind) {
  const auto& rs = d.base();
  Integer den = 1;
  for (int j = 0; j < rs.rank(); ++j) den = boost::multiprecision::lcm(den, denominator(rs.pair(j, v)));
  const std::int64_t o_ad = to_int64(den);
  if (kind == OrderKind::adjoint) return o_ad;
  auto z = coset_of(d, Rational(o_ad) * v);
  if (!z) throw std::logic_error("order_mod: multiple of the adjoint order left Y(T_ad)");
  return o_ad * d.automorphisms().order(*z);
}

std::int64_t order_mod(const Coweight& v, const CocharLattice& L, OrderKind kind) {
  const auto& d = L.diagram();
  if (kind != OrderKind::group) return order_mod(v, d, kind);
  const std::int64_t o_ad = order_mod(v, d, OrderKind::adjoint);
  auto z = coset_of(d, Rational(o_ad) * v);
  if (!z) throw std::logic_error("order_mod: multiple of the adjoint order left Y(T_ad)");
  const auto& a = d.automorphisms();
  std::int64_t m = 1;
  std::size_t power = *z;
  while (!L.contains(power)) {
    power = a.multiply(power, *z);
    ++m;
  }
  return o_ad * m;
}

void check_characteristic(int p) {
  if (p == 0) return;
  if (p < 2) throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(p));
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(p));
  }
}

std::vector<int> prime_factors(std::int64_t n) {
  std::vector<int> out;
  if (n < 0) n = -n;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(static_cast<int>(q));
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

std::vector<int> p_prime_nodes(const AffineDiagram& d, int p) {
  check_characteristic(p);
  std::vector<int> out;
  for (int id = 0; id < d.num_nodes(); ++id) {
    if (p == 0) {
      out.push_back(id);
      continue;
    }
    Coweight vertex = Rational(1, d.node(id).mark) * d.varpi(id);
    if (order_mod(vertex, d, OrderKind::simply_connected) % p != 0) out.push_back(id);
  }
  return out;
}

std::vector<std::size_t> p_prime_part(const AutomorphismGroup& a, const std::vector<std::size_t>& S, int p) {
  check_characteristic(p);
  if (p == 0) return S;
  std::vector<std::size_t> out;
  for (auto z : S) {
    if (a.order(z) % p != 0) out.push_back(z);
  }
  return out;
}

bool is_almost_very_good(const CocharLattice& L, int p) {
  check_characteristic(p);
  if (p == 0) return true;
  for (const auto& nd : L.diagram().nodes()) {
    if (nd.mark % p == 0) return false;
  }
  return L.size() % static_cast<std::size_t>(p) != 0;
}

}  // namespace qiso
