#include "support.hpp"
#include "qiso/weyl_oracle.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace qiso;

namespace {

Coweight vertex(const AffineDiagram& d, int node) { return Rational(1, d.node(node).mark) * d.varpi(node); }

std::size_t fixing_automorphisms(const CocharLattice& L, const Coweight& lambda) {
  const auto& d = L.diagram();
  const auto c = affine_coords(d, lambda);
  std::size_t n = 0;
  for (std::size_t z : L.subgroup()) n += act_on_coords(d.automorphisms()[z], c) == c;
  return n;
}

}  // namespace

TEST_CASE("Weyl group orders") {
  CHECK(enumerate_weyl(build_root_system(CartanType::parse("A1"))).size() == 2);
  CHECK(enumerate_weyl(build_root_system(CartanType::parse("G2"))).size() == 12);
  CHECK(enumerate_weyl(build_root_system(CartanType::parse("F4"))).size() == 1152);
  for (const auto& name : {"A4", "B3", "C4", "D4", "D5", "E6", "A1xB2xG2"}) {
    const auto rs = build_root_system(CartanType::parse(name));
    CHECK(enumerate_weyl(rs).size() == rs.type().weyl_order());
  }
}

TEST_CASE("Weyl group enumeration honours its cap") {
  const auto e8 = build_root_system(CartanType::parse("E8"));
  try {
    (void)enumerate_weyl(e8);
    FAIL("expected the cap to trigger");
  } catch (const std::length_error& e) {
    CHECK(std::string(e.what()).find("696729600") != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_weyl(build_root_system(CartanType::parse("A4")), 100), std::length_error);
}

TEST_CASE("stored elements round-trip through their simple-root images") {
  const auto W = enumerate_weyl(build_root_system(CartanType::parse("B3")));
  std::set<std::vector<std::uint16_t>> seen;
  for (std::size_t k = 0; k < W.size(); ++k) {
    const auto w = W.element(k);
    CHECK(W.index_of(w) == k);
    CHECK(seen.insert(w.permutation()).second);
  }
}

TEST_CASE("integral roots") {
  const auto rs = build_root_system(CartanType::parse("A1"));
  CHECK(phi_of(rs, Coweight::zero(1)).size() == 2);
  CHECK(phi_of(rs, Rational(1, 2) * rs.fundamental_coweight(0)).empty());
  // in the alcove, the simple system is the set of nodes with vanishing coordinate
  for (const auto& name : {"C3", "F4", "E6"}) {
    const auto L = test::lattice(name, "ad");
    const auto& d = L.diagram();
    for (const auto& c : classify(L, 0).classes) {
      const auto coords = affine_coords(d, c.lambda);
      std::vector<int> zero_nodes;
      for (int id = 0; id < d.num_nodes(); ++id)
        if (coords.values[static_cast<std::size_t>(id)] == 0) zero_nodes.push_back(id);
      CHECK(subsystem_type(d.base(), phi_of(d.base(), c.lambda)) == subdiagram_type(d, zero_nodes));
    }
  }
}

TEST_CASE("stabilizers in the two lattices of A1") {
  const auto d = test::diagram("A1");
  const auto W = enumerate_weyl(d->base());
  const auto lambda = Rational(1, 2) * d->varpi(1);
  CHECK(stabilizer_W(W, Coweight::zero(1), make_lattice(d, "sc")).size() == 2);
  CHECK(stabilizer_W(W, lambda, make_lattice(d, "ad")).size() == 2);
  CHECK(stabilizer_W(W, lambda, make_lattice(d, "sc")).size() == 1);
}

TEST_CASE("decomposition of stabilizers") {
  const auto a2 = test::lattice("A2", "ad");
  const auto W2 = enumerate_weyl(a2.diagram().base());
  {
    const auto dec = decompose(W2, stabilizer_W(W2, Coweight::zero(2), a2), Coweight::zero(2), a2.diagram());
    CHECK(dec.reflection_part.size() == 6);
    CHECK(dec.complement.size() == 1);
    CHECK(dec.semidirect);
  }
  {
    const auto regular = lambda_of(a2.diagram(), OmegaSet({0, 1, 2}));
    const auto dec = decompose(W2, stabilizer_W(W2, regular, a2), regular, a2.diagram());
    CHECK(dec.reflection_part.size() == 1);
    CHECK(dec.complement.size() == 3);
    CHECK(dec.semidirect);
  }
  {
    const auto c2 = test::lattice("C2", "ad");
    const auto W = enumerate_weyl(c2.diagram().base());
    const auto s = lambda_of(c2.diagram(), OmegaSet({0, 2}));
    const auto dec = decompose(W, stabilizer_W(W, s, c2), s, c2.diagram());
    CHECK(dec.reflection_part.size() == 2);
    CHECK(format_components(subsystem_type(c2.diagram().base(), phi_of(c2.diagram().base(), s))) == "A1");
    CHECK(dec.complement.size() == 2);
  }
  CHECK_THROWS_AS(decompose(W2, {0}, -a2.diagram().varpi(1), a2.diagram()), std::invalid_argument);
}

TEST_CASE("every stabilizer element factors as complement times reflection part") {
  for (const auto& [type, spec] : std::vector<std::pair<std::string, std::string>>{
           {"A3", "ad"}, {"B3", "ad"}, {"C3", "ad"}, {"D4", "ad"}, {"D4", "z1"}, {"G2", "ad"}, {"A1xA2", "ad"}}) {
    CAPTURE(type);
    const auto L = test::lattice(type, spec);
    const auto W = enumerate_weyl(L.diagram().base());
    for (const auto& c : classify(L, 0).classes) {
      const auto stab = stabilizer_W(W, c.lambda, L);
      const auto dec = decompose(W, stab, c.lambda, L.diagram());
      CHECK(dec.semidirect);
      CHECK(dec.complement.size() == c.component_structure.order);
      CHECK(dec.complement.size() == fixing_automorphisms(L, c.lambda));
      CHECK(dec.reflection_part.size() == weyl_group_order(c.centralizer));
      std::set<std::size_t> products;
      for (std::size_t a : dec.complement)
        for (std::size_t r : dec.reflection_part) products.insert(*W.index_of(W.element(a) * W.element(r)));
      CHECK(products == std::set<std::size_t>(stab.begin(), stab.end()));
    }
  }
}

TEST_CASE("fixed-space dimensions") {
  const auto rs = build_root_system(CartanType::parse("A2"));
  CHECK(fixed_dim(rs, {}) == 2);
  CHECK(fixed_dim(rs, {rs.simple_reflection(0), rs.simple_reflection(1)}) == 0);
  CHECK(fixed_dim(rs, {rs.simple_reflection(0)}) == 1);
  const auto d = test::diagram("A2");
  for (const auto& z : d->automorphisms().elements())
    if (z.name == "z1") CHECK(fixed_dim(rs, {*z.weyl}) == 0);
  CHECK(fixed_dim(std::vector<IntMatrix>{}, 5) == 5);
}

TEST_CASE("brute-force quasi-isolation") {
  const auto a2 = test::lattice("A2", "ad");
  const auto W2 = enumerate_weyl(a2.diagram().base());
  const auto origin = is_quasi_isolated_bruteforce(W2, Coweight::zero(2), a2);
  CHECK(origin.quasi_isolated);
  CHECK(origin.isolated);
  const auto regular = is_quasi_isolated_bruteforce(W2, lambda_of(a2.diagram(), OmegaSet({0, 1, 2})), a2);
  CHECK(regular.quasi_isolated);
  CHECK_FALSE(regular.isolated);
  const auto generic = is_quasi_isolated_bruteforce(W2, Rational(1, 5) * a2.diagram().varpi(1), a2);
  CHECK_FALSE(generic.quasi_isolated);

  for (int n = 2; n <= 4; ++n) {
    const auto L = test::lattice("C" + std::to_string(n), "sc");
    const auto W = enumerate_weyl(L.diagram().base());
    for (int i = 0; i <= n; ++i) {
      const auto q = is_quasi_isolated_bruteforce(W, vertex(L.diagram(), i), L);
      CHECK(q.quasi_isolated);
      CHECK(q.isolated);
    }
  }
}

TEST_CASE("conjugacy tests agree") {
  for (const auto& [type, spec] : std::vector<std::pair<std::string, std::string>>{
           {"A3", "ad"}, {"A3", "z2"}, {"D4", "z1"}, {"B3", "ad"}, {"A1xA1", "z1[1]*z1[2]"}}) {
    CAPTURE(type);
    const auto L = test::lattice(type, spec);
    const auto W = enumerate_weyl(L.diagram().base());
    const auto& d = L.diagram();
    std::vector<Coweight> points;
    for (int mask = 1; mask < (1 << d.num_nodes()); ++mask) {
      std::vector<int> nodes;
      for (int id = 0; id < d.num_nodes(); ++id)
        if (mask >> id & 1) nodes.push_back(id);
      try {
        points.push_back(lambda_of(d, OmegaSet(nodes)));
      } catch (const std::invalid_argument&) {
      }
    }
    for (const auto& x : points)
      for (const auto& y : points) CHECK(conjugate_bruteforce(W, L, x, y) == conjugate_by_automorphisms(L, x, y));
  }
}

TEST_CASE("exhaustive search") {
  for (const auto& name : {"B3", "C3", "D4"}) {
    for (const auto& spec : {"sc", "ad"}) {
      const auto L = test::lattice(name, spec);
      const auto W = enumerate_weyl(L.diagram().base());
      for (int max_den : {2, 4}) {
        const auto r = exhaustive_search(W, L, 2, max_den);
        REQUIRE(r.orbits.size() == 1);
        CHECK(r.orbits[0].lambda == Coweight::zero(static_cast<std::size_t>(L.diagram().base().rank())));
        CHECK(r.problems.empty());
      }
    }
  }
  {
    const auto L = test::lattice("A2", "ad");
    const auto r = exhaustive_search(enumerate_weyl(L.diagram().base()), L, 0, 6);
    CHECK(r.orbits.size() == 2);
    CHECK(r.problems.empty());
  }
  for (const auto& name : {"A3", "B3", "C3", "G2"}) {
    const auto L = test::lattice(name, "sc");
    int lcm = 1;
    for (const auto& node : L.diagram().nodes()) lcm = std::lcm(lcm, node.mark);
    const auto r = exhaustive_search(enumerate_weyl(L.diagram().base()), L, 0, lcm);
    CHECK(r.orbits.size() == static_cast<std::size_t>(L.diagram().num_nodes()));
    for (const auto& o : r.orbits) CHECK(o.component_order == 1);
  }
  const auto big = test::lattice("A3", "ad");
  CHECK(grid_size(big.diagram(), 4) == 35);
  CHECK_THROWS_AS(exhaustive_search(enumerate_weyl(big.diagram().base()), big, 0, 12, 100), std::length_error);
}
