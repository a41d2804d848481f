#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace qiso;

namespace {

struct Case {
  std::string type;
  std::string lattice;
};

std::vector<Case> lattice_cases() {
  std::vector<Case> out;
  for (const auto& t : test::simple_types_up_to_8()) {
    if (t == "E8") continue;
    out.push_back({t, "sc"});
    out.push_back({t, "ad"});
  }
  out.push_back({"E8", "ad"});
  for (const auto& t : {"D4", "D5", "D6", "D7", "D8"}) out.push_back({t, "z1"});
  out.push_back({"A3", "z2"});
  out.push_back({"A5", "z2"});
  out.push_back({"A5", "z3"});
  out.push_back({"A7", "z2"});
  out.push_back({"A7", "z4"});
  out.push_back({"D4", "zn"});
  out.push_back({"D6", "zn"});
  out.push_back({"A1xA1", "ad"});
  out.push_back({"A1xA1", "z1[1]"});
  out.push_back({"A1xA1", "z1[1]*z1[2]"});
  out.push_back({"A1xA2", "ad"});
  out.push_back({"A1xA3", "z1[1]*z2[2]"});
  out.push_back({"A2xG2", "ad"});
  out.push_back({"B2xC3", "ad"});
  return out;
}

std::vector<int> component_of(const AffineDiagram& d, const OmegaSet& omega, int comp) {
  std::vector<int> part;
  for (int id : omega.nodes)
    if (d.node(id).component == comp) part.push_back(id);
  return part;
}

}  // namespace

TEST_CASE("adjoint A2: the admissible subsets are the singletons and the whole diagram") {
  const auto L = test::lattice("A2", "ad");
  // independent filter: rotations of the triangle, stabilizer transitive on the subset
  const std::vector<std::vector<int>> rotations = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  std::vector<OmegaSet> expected;
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < 3; ++i)
      if (mask >> i & 1) nodes.push_back(i);
    std::vector<const std::vector<int>*> stab;
    for (const auto& r : rotations) {
      bool fixes = true;
      for (int x : nodes) fixes = fixes && std::find(nodes.begin(), nodes.end(), r[static_cast<std::size_t>(x)]) != nodes.end();
      if (fixes) stab.push_back(&r);
    }
    std::set<int> orbit;
    for (const auto* r : stab) orbit.insert((*r)[static_cast<std::size_t>(nodes[0])]);
    if (orbit.size() == nodes.size()) expected.push_back(OmegaSet(nodes));
  }
  auto q = enumerate_Q(L, 0);
  std::sort(q.begin(), q.end());
  std::sort(expected.begin(), expected.end());
  CHECK(q == expected);
  CHECK(q.size() == 4);
  CHECK(orbits(L.diagram(), q, L.subgroup()).size() == 2);
}

TEST_CASE("simply connected lattices admit only singletons") {
  for (const auto& name : test::simple_types_up_to_8()) {
    const auto L = test::lattice(name, "sc");
    for (int p : {0, 2, 3, 5}) {
      const auto q = enumerate_Q(L, p);
      CHECK(q.size() == p_prime_nodes(L.diagram(), p).size());
      for (const auto& omega : q) CHECK(omega.size() == 1);
      CHECK(orbits(L.diagram(), q, L.subgroup()).size() == q.size());
    }
  }
}

TEST_CASE("types B, C, D in characteristic 2 admit only the affine node") {
  for (const auto& name : {"B3", "B6", "C3", "C5", "D4", "D5", "D8"}) {
    for (const auto& spec : {"sc", "ad"}) {
      const auto L = test::lattice(name, spec);
      CHECK(enumerate_Q(L, 2) == std::vector<OmegaSet>{OmegaSet({0})});
    }
  }
}

TEST_CASE("enumerate_Q refuses diagrams beyond the cap") {
  CHECK_THROWS_AS(enumerate_Q(test::lattice("A24", "ad"), 0), std::length_error);
  CHECK_NOTHROW(enumerate_Q(test::lattice("A7", "ad"), 0, 8));
  CHECK_THROWS_AS(enumerate_Q(test::lattice("A7", "ad"), 0, 7), std::length_error);
}

TEST_CASE("barycentres of faces") {
  const auto d = test::diagram("C4");
  CHECK(lambda_of(*d, OmegaSet({0})) == Coweight::zero(4));
  for (int i = 1; i <= 4; ++i) CHECK(lambda_of(*d, OmegaSet({i})) == Rational(1, d->node(i).mark) * d->varpi(i));
  const auto s0 = lambda_of(*d, OmegaSet({0, 4}));
  CHECK(s0 == Rational(1, 2) * d->varpi(4));
  CHECK(order_mod(s0, make_lattice(d, "ad")) == 2);
  CHECK_THROWS_AS(lambda_of(*d, OmegaSet({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(lambda_of(*test::diagram("A1xA1"), OmegaSet({0})), std::invalid_argument);
}

TEST_CASE("class invariants of exceptional adjoint groups") {
  const auto e6 = test::lattice("E6", "ad");
  const auto c = class_invariants(e6, OmegaSet({4}), 0);
  CHECK(c.order == 3);
  CHECK(format_components(c.centralizer) == "A2xA2xA2");
  CHECK(c.component_structure.order == 3);
  CHECK(c.isolated);
  CHECK(c.excluded_primes == std::vector<int>{3});

  const auto e7 = test::lattice("E7", "ad");
  const auto c2 = class_invariants(e7, OmegaSet({3, 5}), 0);
  CHECK(c2.order == 6);
  CHECK(format_components(c2.centralizer) == "A2xA2xA2");
  CHECK(c2.component_structure.order == 2);
  CHECK_FALSE(c2.isolated);
  CHECK(c2.excluded_primes == std::vector<int>{2, 3});

  CHECK_THROWS_AS(class_invariants(e6, OmegaSet({1, 2}), 0), std::invalid_argument);
  CHECK_THROWS_AS(class_invariants(e6, OmegaSet({4}), 3), std::invalid_argument);
}

TEST_CASE("adjoint C_n: the pair {a_d, a_(n-d)} has centralizer (C_d)^2 x A_(n-2d-1)") {
  for (int n = 3; n <= 8; ++n) {
    const auto L = test::lattice("C" + std::to_string(n), "ad");
    for (int d = 1; 2 * d < n; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      const auto c = class_invariants(L, OmegaSet({d, n - d}), 0);
      CHECK(c.order == 4);
      CHECK(c.component_structure.order == 2);
      CHECK_FALSE(c.isolated);
      CHECK(c.centralizer == normalize_components({{Family::C, d}, {Family::C, d}, {Family::A, n - 2 * d - 1}}));
    }
  }
}

TEST_CASE("subdiagram types") {
  for (const auto& name : test::simple_types_up_to_8()) {
    const auto d = test::diagram(name);
    std::vector<int> rest;
    for (int id = 1; id < d->num_nodes(); ++id) rest.push_back(id);
    CHECK(subdiagram_type(*d, rest) == normalize_components(d->base().type().components()));
  }
  const auto e7 = test::diagram("E7");
  std::vector<int> no_a2;
  for (int id = 0; id < e7->num_nodes(); ++id)
    if (id != 2) no_a2.push_back(id);
  CHECK(format_components(subdiagram_type(*e7, no_a2)) == "A7");
  for (int n = 2; n <= 8; ++n) {
    const auto d = test::diagram("C" + std::to_string(n));
    for (int k = 0; k <= n; ++k) {
      std::vector<int> nodes;
      for (int id = 0; id <= n; ++id)
        if (id != k) nodes.push_back(id);
      CHECK(subdiagram_type(*d, nodes) == normalize_components({{Family::C, k}, {Family::C, n - k}}));
    }
  }
  CHECK(subdiagram_type(*e7, {}).empty());
  CHECK_THROWS_AS(subdiagram_type(*e7, {0, 1, 2, 3, 4, 5, 6, 7}), std::logic_error);
}

TEST_CASE("group structures") {
  const auto whole = [](const std::string& t) {
    const auto d = test::diagram(t);
    return group_structure(d->automorphisms(), make_lattice(d, "ad").subgroup());
  };
  CHECK(whole("E8").to_string() == "1");
  CHECK(whole("A3").to_string() == "Z4");
  CHECK(whole("A5").invariants == std::vector<int>{6});
  CHECK(whole("D4").to_string() == "Z2xZ2");
  CHECK(whole("D5").to_string() == "Z4");
  CHECK(whole("A1xA1").to_string() == "Z2xZ2");
  CHECK(whole("A1xA3").invariants == std::vector<int>{2, 4});
  CHECK(whole("A1xA2").invariants == std::vector<int>{6});
  CHECK(whole("A1xA3").exponent == 4);
}

TEST_CASE("classification properties across types, lattices and characteristics") {
  for (const auto& [type, spec] : lattice_cases()) {
    const auto L = test::lattice(type, spec);
    const auto& d = L.diagram();
    const auto& a = d.automorphisms();
    const bool simple = d.num_components() == 1;
    const bool extreme = spec == "sc" || spec == "ad";
    std::vector<std::size_t> everything(a.size());
    std::iota(everything.begin(), everything.end(), std::size_t{0});
    const int exponent = group_structure(a, everything).exponent;
    for (int p : {0, 2, 3, 5}) {
      CAPTURE(type);
      CAPTURE(spec);
      CAPTURE(p);
      const auto result = classify(L, p);
      REQUIRE_FALSE(result.classes.empty());
      CHECK(result.classes.front().omega == OmegaSet([&] {
              std::vector<int> v;
              for (int c = 0; c < d.num_components(); ++c) v.push_back(d.affine_node(c));
              return v;
            }()));
      std::set<OmegaSet> seen;
      for (const auto& c : result.classes) {
        CHECK(seen.insert(c.omega).second);
        CHECK(in_Q(L, c.omega, p));
        CHECK(alcove_contains(affine_coords(d, c.lambda)));
        CHECK(c.order == order_mod(c.lambda, L));
        CHECK(c.order % c.component_structure.exponent == 0);
        if (p != 0) CHECK(order_mod(c.lambda, L, OrderKind::simply_connected) % p != 0);
        if (spec == "sc") CHECK(c.component_structure.order == 1);
        if (extreme) CHECK(order_by_components(L, c.omega) == c.order);

        bool singletons = true;
        for (int comp = 0; comp < d.num_components(); ++comp) singletons = singletons && component_of(d, c.omega, comp).size() == 1;
        CHECK(c.isolated == singletons);

        // a power of the class by the exponent of the fundamental group is isolated
        const auto reduced = alcove_reduce(d, Rational(exponent) * c.lambda).point;
        const auto coords = affine_coords(d, reduced);
        for (int comp = 0; comp < d.num_components(); ++comp) {
          int nonzero = 0;
          for (int id : d.component_nodes(comp)) nonzero += coords.values[static_cast<std::size_t>(id)] != 0;
          CHECK(nonzero == 1);
        }

        if (simple) {
          std::set<std::int64_t> vertex_orders;
          for (int id : c.omega.nodes) vertex_orders.insert(order_mod(d.varpi(id), L));
          CHECK(vertex_orders.size() == 1);
        }
      }
      for (std::size_t k = 1; k < result.classes.size(); ++k) {
        const auto& x = result.classes[k - 1];
        const auto& y = result.classes[k];
        CHECK((x.isolated > y.isolated || (x.isolated == y.isolated && x.order <= y.order)));
      }
    }
  }
}

TEST_CASE("classes of adjoint A_n correspond to divisors of n+1 prime to p") {
  for (int n = 1; n <= 10; ++n) {
    const auto L = test::lattice("A" + std::to_string(n), "ad");
    for (int p : {0, 2, 3, 5, 7}) {
      std::size_t divisors = 0;
      for (int k = 1; k <= n + 1; ++k) divisors += (n + 1) % k == 0 && (p == 0 || k % p != 0);
      CHECK(classify(L, p).classes.size() == divisors);
    }
  }
}

TEST_CASE("classical labels") {
  const auto a5 = classify(test::lattice("A5", "ad"), 0);
  std::vector<std::string> labels;
  for (const auto& c : a5.classes) labels.push_back(classical_label(a5.lattice, c).value_or("?"));
  CHECK(labels == std::vector<std::string>{"I_6 ⊗ J_1", "I_3 ⊗ J_2", "I_2 ⊗ J_3", "I_1 ⊗ J_6"});

  const auto c4 = classify(test::lattice("C4", "ad"), 0);
  const auto s0 = std::find_if(c4.classes.begin(), c4.classes.end(), [](const auto& c) { return c.omega == OmegaSet({0, 4}); });
  REQUIRE(s0 != c4.classes.end());
  CHECK(classical_label(c4.lattice, *s0) == "s_0");
  CHECK(format_components(s0->centralizer) == "A3");

  const auto so = classify(test::lattice("D8", "z1"), 0);
  for (const auto& c : so.classes) {
    if (c.omega.size() != 1 || c.omega.nodes[0] < 2 || c.omega.nodes[0] > 4) continue;
    const int i = c.omega.nodes[0];
    CHECK(classical_label(so.lattice, c) == "t_" + std::to_string(i));
    CHECK(c.centralizer == normalize_components({{Family::D, i}, {Family::D, 8 - i}}));
  }
  CHECK_FALSE(classical_label(classify(test::lattice("E6", "ad"), 0).lattice, classify(test::lattice("E6", "ad"), 0).classes[0]));
}

TEST_CASE("omega formatting") {
  const auto d = test::diagram("A1xA1");
  CHECK(format_omega(*d, OmegaSet({0, 1, 2})) == "{a0[1],a1[1],a0[2]}");
  CHECK(format_omega(*test::diagram("A3"), OmegaSet({0, 2})) == "{a0,a2}");
}
