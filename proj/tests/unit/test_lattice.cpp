#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace qiso;

namespace {

/// Smallest k with k*v in the lattice generated by Y(T_sc) and `gens`, by direct search over
/// coset representatives: k*v - sum c_i g_i must be integral for some 0 <= c_i < order.
std::int64_t order_by_search(const Coweight& v, const std::vector<Coweight>& extra, int bound) {
  for (std::int64_t k = 1; k <= bound; ++k) {
    const Coweight kv = Rational(k) * v;
    if (kv.in_coroot_lattice()) return k;
    for (const auto& g : extra)
      if ((kv - g).in_coroot_lattice()) return k;
  }
  return -1;
}

}  // namespace

TEST_CASE("lattice specs") {
  for (const auto& name : test::simple_types_up_to_8()) {
    const auto d = test::diagram(name);
    CHECK(make_lattice(d, "sc").size() == 1);
    CHECK(make_lattice(d, "ad").size() == d->automorphisms().size());
  }
  for (int n = 1; n <= 8; ++n) CHECK(test::lattice("A" + std::to_string(n), "ad").size() == static_cast<std::size_t>(n + 1));
  for (int n = 4; n <= 8; ++n) {
    const auto L = test::lattice("D" + std::to_string(n), "z1");
    CHECK(L.size() == 2);
    CHECK(L.size() != L.diagram().automorphisms().size());
  }
  CHECK(test::lattice("D6", "z1,zn").size() == 4);
  CHECK(test::lattice("A1xA1", "z1[1],z1[2]").size() == 4);
  CHECK(test::lattice("A5", "z2").size() == 3);
  CHECK_THROWS_AS(test::lattice("C3", "z2"), std::invalid_argument);
  CHECK_THROWS_AS(test::lattice("E8", "z1"), std::invalid_argument);
  CHECK_THROWS_AS(test::lattice("A3", "foo"), std::invalid_argument);
  CHECK_THROWS_AS(test::lattice("A1xA1", "z1"), std::invalid_argument);
}

TEST_CASE("lattice membership") {
  const auto d = test::diagram("A1");
  const auto sc = make_lattice(d, "sc"), ad = make_lattice(d, "ad");
  CHECK_FALSE(lattice_member(d->varpi(1), sc));
  CHECK(lattice_member(d->varpi(1), ad));
  std::mt19937 rng(1);
  for (const auto& name : {"B3", "D4", "E6", "A2xA1"}) {
    const auto dd = test::diagram(name);
    const auto& rs = dd->base();
    for (const auto& spec : {"sc", "ad"}) {
      const auto L = make_lattice(dd, spec);
      for (int k = 0; k < 20; ++k) {
        Coweight v = Coweight::zero(static_cast<std::size_t>(rs.rank()));
        std::uniform_int_distribution<int> c(-5, 5);
        for (int i = 0; i < rs.rank(); ++i) v = v + Rational(c(rng)) * rs.coroot(i);
        CHECK(lattice_member(v, L));
      }
      for (std::size_t z : L.subgroup()) CHECK(lattice_member(dd->automorphisms()[z].varpi, L));
    }
  }
}

TEST_CASE("orders modulo the lattices") {
  const auto d = test::diagram("A1");
  const auto half = Rational(1, 2) * d->varpi(1);
  CHECK(order_mod(Coweight::zero(1), make_lattice(d, "sc")) == 1);
  CHECK(order_mod(half, make_lattice(d, "sc")) == 4);
  CHECK(order_mod(half, make_lattice(d, "ad")) == 2);

  for (int n = 3; n <= 8; ++n) {
    const auto cn = test::diagram("C" + std::to_string(n));
    const auto L = make_lattice(cn, "ad");
    for (int k = 1; 2 * k < n; ++k) {
      const auto lambda = lambda_of(*cn, OmegaSet({k, n - k}));
      CHECK(order_mod(lambda, L) == 4);
    }
  }
}

TEST_CASE("orders agree with a direct search and divide each other") {
  std::mt19937 rng(9);
  for (const auto& name : {"A3", "B4", "C3", "D4", "D5", "E6", "E7", "A1xA2"}) {
    CAPTURE(name);
    const auto d = test::diagram(name);
    std::vector<Coweight> all;
    for (const auto& z : d->automorphisms().elements()) all.push_back(z.varpi);
    for (const auto& sub : d->automorphisms().subgroups()) {
      std::vector<Coweight> mine;
      for (std::size_t z : sub) mine.push_back(d->automorphisms()[z].varpi);
      const CocharLattice L(d, sub, "test");
      for (int k = 0; k < 20; ++k) {
        const auto v = test::random_coweight(rng, d->base().rank(), 6);
        const auto sc = order_mod(v, L, OrderKind::simply_connected);
        const auto g = order_mod(v, L, OrderKind::group);
        const auto ad = order_mod(v, L, OrderKind::adjoint);
        CHECK(sc == order_by_search(v, {}, 10000));
        CHECK(g == order_by_search(v, mine, 10000));
        CHECK(ad == order_by_search(v, all, 10000));
        CHECK(sc % g == 0);
        CHECK(g % ad == 0);
      }
    }
  }
}

TEST_CASE("characteristic and primes") {
  CHECK_NOTHROW(check_characteristic(0));
  CHECK_NOTHROW(check_characteristic(7));
  CHECK_THROWS_AS(check_characteristic(1), std::invalid_argument);
  CHECK_THROWS_AS(check_characteristic(6), std::invalid_argument);
  CHECK_THROWS_AS(check_characteristic(-3), std::invalid_argument);
  CHECK(prime_factors(12) == std::vector<int>{2, 3});
  CHECK(prime_factors(1).empty());
}

TEST_CASE("nodes of order prime to p") {
  const auto e6 = test::diagram("E6");
  CHECK(p_prime_nodes(*e6, 0).size() == 7);
  const auto e6_3 = p_prime_nodes(*e6, 3);
  CHECK(std::find(e6_3.begin(), e6_3.end(), 4) == e6_3.end());
  for (const auto& name : {"B3", "B5", "C4", "D4", "D7", "C2"}) {
    const auto d = test::diagram(name);
    CHECK(p_prime_nodes(*d, 2) == std::vector<int>{0});
  }
  CHECK(p_prime_nodes(*test::diagram("G2"), 3) == std::vector<int>{0, 1});
}

TEST_CASE("p'-part of the lattice subgroup") {
  const auto a3 = test::diagram("A3");
  const auto& g3 = a3->automorphisms();
  const auto S = make_lattice(a3, "ad").subgroup();
  CHECK(p_prime_part(g3, S, 0) == S);
  CHECK(p_prime_part(g3, S, 2).size() == 1);
  const auto a5 = test::diagram("A5");
  CHECK(p_prime_part(a5->automorphisms(), make_lattice(a5, "ad").subgroup(), 3).size() == 2);
  CHECK(p_prime_part(a5->automorphisms(), make_lattice(a5, "ad").subgroup(), 2).size() == 3);
}

TEST_CASE("almost very good primes") {
  for (const auto& name : test::simple_types_up_to_8()) CHECK(is_almost_very_good(test::lattice(name, "ad"), 0));
  for (int n = 1; n <= 8; ++n) {
    const auto L = test::lattice("A" + std::to_string(n), "ad");
    for (int p : {2, 3, 5, 7}) CHECK(is_almost_very_good(L, p) == ((n + 1) % p != 0));
  }
  CHECK(is_almost_very_good(test::lattice("G2", "ad"), 5));
  CHECK_FALSE(is_almost_very_good(test::lattice("G2", "ad"), 3));
  CHECK(is_almost_very_good(test::lattice("A3", "sc"), 2));
}
