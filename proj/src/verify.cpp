#include "qiso/verify.hpp"

#include <numeric>

namespace qiso {

int default_max_den(const Classification& c) {
  std::int64_t l = 1;
  for (const auto& k : c.classes) l = std::lcm(l, k.order);
  return static_cast<int>(2 * l);
}

namespace {

std::string tuple_text(std::int64_t order, std::uint64_t refl, const std::vector<SimpleType>& type, std::size_t comp,
                       bool isolated) {
  return "order " + std::to_string(order) + ", |W°| " + std::to_string(refl) + " (" + format_components(type) +
         "), |A| " + std::to_string(comp) + ", " + (isolated ? "isolated" : "not isolated");
}

}  // namespace

VerifyReport verify(const CocharLattice& L, int p, const VerifyOptions& options) {
  const auto& d = L.diagram();
  const Classification c = classify(L, p);
  const WeylGroup W(d.base(), options.weyl_cap);

  VerifyReport report;
  report.max_den = options.max_den.value_or(default_max_den(c));
  report.weyl_order = W.size();
  const SearchResult search = exhaustive_search(W, L, p, report.max_den, options.point_cap);
  report.points = search.points;
  report.quasi_isolated_points = search.quasi_isolated_points;
  report.classes = c.classes.size();
  report.oracle_orbits = search.orbits.size();
  report.mismatches = search.problems;

  std::vector<int> used(search.orbits.size(), 0);
  for (const auto& k : c.classes) {
    const std::string name = format_omega(d, k.omega);
    const std::uint64_t refl = weyl_group_order(k.centralizer);
    std::vector<std::size_t> hits;
    for (std::size_t o = 0; o < search.orbits.size(); ++o) {
      const bool brute = conjugate_bruteforce(W, L, k.lambda, search.orbits[o].lambda);
      if (brute != conjugate_by_automorphisms(L, k.lambda, search.orbits[o].lambda)) {
        report.mismatches.push_back(name + ": conjugacy by automorphisms disagrees with brute force");
      }
      if (brute) hits.push_back(o);
    }
    std::string line = name + "  classifier: " + tuple_text(k.order, refl, k.centralizer, k.component_group.size(), k.isolated);
    if (hits.size() != 1) {
      report.mismatches.push_back(name + ": conjugate to " + std::to_string(hits.size()) + " oracle orbits");
      line += "  oracle: no unique orbit";
    } else {
      const auto& pt = search.orbits[hits.front()];
      ++used[hits.front()];
      line += "  oracle " + format_coords(pt.coords) + ": " +
              tuple_text(pt.order, pt.reflection_order, pt.centralizer, pt.component_order, pt.isolated);
      if (pt.order != k.order || pt.reflection_order != refl || pt.component_order != k.component_group.size() ||
          pt.isolated != k.isolated || pt.centralizer != k.centralizer) {
        report.mismatches.push_back(name + ": invariants differ from the oracle");
      }
    }
    report.lines.push_back(std::move(line));
  }
  for (std::size_t o = 0; o < search.orbits.size(); ++o) {
    if (used[o] != 1) {
      report.mismatches.push_back("oracle orbit at " + format_coords(search.orbits[o].coords) + " matched " +
                                  std::to_string(used[o]) + " classes");
    }
  }
  report.pass = report.mismatches.empty();
  return report;
}

}  // namespace qiso
