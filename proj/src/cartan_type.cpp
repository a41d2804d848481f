#include "qiso/cartan_type.hpp"

#include <algorithm>
#include <cctype>

namespace qiso {

bool is_legal(SimpleType t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

std::string to_string(SimpleType t) { return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank); }

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Family family_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw TypeError(std::string("unknown Cartan family '") + c + "'");
  }
}

}  // namespace

std::uint64_t weyl_group_order(SimpleType t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::uint64_t weyl_group_order(const std::vector<SimpleType>& parts) {
  std::uint64_t order = 1;
  for (auto t : parts) order *= weyl_group_order(t);
  return order;
}

SimpleType canonical(SimpleType t) {
  if ((t.family == Family::B || t.family == Family::C) && t.rank == 1) return {Family::A, 1};
  if (t.family == Family::C && t.rank == 2) return {Family::B, 2};
  if (t.family == Family::D && t.rank == 3) return {Family::A, 3};
  return t;
}

void sort_components(std::vector<SimpleType>& parts) {
  std::sort(parts.begin(), parts.end(), [](SimpleType a, SimpleType b) {
    if (a.family != b.family) return a.family < b.family;
    return a.rank > b.rank;
  });
}

std::vector<SimpleType> normalize_components(std::vector<SimpleType> parts) {
  std::vector<SimpleType> out;
  for (auto t : parts) {
    if (t.rank <= 0) continue;
    if (t.family == Family::D && t.rank == 1) continue;  // a torus
    if (t.family == Family::D && t.rank == 2) {
      out.push_back({Family::A, 1});
      out.push_back({Family::A, 1});
      continue;
    }
    out.push_back(canonical(t));
  }
  sort_components(out);
  return out;
}

std::string format_components(const std::vector<SimpleType>& parts) {
  if (parts.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "x";
    s += to_string(parts[i]);
  }
  return s;
}

CartanType::CartanType(std::vector<SimpleType> components) : components_(std::move(components)) {
  if (components_.empty()) throw TypeError("a Cartan type needs at least one component");
  for (auto t : components_) {
    if (!is_legal(t)) throw TypeError("illegal Cartan type " + qiso::to_string(t));
  }
}

int CartanType::rank() const {
  int r = 0;
  for (auto t : components_) r += t.rank;
  return r;
}

CartanType CartanType::parse(std::string_view text) {
  std::vector<SimpleType> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) throw TypeError("malformed Cartan type '" + std::string(text) + "'");
    Family f = family_from_char(text[i++]);
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw TypeError("missing rank in Cartan type '" + std::string(text) + "'");
    parts.push_back({f, std::stoi(std::string(text.substr(start, i - start)))});
    if (i < text.size()) {
      if (text[i] != 'x' && text[i] != '*' && text[i] != ',') throw TypeError("malformed Cartan type '" + std::string(text) + "'");
      ++i;
      if (i == text.size()) throw TypeError("trailing separator in '" + std::string(text) + "'");
    }
  }
  return CartanType(std::move(parts));
}

CartanType CartanType::parse(std::string_view family, int rank) {
  if (family.size() != 1) throw TypeError("family must be a single letter, got '" + std::string(family) + "'");
  return CartanType(family_from_char(family.front()), rank);
}

}  // namespace qiso
