#pragma once

#include "qiso/classify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qiso {

/// Plain-data view of one class, as serialized.
struct ClassRecord {
  std::vector<std::string> omega;   // node labels
  std::vector<std::string> lambda;  // "num/den" per simple-coroot coordinate
  std::int64_t order = 1;
  std::vector<SimpleType> centralizer;
  std::size_t component_order = 1;
  std::string component_structure = "1";
  bool isolated = false;
  std::vector<int> excluded_primes;
  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

struct ClassificationRecord {
  std::string type;
  int rank = 0;
  std::string lattice;
  int characteristic = 0;
  std::vector<ClassRecord> classes;
  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

ClassificationRecord to_record(const Classification& c);

nlohmann::json to_json(const ClassificationRecord& r);
/// Throws std::invalid_argument on malformed input.
ClassificationRecord record_from_json(const nlohmann::json& j);

/// "", "p != 2", "p not in {2, 3}".
std::string format_p_condition(const std::vector<int>& excluded);

/// Human-readable table, one row per class, with the columns
/// Omega | p ? | o(s) | C°(s) | |A(s)| | isolated ? (plus a label column for classical groups).
std::string render_table(const Classification& c);

/// Marks, automorphism group generators and |A| for the listed types.
std::string render_affine_table(const std::vector<CartanType>& types);

/// Adjoint classification tables for A_n, B_n, C_n, D_n at the given rank.
std::string render_classical_tables(int rank);

/// Adjoint classification tables for E6 and E7.
std::string render_exceptional_tables();

}  // namespace qiso
