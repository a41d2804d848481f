#pragma once

#include "qiso/rational.hpp"

#include <optional>
#include <vector>

namespace qiso {

using QMatrix = std::vector<QVector>;  // row-major
using IntMatrix = std::vector<std::vector<int>>;

QMatrix to_rational(const IntMatrix& m);

/// Row-reduces in place to reduced echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(QMatrix& m, std::size_t cols);

std::size_t rank(QMatrix m, std::size_t cols);

/// Basis of {x : m x = 0}.
std::vector<QVector> kernel(QMatrix m, std::size_t cols);

/// Some solution of m x = rhs, or nullopt when inconsistent.
std::optional<QVector> solve(QMatrix m, const QVector& rhs, std::size_t cols);

/// Inverse of a square matrix; throws std::domain_error when singular.
QMatrix inverse(const QMatrix& m);

}  // namespace qiso
