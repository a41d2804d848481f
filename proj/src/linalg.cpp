#include "qiso/linalg.hpp"

#include <stdexcept>

namespace qiso {

QMatrix to_rational(const IntMatrix& m) {
  QMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    QVector r;
    r.reserve(row.size());
    for (int x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> row_reduce(QMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < m[row].size(); ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix m, std::size_t cols) { return row_reduce(m, cols).size(); }

std::vector<QVector> kernel(QMatrix m, std::size_t cols) {
  auto pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(QMatrix m, const QVector& rhs, std::size_t cols) {
  if (rhs.size() != m.size()) throw std::invalid_argument("solve: right-hand side size mismatch");
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(rhs[r]);
  auto pivots = row_reduce(m, cols);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (m[r][cols] != 0) return std::nullopt;
  }
  QVector x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

QMatrix inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix aug = m;
  for (std::size_t r = 0; r < n; ++r) {
    if (aug[r].size() != n) throw std::invalid_argument("inverse: matrix is not square");
    for (std::size_t c = 0; c < n; ++c) aug[r].emplace_back(r == c ? 1 : 0);
  }
  if (row_reduce(aug, n).size() != n) throw std::domain_error("inverse: singular matrix");
  QMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) out[r].assign(aug[r].begin() + static_cast<std::ptrdiff_t>(n), aug[r].end());
  return out;
}

}  // namespace qiso
