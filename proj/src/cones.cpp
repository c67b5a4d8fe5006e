#include "tropvis/cones.hpp"

#include <utility>

namespace tropvis {

std::size_t linear_rank(std::size_t rows, std::size_t cols, std::vector<Exact> m) {
  if (m.size() != rows * cols) throw DimensionMismatch("linear_rank: entry count mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> Exact& { return m[i * cols + j]; };
  std::size_t rank = 0;
  Exact prev = Exact::one();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && at(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    const Exact pivot = at(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Exact lead = at(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        at(i, j) = (pivot * at(i, j) - lead * at(rank, j)) / prev;
      }
      at(i, col) = Exact::zero();
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::size_t linear_rank(const Matrix<Exact>& m) {
  return linear_rank(m.size(), m.size(), m.entries());
}

std::size_t linear_hull_dimension(const SpectralData<Exact>& sd) {
  const std::size_t n = sd.size();
  const std::size_t rows = sd.critical_edges.size();
  if (rows == 0) return n;
  std::vector<Exact> constraints(rows * n);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto [i, j] = sd.critical_edges[r];
    constraints[r * n + j] = constraints[r * n + j] + sd.definite(i, j);
    constraints[r * n + i] = constraints[r * n + i] - Exact::one();
  }
  return n - linear_rank(rows, n, std::move(constraints));
}

}  // namespace tropvis
