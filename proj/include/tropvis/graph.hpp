#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tropvis/matrix.hpp"

namespace tropvis {

using Edge = std::pair<std::size_t, std::size_t>;

struct SccPartition {
  // Components ordered by their least node; nodes inside ascending.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
};

SccPartition strongly_connected_components(std::size_t n, const std::vector<Edge>& edges);

// Edges (i, j) with a_ij > 0.
template <MaxScalar T>
std::vector<Edge> support_edges(const Matrix<T>& a) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!a(i, j).is_zero()) edges.emplace_back(i, j);
  return edges;
}

// Every node reaches every other node through positive entries.
template <MaxScalar T>
bool is_irreducible(const Matrix<T>& a) {
  if (a.size() == 0) return false;
  return strongly_connected_components(a.size(), support_edges(a)).components.size() == 1;
}

}  // namespace tropvis
