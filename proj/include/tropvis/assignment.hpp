#pragma once

// Max-product assignment and the scaling that visualizes every maximal
// permutation: entries on some maximal permutation become 1, all others < 1.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "tropvis/visualize.hpp"

namespace tropvis {

inline constexpr std::size_t kAssignmentOracleLimit = 7;

template <MaxScalar T>
struct Permutation {
  std::vector<std::size_t> map;  // row i -> column map[i]
  T weight;
};

template <MaxScalar T>
T permutation_weight(const Matrix<T>& a, const std::vector<std::size_t>& map) {
  T w = T::one();
  for (std::size_t i = 0; i < map.size(); ++i) w = w * a(i, map[i]);
  return w;
}

// Perfect matching on the positive entries (bipartite rows/columns).
bool has_positive_permutation(std::size_t n, const std::vector<Edge>& support);

// Hungarian method in the multiplicative group of positive scalars:
// potentials multiply where the additive version adds, so exact inputs stay
// exact. Zero entries are forbidden cells. Ties resolve towards the lowest
// row, then the lowest column.
template <MaxScalar T>
Permutation<T> maximal_permutation(const Matrix<T>& a) {
  const std::size_t n = a.size();
  if (!has_positive_permutation(n, support_edges(a))) throw NoPositivePermutation();
  // Minimize prod cost, cost = 1 / a. 1-based, index 0 is the virtual column.
  std::vector<T> u(n + 1, T::one()), v(n + 1, T::one());
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<T>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<T> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const T& entry = a(i0 - 1, j - 1);
        if (!entry.is_zero()) {
          T cur = (entry * u[i0] * v[j]).inverse();
          if (!minv[j] || cur < *minv[j]) {
            minv[j] = std::move(cur);
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = minv[j];
          j1 = j;
        }
      }
      // Unreachable when a perfect matching exists (Hall's condition).
      if (!delta) throw NoPositivePermutation();
      const T inv_delta = delta->inverse();
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] = u[p[j]] * *delta;
          v[j] = v[j] * inv_delta;
        } else if (minv[j]) {
          minv[j] = *minv[j] * inv_delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Permutation<T> out;
  out.map.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.map[p[j] - 1] = j - 1;
  out.weight = permutation_weight(a, out.map);
  return out;
}

// Test oracle: all n! permutations; the lexicographically first maximum.
template <MaxScalar T>
Permutation<T> brute_force_assignment(const Matrix<T>& a, std::size_t limit = kAssignmentOracleLimit) {
  if (a.size() > limit) throw OracleLimitExceeded(a.size(), limit);
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Permutation<T>> best;
  do {
    T w = permutation_weight(a, perm);
    if (w.is_zero()) continue;
    if (!best || best->weight < w) best = Permutation<T>{perm, w};
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!best) throw NoPositivePermutation();
  return *best;
}

template <MaxScalar T>
struct AssignmentVisualization {
  Matrix<T> result;                  // diag(left) A diag(right)
  Permutation<T> pi;
  ScalingVector<T> x;                // visualizer of the strongly definite form
  Matrix<T> strongly_definite_form;  // (D^pi)^-1 A
  Vector<T> left;                    // row factors of the two-sided scaling
  Vector<T> right;                   // column factors (= x)
};

// Row pi(i) of (D^pi)^-1 A is row i of A divided by a_{i,pi(i)}.
template <MaxScalar T>
Matrix<T> strongly_definite_form(const Matrix<T>& a, const Permutation<T>& pi) {
  const std::size_t n = a.size();
  Matrix<T> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = pi.map[i];
    const T inv = a(i, r).inverse();
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) b(r, j) = a(i, j) * inv;
  }
  return b;
}

// result = P X^-1 B X with B = (D^pi)^-1 A, x the column-sum visualizer of B
// and P the permutation matrix moving row pi(i) back to row i. Entries on a
// maximal permutation equal 1; all other entries are < 1.
template <MaxScalar T>
AssignmentVisualization<T> visualize_assignment(const Matrix<T>& a, Tolerance tol = {}) {
  const std::size_t n = a.size();
  Permutation<T> pi = maximal_permutation(a);
  Matrix<T> b = strongly_definite_form(a, pi);
  ScalingVector<T> x = column_sum_visualizer(critical_structure(b, tol));
  Matrix<T> scaled = diag_similarity(b, x);
  Matrix<T> result(n);
  Vector<T> left(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = pi.map[i];
    for (std::size_t j = 0; j < n; ++j) result(i, j) = scaled(r, j);
    left[i] = (x[r] * a(i, r)).inverse();
  }
  Vector<T> right = x.values();
  return AssignmentVisualization<T>{std::move(result), std::move(pi), std::move(x), std::move(b),
                                    std::move(left), std::move(right)};
}

}  // namespace tropvis
