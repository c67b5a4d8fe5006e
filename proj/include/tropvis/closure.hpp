#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "tropvis/matrix.hpp"

namespace tropvis {

// I (+) A (+) A^2 (+) ... by in-place Floyd-Warshall over (max, *).
// Precondition (unchecked): lambda(A) <= 1, otherwise the result is
// meaningless. kleene_star() is the checked entry point.
template <MaxScalar T>
Matrix<T> star_closure(const Matrix<T>& a) {
  const std::size_t n = a.size();
  if constexpr (!scalar_traits<T>::exact) {
    // Hot path for large float runs: plain doubles, -inf absorbs.
    std::vector<double> s(n * n);
    for (std::size_t i = 0; i < n * n; ++i) s[i] = a.entries()[i].log();
    constexpr double kBottom = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      const double* rk = &s[k * n];
      for (std::size_t i = 0; i < n; ++i) {
        const double sik = s[i * n + k];
        if (sik == kBottom) continue;
        double* ri = &s[i * n];
        for (std::size_t j = 0; j < n; ++j) {
          const double cand = sik + rk[j];
          ri[j] = cand > ri[j] ? cand : ri[j];
        }
      }
    }
    std::vector<T> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out.push_back(T::from_log(i == j && s[i * n + j] < 0.0 ? 0.0 : s[i * n + j]));
    return Matrix<T>(n, std::move(out));
  } else {
    Matrix<T> s = a;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (s(i, k).is_zero()) continue;
        const T sik = s(i, k);
        for (std::size_t j = 0; j < n; ++j) {
          if (s(k, j).is_zero()) continue;
          T cand = sik * s(k, j);
          if (s(i, j) < cand) s(i, j) = std::move(cand);
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (s(i, i) < T::one()) s(i, i) = T::one();
    return s;
  }
}

}  // namespace tropvis
