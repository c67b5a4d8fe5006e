#pragma once

#include <cstddef>

#include "tropvis/closure.hpp"
#include "tropvis/spectral.hpp"

namespace tropvis {

template <MaxScalar T>
struct KleeneStar {
  Matrix<T> star;
  Matrix<T> source_definite;
};

namespace detail {
template <MaxScalar T>
void require_convergent(const Matrix<T>& a, Tolerance tol) {
  CycleMean<T> m = max_cycle_mean(a);
  if (mean_exceeds_one(m, tol)) throw LambdaExceedsOne(to_string(m.value()));
}
}  // namespace detail

// A* = I (+) A (+) ... (+) A^(n-1); requires lambda(A) <= 1.
template <MaxScalar T>
KleeneStar<T> kleene_star(const Matrix<T>& a, Tolerance tol = {}) {
  detail::require_convergent(a, tol);
  return KleeneStar<T>{star_closure(a), a};
}

// Test oracle: the truncated series by repeated (x) and (+).
template <MaxScalar T>
Matrix<T> kleene_series_oracle(const Matrix<T>& a, Tolerance tol = {},
                               std::size_t limit = kDefaultOracleLimit) {
  if (a.size() > limit) throw OracleLimitExceeded(a.size(), limit);
  detail::require_convergent(a, tol);
  Matrix<T> sum = Matrix<T>::identity(a.size());
  Matrix<T> power = sum;
  for (std::size_t k = 1; k < a.size(); ++k) {
    power = mat_mul(power, a);
    sum = mat_oplus(sum, power);
  }
  return sum;
}

// A (x) A == A and unit diagonal.
template <MaxScalar T>
bool is_kleene_star(const Matrix<T>& a, Tolerance tol = {}) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!approx_equal(a(i, i), T::one(), tol)) return false;
  return approx_equal(mat_mul(a, a), a, tol);
}

}  // namespace tropvis
