#pragma once

// Visualization checks, strict visualizers and the scalings that preserve
// (strict) visualization.
//
// A is visualized when a_ij = lambda(A) on every critical edge and
// a_ij <= lambda(A) elsewhere; strictly visualized when the off-critical
// inequalities are strict. For positive x, X^-1 A X is strictly visualized
// exactly when x lies in the relative interior of V*(A), and any positive
// linear combination of the columns of (A/lambda)* is such an x.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "tropvis/cones.hpp"
#include "tropvis/graph.hpp"
#include "tropvis/kleene.hpp"
#include "tropvis/spectral.hpp"

namespace tropvis {

enum class VisualizationLevel { not_visualized = 0, visualized = 1, strictly_visualized = 2 };

enum class WitnessKind {
  exceeds_lambda,         // a_ij > lambda
  lambda_off_critical,    // a_ij == lambda on a non-critical edge
  critical_not_lambda,    // critical edge with a_ij != lambda
};

template <MaxScalar T>
struct Witness {
  std::size_t i = 0;
  std::size_t j = 0;
  T value;
  WitnessKind kind = WitnessKind::exceeds_lambda;
};

template <MaxScalar T>
struct VisualizationStatus {
  VisualizationLevel status = VisualizationLevel::not_visualized;
  T lambda;
  std::vector<Witness<T>> witnesses;
  // min over positive non-critical entries of lambda / a_ij; empty when
  // there are none.
  std::optional<T> margin;
};

// Classifies A against lambda and the critical edges in `sd`, which may
// come from any matrix diagonally similar to A (both are invariant).
template <MaxScalar T>
VisualizationStatus<T> check_visualization(const Matrix<T>& a, const SpectralData<T>& sd,
                                           Tolerance tol = {}) {
  detail::require_same_size(a, sd.size(), "check_visualization");
  VisualizationStatus<T> st;
  st.lambda = sd.lambda;
  bool broken = false;
  bool tight = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const T& aij = a(i, j);
      if (sd.is_critical_edge(i, j)) {
        if (!approx_equal(aij, sd.lambda, tol)) {
          st.witnesses.push_back({i, j, aij, WitnessKind::critical_not_lambda});
          broken = true;
        }
        continue;
      }
      if (aij.is_zero()) continue;
      if (approx_equal(aij, sd.lambda, tol)) {
        st.witnesses.push_back({i, j, aij, WitnessKind::lambda_off_critical});
        tight = true;
      } else if (sd.lambda < aij) {
        st.witnesses.push_back({i, j, aij, WitnessKind::exceeds_lambda});
        broken = true;
      }
      T ratio = sd.lambda * aij.inverse();
      if (!st.margin || ratio < *st.margin) st.margin = std::move(ratio);
    }
  }
  st.status = broken ? VisualizationLevel::not_visualized
                     : (tight ? VisualizationLevel::visualized : VisualizationLevel::strictly_visualized);
  return st;
}

template <MaxScalar T>
VisualizationStatus<T> check_visualization(const Matrix<T>& a, Tolerance tol = {}) {
  return check_visualization(a, critical_structure(a, tol), tol);
}

enum class VisualizerMethod { column_sum, log_convex, perron };

// x_i = sum_k (A/lambda)*_ik: the positive combination of all star columns
// with unit coefficients.
template <MaxScalar T>
ScalingVector<T> column_sum_visualizer(const SpectralData<T>& sd) {
  const std::size_t n = sd.size();
  Vector<T> x(n, T::zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) x[i] = x[i] + sd.star(i, k);
  return ScalingVector<T>(std::move(x), Provenance::column_sum);
}

// Componentwise product of star columns raised to the weights.
ScalingVector<LogReal> log_convex_visualizer(const SpectralData<LogReal>& sd,
                                             std::span<const double> weights);

struct PerronOptions {
  double tolerance = 1e-12;
  // 0: use 10 * n * ceil(-log10(tolerance)).
  std::size_t max_iterations = 0;
};

// Conventional Perron vector of (A/lambda)*, by power iteration.
ScalingVector<LogReal> perron_visualizer(const SpectralData<LogReal>& sd, PerronOptions opts = {});

// A scaling x with X^-1 A X strictly visualized. Exact mode supports the
// column-sum method only: log-convex and Perron vectors are irrational.
template <MaxScalar T>
ScalingVector<T> strict_visualizer(const Matrix<T>& a, VisualizerMethod method = VisualizerMethod::column_sum,
                                   std::span<const double> weights = {}, Tolerance tol = {}) {
  SpectralData<T> sd = critical_structure(a, tol);
  if (method == VisualizerMethod::column_sum) return column_sum_visualizer(sd);
  if constexpr (scalar_traits<T>::exact) {
    throw ModeMismatch("log-convex and Perron visualizers are irrational; convert to float mode");
  } else {
    if (!is_irreducible(a)) throw ReducibleMatrix();
    if (method == VisualizerMethod::log_convex) return log_convex_visualizer(sd, weights);
    return perron_visualizer(sd);
  }
}

// x in ri(V*(A)) iff X^-1 A X is strictly visualized.
template <MaxScalar T>
bool in_relative_interior(const Matrix<T>& a, const SpectralData<T>& sd, const ScalingVector<T>& x,
                          Tolerance tol = {}) {
  return check_visualization(diag_similarity(a, x), sd, tol).status ==
         VisualizationLevel::strictly_visualized;
}

template <MaxScalar T>
bool in_relative_interior(const Matrix<T>& a, const ScalingVector<T>& x, Tolerance tol = {}) {
  return in_relative_interior(a, critical_structure(a, tol), x, tol);
}

// v in L(C(A)): b_ij v_j = v_i for every critical (i, j), B = A / lambda.
// v may have any sign.
bool linear_hull_membership(const SpectralData<Exact>& sd, const std::vector<Exact>& v);
bool linear_hull_membership(const SpectralData<LogReal>& sd, const std::vector<double>& v,
                            Tolerance tol = {});

template <MaxScalar T>
struct QuotientMatrix {
  std::size_t m = 0;
  Matrix<T> alpha;  // alpha_{mu nu} = max over block (mu, nu) of A (+) I
  std::vector<std::size_t> node_to_component;
  std::vector<std::vector<std::size_t>> component_nodes;
};

namespace detail {
template <MaxScalar T>
void require_definite_visualized(const Matrix<T>& a, const SpectralData<T>& sd, Tolerance tol) {
  if (!approx_equal(sd.lambda, T::one(), tol)) throw NotDefinite(to_string(sd.lambda));
  if (check_visualization(a, sd, tol).status == VisualizationLevel::not_visualized) throw NotVisualized();
}
}  // namespace detail

// Precondition: A definite and visualized.
template <MaxScalar T>
QuotientMatrix<T> quotient_matrix(const Matrix<T>& a, const SpectralData<T>& sd, Tolerance tol = {}) {
  detail::require_definite_visualized(a, sd, tol);
  QuotientMatrix<T> q;
  q.m = sd.components.size();
  q.node_to_component = sd.component_of;
  q.component_nodes = sd.components;
  q.alpha = Matrix<T>::identity(q.m);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      T& slot = q.alpha(sd.component_of[i], sd.component_of[j]);
      if (slot < a(i, j)) slot = a(i, j);
    }
  }
  return q;
}

template <MaxScalar T>
QuotientMatrix<T> quotient_matrix(const Matrix<T>& a, Tolerance tol = {}) {
  return quotient_matrix(a, critical_structure(a, tol), tol);
}

// Every (mu, nu) block of A* is constant and equal to (A^C)*_{mu nu}.
template <MaxScalar T>
bool star_block_structure(const Matrix<T>& a, Tolerance tol = {}) {
  SpectralData<T> sd = critical_structure(a, tol);
  QuotientMatrix<T> q = quotient_matrix(a, sd, tol);
  Matrix<T> star = kleene_star(a, tol).star;
  Matrix<T> quotient_star = kleene_star(q.alpha, tol).star;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!approx_equal(star(i, j), quotient_star(q.node_to_component[i], q.node_to_component[j]), tol))
        return false;
  return true;
}

enum class PreservationVerdict { breaks, preserves_visualized, makes_strict };

// Classifies a scaling of a definite visualized matrix by the quotient
// inequalities alpha_{mu nu} x~_nu <= x~_mu (strict for makes_strict).
template <MaxScalar T>
PreservationVerdict preserving_scaling_check(const QuotientMatrix<T>& q, const ScalingVector<T>& x,
                                             Tolerance tol = {}) {
  if (x.size() != q.node_to_component.size()) throw DimensionMismatch("scaling length differs from n");
  Vector<T> xt;
  for (const auto& nodes : q.component_nodes) {
    for (std::size_t v : nodes)
      if (!approx_equal(x[v], x[nodes.front()], tol)) return PreservationVerdict::breaks;
    xt.push_back(x[nodes.front()]);
  }
  bool tight = false;
  for (std::size_t mu = 0; mu < q.m; ++mu) {
    for (std::size_t nu = 0; nu < q.m; ++nu) {
      if (mu == nu || q.alpha(mu, nu).is_zero()) continue;
      T lhs = q.alpha(mu, nu) * xt[nu];
      if (approx_equal(lhs, xt[mu], tol)) {
        tight = true;
      } else if (xt[mu] < lhs) {
        return PreservationVerdict::breaks;
      }
    }
  }
  return tight ? PreservationVerdict::preserves_visualized : PreservationVerdict::makes_strict;
}

template <MaxScalar T>
PreservationVerdict preserving_scaling_check(const Matrix<T>& a, const ScalingVector<T>& x,
                                             Tolerance tol = {}) {
  return preserving_scaling_check(quotient_matrix(a, tol), x, tol);
}

// x_i = xt_{component(i)}.
template <MaxScalar T>
ScalingVector<T> lift_scaling(const QuotientMatrix<T>& q, const Vector<T>& xt) {
  if (xt.size() != q.m) throw DimensionMismatch("lift_scaling: need one value per component");
  Vector<T> x;
  x.reserve(q.node_to_component.size());
  for (std::size_t c : q.node_to_component) x.push_back(xt[c]);
  return ScalingVector<T>(std::move(x), Provenance::user);
}

}  // namespace tropvis
