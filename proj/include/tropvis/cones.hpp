#pragma once

// Eigencone V(A) and subeigencone V*(A): scaled max-extremal bases,
// membership and dimensions.

#include <cstddef>
#include <optional>
#include <vector>

#include "tropvis/spectral.hpp"

namespace tropvis {

enum class ConeKind { eigencone, subeigencone };

template <MaxScalar T>
struct ConeBasis {
  std::vector<Vector<T>> generators;        // max-norm 1
  std::vector<std::size_t> source_columns;  // columns of the star they come from
  ConeKind kind = ConeKind::subeigencone;
};

// v / max_i v_i. Precondition: v != 0.
template <MaxScalar T>
Vector<T> max_normalize(const Vector<T>& v) {
  T norm = T::zero();
  for (const auto& x : v)
    if (norm < x) norm = x;
  if (norm.is_zero()) throw DomainError("cannot normalize the zero vector");
  T inv = norm.inverse();
  Vector<T> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.is_zero() ? x : x * inv);
  return out;
}

// u ~ w: same support and constant ratio on it.
template <MaxScalar T>
bool proportional(const Vector<T>& u, const Vector<T>& w, Tolerance tol = {}) {
  if (u.size() != w.size()) return false;
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() != w[i].is_zero()) return false;
    if (!u[i].is_zero() && !pivot) pivot = i;
  }
  if (!pivot) return true;
  const std::size_t p = *pivot;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    if (!approx_equal(u[i] * w[p], w[i] * u[p], tol)) return false;
  }
  return true;
}

template <MaxScalar T>
ConeBasis<T> cone_basis(const SpectralData<T>& sd, ConeKind kind, Tolerance tol = {}) {
  std::vector<std::size_t> columns = sd.representatives;
  if (kind == ConeKind::subeigencone) {
    columns.insert(columns.end(), sd.non_critical.begin(), sd.non_critical.end());
    std::sort(columns.begin(), columns.end());
  }
  ConeBasis<T> basis;
  basis.kind = kind;
  for (std::size_t col : columns) {
    Vector<T> g = max_normalize(sd.star.column(col));
    bool duplicate = false;
    for (const auto& existing : basis.generators) {
      if (proportional(existing, g, tol)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    basis.generators.push_back(std::move(g));
    basis.source_columns.push_back(col);
  }
  return basis;
}

// Scaled columns of (A/lambda)* indexed by M(A) and the non-critical nodes.
template <MaxScalar T>
ConeBasis<T> subeigencone_basis(const Matrix<T>& a, Tolerance tol = {}) {
  return cone_basis(critical_structure(a, tol), ConeKind::subeigencone, tol);
}

// Scaled columns of (A/lambda)* indexed by M(A).
template <MaxScalar T>
ConeBasis<T> eigencone_basis(const Matrix<T>& a, Tolerance tol = {}) {
  return cone_basis(critical_structure(a, tol), ConeKind::eigencone, tol);
}

enum class Membership { outside, subeigen_only, eigen };

template <MaxScalar T>
Membership membership(const Matrix<T>& a, const T& lambda, const Vector<T>& x, Tolerance tol = {}) {
  if (x.size() != a.size()) throw DimensionMismatch("membership: vector length differs from n");
  bool nonzero = false;
  for (const auto& v : x) {
    if (v < T::zero()) throw DomainError("membership: vector entries must be nonnegative");
    nonzero = nonzero || !v.is_zero();
  }
  if (!nonzero) return Membership::outside;
  Vector<T> ax = mat_vec(a, x);
  bool strict = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    T rhs = lambda * x[i];
    if (approx_equal(ax[i], rhs, tol)) continue;
    if (ax[i] < rhs) {
      strict = true;
    } else {
      return Membership::outside;
    }
  }
  return strict ? Membership::subeigen_only : Membership::eigen;
}

// eigen iff A x = lambda x; subeigen_only iff A x <= lambda x with a strict row.
template <MaxScalar T>
Membership membership(const Matrix<T>& a, const Vector<T>& x, Tolerance tol = {}) {
  T lambda = max_cycle_geometric_mean(a);
  if (lambda.is_zero()) throw ZeroLambda();
  return membership(a, lambda, x, tol);
}

inline bool in_subeigencone(Membership m) { return m != Membership::outside; }

struct DimensionReport {
  std::size_t maxdim_eigencone = 0;     // n(C(A))
  std::size_t maxdim_subeigencone = 0;  // n(C(A)) + |non-critical|
  std::size_t linear_hull_dim = 0;      // dim L(C(A))
  std::optional<std::size_t> linear_rank_star;  // exact mode only
};

// Conventional rank over Q(theta), fraction-free (Bareiss) elimination.
std::size_t linear_rank(std::size_t rows, std::size_t cols, std::vector<Exact> entries);
std::size_t linear_rank(const Matrix<Exact>& m);

// dim of {v in R^n : b_ij v_j = v_i for critical (i, j)}, by elimination.
std::size_t linear_hull_dimension(const SpectralData<Exact>& sd);

template <MaxScalar T>
DimensionReport dimensions(const SpectralData<T>& sd) {
  DimensionReport r;
  r.maxdim_eigencone = sd.n_critical_components;
  r.maxdim_subeigencone = sd.n_critical_components + sd.non_critical.size();
  if constexpr (scalar_traits<T>::exact) {
    r.linear_hull_dim = linear_hull_dimension(sd);
    r.linear_rank_star = linear_rank(sd.star);
  } else {
    // No signed arithmetic in the log domain; count components of C*(A).
    r.linear_hull_dim = sd.components.size();
  }
  return r;
}

template <MaxScalar T>
DimensionReport dimensions(const Matrix<T>& a, Tolerance tol = {}) {
  return dimensions(critical_structure(a, tol));
}

}  // namespace tropvis
