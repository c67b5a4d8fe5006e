#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropvis/errors.hpp"
#include "tropvis/scalar.hpp"

namespace tropvis {

template <MaxScalar T>
using Vector = std::vector<T>;

// Square nonnegative matrix over the max-times semiring, dense row-major.
template <MaxScalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, T::zero()) {}
  Matrix(std::size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_) {
      throw DimensionMismatch("matrix of order " + std::to_string(n_) + " needs " +
                              std::to_string(n_ * n_) + " entries, got " +
                              std::to_string(a_.size()));
    }
    for (const auto& v : a_) {
      if (v < T::zero()) throw DomainError("max-times matrix entries must be nonnegative");
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    n_ = rows.size();
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw DimensionMismatch("matrix rows must have n entries");
      for (const auto& v : row) {
        if (v < T::zero()) throw DomainError("max-times matrix entries must be nonnegative");
        a_.push_back(v);
      }
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T::one();
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  std::span<const T> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }
  Vector<T> column(std::size_t j) const {
    Vector<T> c;
    c.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  const std::vector<T>& entries() const noexcept { return a_; }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

enum class Provenance { column_sum, log_convex, perron, user };

std::string to_string(Provenance p);

// Positive vector x defining X = diag(x).
template <MaxScalar T>
class ScalingVector {
 public:
  explicit ScalingVector(Vector<T> values, Provenance provenance = Provenance::user)
      : x_(std::move(values)), provenance_(provenance) {
    for (const auto& v : x_) {
      if (!(T::zero() < v)) throw NonPositiveScaling();
    }
  }

  std::size_t size() const noexcept { return x_.size(); }
  const T& operator[](std::size_t i) const { return x_[i]; }
  const Vector<T>& values() const noexcept { return x_; }
  Provenance provenance() const noexcept { return provenance_; }

  // Componentwise inverse x^-1.
  ScalingVector inverse() const {
    Vector<T> inv;
    inv.reserve(x_.size());
    for (const auto& v : x_) inv.push_back(v.inverse());
    return ScalingVector(std::move(inv), provenance_);
  }

 private:
  Vector<T> x_;
  Provenance provenance_;
};

namespace detail {
template <MaxScalar T>
void require_same_size(const Matrix<T>& a, std::size_t n, const char* what) {
  if (a.size() != n) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                            std::to_string(a.size()) + " vs " + std::to_string(n) + ")");
  }
}
}  // namespace detail

// c_ij = max_k a_ik * b_kj
template <MaxScalar T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_size(a, b.size(), "mat_mul");
  const std::size_t n = a.size();
  Matrix<T> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const T& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j).is_zero()) continue;
        T p = aik * b(k, j);
        if (c(i, j) < p) c(i, j) = std::move(p);
      }
    }
  }
  return c;
}

// Entrywise maximum.
template <MaxScalar T>
Matrix<T> mat_oplus(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_size(a, b.size(), "mat_oplus");
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (c(i, j) < b(i, j)) c(i, j) = b(i, j);
  return c;
}

// A (x) x
template <MaxScalar T>
Vector<T> mat_vec(const Matrix<T>& a, const Vector<T>& x) {
  detail::require_same_size(a, x.size(), "mat_vec");
  Vector<T> y(a.size(), T::zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(i, j).is_zero() || x[j].is_zero()) continue;
      T p = a(i, j) * x[j];
      if (y[i] < p) y[i] = std::move(p);
    }
  }
  return y;
}

template <MaxScalar T>
Matrix<T> scale(const Matrix<T>& a, const T& factor) {
  Matrix<T> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!a(i, j).is_zero()) c(i, j) = a(i, j) * factor;
  return c;
}

// X^-1 A X, i.e. b_ij = x_i^-1 a_ij x_j.
template <MaxScalar T>
Matrix<T> diag_similarity(const Matrix<T>& a, const ScalingVector<T>& x) {
  detail::require_same_size(a, x.size(), "diag_similarity");
  const std::size_t n = a.size();
  std::vector<T> inv;
  inv.reserve(n);
  for (std::size_t i = 0; i < n; ++i) inv.push_back(x[i].inverse());
  Matrix<T> b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) b(i, j) = inv[i] * a(i, j) * x[j];
  return b;
}

template <MaxScalar T>
bool approx_equal(const Matrix<T>& a, const Matrix<T>& b, Tolerance tol = {}) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!approx_equal(a(i, j), b(i, j), tol)) return false;
  return true;
}

// Float-log copy of an exact matrix.
Matrix<LogReal> to_float(const Matrix<Exact>& a);
Vector<LogReal> to_float(const Vector<Exact>& v);

}  // namespace tropvis
