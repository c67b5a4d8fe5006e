#pragma once

// The two numeric backends share one interface so that every algorithm is
// written once as a template:
//
//   Exact    exact values in Q(b^(1/k)); tolerances are ignored.
//   LogReal  max-plus representation (natural log); zero is -inf.
//
// Required of a scalar T: T::zero(), T::one(), *, + (ordinary sum),
// inverse(), total order, is_zero(), nth_root(), pow(), approx_equal(),
// approx_less(), log_of(), to_string(). `scalar_traits<T>::exact` tells the
// two apart where behavior must differ.

#include <cmath>
#include <compare>
#include <concepts>
#include <limits>
#include <string>

#include "tropvis/exact.hpp"

namespace tropvis {

// Relative tolerance for float-mode equality, applied to log differences.
struct Tolerance {
  double eps = 1e-9;
};

class LogReal {
 public:
  LogReal() = default;

  static LogReal zero() { return LogReal(); }
  static LogReal one() { return from_log(0.0); }
  static LogReal from_log(double log) {
    LogReal r;
    r.log_ = log;
    return r;
  }
  // Precondition: value >= 0.
  static LogReal from_value(double value) { return from_log(std::log(value)); }

  double log() const noexcept { return log_; }
  double value() const noexcept { return std::exp(log_); }
  bool is_zero() const noexcept { return log_ == -std::numeric_limits<double>::infinity(); }
  int sign() const noexcept { return is_zero() ? 0 : 1; }

  LogReal inverse() const { return from_log(-log_); }

  friend LogReal operator*(LogReal a, LogReal b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return from_log(a.log_ + b.log_);
  }
  friend LogReal operator/(LogReal a, LogReal b) { return a * b.inverse(); }
  // Ordinary (plus-times) addition, i.e. log-sum-exp.
  friend LogReal operator+(LogReal a, LogReal b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    double hi = std::max(a.log_, b.log_);
    double lo = std::min(a.log_, b.log_);
    return from_log(hi + std::log1p(std::exp(lo - hi)));
  }
  LogReal& operator*=(LogReal o) { return *this = *this * o; }
  LogReal& operator+=(LogReal o) { return *this = *this + o; }

  friend bool operator==(LogReal a, LogReal b) { return a.log_ == b.log_; }
  friend std::partial_ordering operator<=>(LogReal a, LogReal b) { return a.log_ <=> b.log_; }

 private:
  double log_ = -std::numeric_limits<double>::infinity();
};

inline LogReal pow(LogReal a, unsigned k) {
  if (k == 0) return LogReal::one();
  return a.is_zero() ? a : LogReal::from_log(a.log() * k);
}
inline LogReal nth_root(LogReal a, unsigned k) {
  return a.is_zero() ? a : LogReal::from_log(a.log() / k);
}

inline bool approx_equal(LogReal a, LogReal b, Tolerance tol) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return std::fabs(a.log() - b.log()) <= tol.eps;
}
// a < b by more than the tolerance.
inline bool approx_less(LogReal a, LogReal b, Tolerance tol) {
  if (b.is_zero()) return false;
  if (a.is_zero()) return true;
  return b.log() - a.log() > tol.eps;
}
inline double log_of(LogReal a) { return a.log(); }
std::string to_string(LogReal a);

inline bool approx_equal(const Exact& a, const Exact& b, Tolerance) { return a == b; }
inline bool approx_less(const Exact& a, const Exact& b, Tolerance) { return a < b; }
inline double log_of(const Exact& a) { return a.log(); }
inline std::string to_string(const Exact& a) { return a.to_string(); }

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Exact> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "exact";
};

template <>
struct scalar_traits<LogReal> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";
};

template <class T>
concept MaxScalar = requires(const T& a, const T& b, unsigned k, Tolerance tol) {
  { T::zero() } -> std::same_as<T>;
  { T::one() } -> std::same_as<T>;
  { a * b } -> std::convertible_to<T>;
  { a + b } -> std::convertible_to<T>;
  { a.inverse() } -> std::convertible_to<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { pow(a, k) } -> std::convertible_to<T>;
  { nth_root(a, k) } -> std::convertible_to<T>;
  { approx_equal(a, b, tol) } -> std::convertible_to<bool>;
  { approx_less(a, b, tol) } -> std::convertible_to<bool>;
  { log_of(a) } -> std::convertible_to<double>;
  { to_string(a) } -> std::convertible_to<std::string>;
  scalar_traits<T>::exact;
};

// Max of two scalars (the semiring addition).
template <MaxScalar T>
const T& oplus(const T& a, const T& b) {
  return a < b ? b : a;
}

}  // namespace tropvis
