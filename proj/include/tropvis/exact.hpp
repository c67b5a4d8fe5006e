#pragma once

// Exact scalars for the max-times semiring.
//
// Cycle geometric means of rational matrices are generally irrational
// (lambda = w^(1/k)), so the exact backend works in the real radical field
// Q(theta), theta = b^(1/k) > 0. Once b is canonical (not a p-th power for any
// prime p dividing k) the polynomial t^k - b is irreducible, which makes
// reduction modulo t^k - b a faithful representation: a value is zero iff all
// its coefficients are zero, and its sign is decided by interval refinement
// of theta.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tropvis {

using Rational = mpq_class;

// Parses "p", "p/q", "-p/q", decimals "1.25" and exponents "1e-3" into an
// exact rational. Returns nullopt on malformed text.
std::optional<Rational> parse_rational(const std::string& text);

// Returns r^(1/n) when it is rational.
std::optional<Rational> rational_root(const Rational& r, unsigned n);

class RadicalField {
 public:
  // Canonical (base, degree) pair; use Exact::root to construct.
  RadicalField(Rational base, unsigned degree);

  const Rational& base() const noexcept { return base_; }
  unsigned degree() const noexcept { return degree_; }

  // lower() < theta < upper(), tight to roughly 1e-24 relative.
  const Rational& lower() const noexcept { return lower_; }
  const Rational& upper() const noexcept { return upper_; }
  long double approx() const noexcept { return approx_; }

  // "2^(1/3)", "(1/2)^(2/3)".
  std::string power_string(unsigned exponent) const;

  friend bool operator==(const RadicalField& a, const RadicalField& b) {
    return a.degree_ == b.degree_ && a.base_ == b.base_;
  }

 private:
  Rational base_;
  unsigned degree_;
  Rational lower_;
  Rational upper_;
  long double approx_;
};

using FieldPtr = std::shared_ptr<const RadicalField>;

class Exact {
 public:
  Exact() : c_(1) {}
  Exact(long v) : c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  Exact(Rational v) : c_{std::move(v)} { c_[0].canonicalize(); }  // NOLINT

  static Exact zero() { return Exact(); }
  static Exact one() { return Exact(1L); }

  // The positive real w^(1/n), canonicalized. Rational when the root is.
  static Exact root(const Rational& w, unsigned n);

  const FieldPtr& field() const noexcept { return field_; }
  bool is_rational() const noexcept { return field_ == nullptr; }
  // Precondition: is_rational().
  const Rational& rational() const;
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  // (c, e) when the value is c * theta^e with a single nonzero coefficient.
  std::optional<std::pair<Rational, unsigned>> as_monomial() const;

  bool is_zero() const noexcept { return field_ == nullptr && sgn(c_[0]) == 0; }
  int sign() const;

  Exact inverse() const;
  Exact operator-() const;

  friend Exact operator+(const Exact& a, const Exact& b);
  friend Exact operator-(const Exact& a, const Exact& b);
  friend Exact operator*(const Exact& a, const Exact& b);
  friend Exact operator/(const Exact& a, const Exact& b) { return a * b.inverse(); }

  Exact& operator+=(const Exact& o) { return *this = *this + o; }
  Exact& operator*=(const Exact& o) { return *this = *this * o; }

  friend bool operator==(const Exact& a, const Exact& b);
  friend std::strong_ordering operator<=>(const Exact& a, const Exact& b);

  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }
  // Natural log of a positive value; -inf for zero.
  double log() const;

  // "3/4", "2^(1/2)", "1/2 + 3/4*5^(1/3)".
  std::string to_string() const;

 private:
  Exact(FieldPtr field, std::vector<Rational> coeffs);
  void normalize();
  const Rational& coeff(std::size_t e) const;

  FieldPtr field_;
  std::vector<Rational> c_;
};

Exact pow(const Exact& a, unsigned k);

// The positive k-th root of w inside the field w lives in (or a fresh
// radical field when w is rational). Throws ExactRootUnavailable otherwise.
Exact nth_root(const Exact& w, unsigned k);

}  // namespace tropvis
