#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropvis {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Misuse of the API: wrong shapes, mixed modes, oracle size limits.
class UsageError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

class ModeMismatch : public UsageError {
 public:
  using UsageError::UsageError;
};

class OracleLimitExceeded : public UsageError {
 public:
  OracleLimitExceeded(std::size_t n, std::size_t limit)
      : UsageError("oracle enumeration limited to n <= " + std::to_string(limit) +
                   ", got n = " + std::to_string(n)) {}
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : UsageError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                   ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NegativeEntry : public ParseError {
 public:
  using ParseError::ParseError;
};

// A mathematically meaningful rejection: the input violates a precondition
// of the operation (as opposed to being malformed).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ZeroLambda : public DomainError {
 public:
  ZeroLambda()
      : DomainError("lambda(A) = 0: the digraph of A has no cycle of positive weight") {}
};

class LambdaExceedsOne : public DomainError {
 public:
  explicit LambdaExceedsOne(const std::string& lambda)
      : DomainError("lambda(A) = " + lambda +
                    " > 1: Kleene star series I + A + A^2 + ... diverges") {}
};

class NotDefinite : public DomainError {
 public:
  explicit NotDefinite(const std::string& lambda)
      : DomainError("matrix is not definite: lambda(A) = " + lambda + ", expected 1") {}
};

class NotVisualized : public DomainError {
 public:
  NotVisualized()
      : DomainError(
            "matrix is not visualized: some entry exceeds lambda(A) or a critical entry "
            "differs from lambda(A)") {}
};

class ReducibleMatrix : public DomainError {
 public:
  ReducibleMatrix()
      : DomainError("matrix is reducible: A* has zero entries, so log-convex and Perron "
                    "scalings are undefined") {}
};

class NoPositivePermutation : public DomainError {
 public:
  NoPositivePermutation()
      : DomainError("every permutation of A has weight 0: no perfect matching on the "
                    "positive entries") {}
};

class PowerIterationDivergence : public DomainError {
 public:
  PowerIterationDivergence(std::size_t iterations, double residual)
      : DomainError("Perron power iteration did not converge in " + std::to_string(iterations) +
                    " iterations (last ratio change " + std::to_string(residual) + ")") {}
};

class NonPositiveScaling : public DomainError {
 public:
  NonPositiveScaling()
      : DomainError("scaling vector must be strictly positive: X = diag(x) must be invertible") {}
};

// Exact mode cannot represent a root outside the current radical extension.
class ExactRootUnavailable : public DomainError {
 public:
  explicit ExactRootUnavailable(const std::string& what)
      : DomainError("cannot represent " + what + " exactly; rerun with --mode float") {}
};

}  // namespace tropvis
