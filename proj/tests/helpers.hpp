#pragma once

#include <string>

#include "tropvis/io.hpp"

namespace tropvis::testing {

inline Exact q(long p, long d = 1) { return Exact(Rational(p, d)); }

// Parses an exact matrix from rows written as in a matrix file.
inline Matrix<Exact> exact(const std::string& body) {
  return std::get<Matrix<Exact>>(parse_matrix(body, ModeRequest::exact));
}

inline Matrix<Exact> golden6() {
  return exact(
      "6\n"
      "1 5/11 5/11 7/11 7/11 7/11\n"
      "5/11 1 5/11 7/11 7/11 7/11\n"
      "5/11 5/11 1 7/11 7/11 7/11\n"
      "7/11 7/11 7/11 1 5/11 5/11\n"
      "7/11 7/11 7/11 5/11 1 5/11\n"
      "7/11 7/11 7/11 5/11 5/11 1\n");
}

}  // namespace tropvis::testing
