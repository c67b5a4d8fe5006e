#pragma once

// Matrix files:
//
//   # comment
//   domain: times        (optional; "plus" means entries are natural logs)
//   3
//   1   1/2  0
//   0.5 1    2
//   0   1/8  1
//
// Entries in the times domain are nonnegative integers, rationals p/q or
// decimals, all read exactly. The plus domain accepts any real and -inf.

#include <string>
#include <variant>

#include "tropvis/matrix.hpp"

namespace tropvis {

enum class ModeRequest { automatic, exact, floating };

using AnyMatrix = std::variant<Matrix<Exact>, Matrix<LogReal>>;

AnyMatrix parse_matrix(const std::string& text, ModeRequest mode = ModeRequest::automatic);

// Same grammar without the domain line: header n, then n entries.
std::variant<Vector<Exact>, Vector<LogReal>> parse_vector(const std::string& text,
                                                          ModeRequest mode = ModeRequest::automatic);

// Exact matrices serialize in the times domain (rational entries only);
// float matrices in the plus domain so no precision is lost.
std::string serialize_matrix(const Matrix<Exact>& a);
std::string serialize_matrix(const Matrix<LogReal>& a);

std::string read_file(const std::string& path);

}  // namespace tropvis
