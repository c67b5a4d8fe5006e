#include <cstdio>

#include "tropvis/matrix.hpp"
#include "tropvis/scalar.hpp"

namespace tropvis {

std::string to_string(LogReal a) {
  if (a.is_zero()) return "0";
  char buf[64];
  // exp() leaves the double range near |log| = 709; keep the log form there.
  if (a.log() > 700.0 || a.log() < -700.0) {
    std::snprintf(buf, sizeof buf, "exp(%.17g)", a.log());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g", a.value());
  }
  return buf;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::column_sum:
      return "column-sum";
    case Provenance::log_convex:
      return "log-convex";
    case Provenance::perron:
      return "perron";
    case Provenance::user:
      return "user";
  }
  return "user";
}

Matrix<LogReal> to_float(const Matrix<Exact>& a) {
  std::vector<LogReal> entries;
  entries.reserve(a.size() * a.size());
  for (const auto& v : a.entries()) entries.push_back(LogReal::from_log(v.log()));
  return Matrix<LogReal>(a.size(), std::move(entries));
}

Vector<LogReal> to_float(const Vector<Exact>& v) {
  Vector<LogReal> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(LogReal::from_log(x.log()));
  return out;
}

}  // namespace tropvis
