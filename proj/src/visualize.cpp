#include "tropvis/visualize.hpp"

#include <algorithm>
#include <cmath>

namespace tropvis {

ScalingVector<LogReal> log_convex_visualizer(const SpectralData<LogReal>& sd,
                                             std::span<const double> weights) {
  const std::size_t n = sd.size();
  std::vector<double> w(weights.begin(), weights.end());
  if (w.empty()) w.assign(n, 1.0 / static_cast<double>(n));
  if (w.size() != n) throw DimensionMismatch("log-convex visualizer needs one weight per column");
  double total = 0.0;
  for (double v : w) {
    if (!(v > 0.0)) throw UsageError("log-convex weights must be positive");
    total += v;
  }
  if (std::fabs(total - 1.0) > 1e-12) throw UsageError("log-convex weights must sum to 1");
  Vector<LogReal> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_x = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (sd.star(i, k).is_zero()) throw ReducibleMatrix();
      log_x += w[k] * sd.star(i, k).log();
    }
    x[i] = LogReal::from_log(log_x);
  }
  return ScalingVector<LogReal>(std::move(x), Provenance::log_convex);
}

ScalingVector<LogReal> perron_visualizer(const SpectralData<LogReal>& sd, PerronOptions opts) {
  const std::size_t n = sd.size();
  std::size_t cap = opts.max_iterations;
  if (cap == 0) {
    cap = 10 * n * static_cast<std::size_t>(std::ceil(-std::log10(opts.tolerance)));
  }
  // Work with values scaled by the largest entry so nothing overflows.
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& v : sd.star.entries()) top = std::max(top, v.log());
  std::vector<double> s(n * n);
  for (std::size_t i = 0; i < n * n; ++i) s[i] = std::exp(sd.star.entries()[i].log() - top);

  std::vector<double> v(n, 1.0), next(n);
  double change = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < cap; ++it) {
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      const double* row = &s[i * n];
      for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
      next[i] = acc;
      peak = std::max(peak, acc);
    }
    change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= peak;
      change = std::max(change, std::fabs(next[i] / v[i] - 1.0));
    }
    v.swap(next);
    if (change < opts.tolerance) {
      Vector<LogReal> x;
      x.reserve(n);
      for (double e : v) {
        if (!(e > 0.0)) throw ReducibleMatrix();
        x.push_back(LogReal::from_value(e));
      }
      return ScalingVector<LogReal>(std::move(x), Provenance::perron);
    }
  }
  throw PowerIterationDivergence(cap, change);
}

bool linear_hull_membership(const SpectralData<Exact>& sd, const std::vector<Exact>& v) {
  if (v.size() != sd.size()) throw DimensionMismatch("linear_hull_membership: vector length differs from n");
  for (const auto& [i, j] : sd.critical_edges) {
    if (!(sd.definite(i, j) * v[j] == v[i])) return false;
  }
  return true;
}

bool linear_hull_membership(const SpectralData<LogReal>& sd, const std::vector<double>& v, Tolerance tol) {
  if (v.size() != sd.size()) throw DimensionMismatch("linear_hull_membership: vector length differs from n");
  for (const auto& [i, j] : sd.critical_edges) {
    double lhs = sd.definite(i, j).value() * v[j];
    double scale = std::max(std::fabs(lhs), std::fabs(v[i]));
    if (std::fabs(lhs - v[i]) > tol.eps * scale) return false;
  }
  return true;
}

}  // namespace tropvis
