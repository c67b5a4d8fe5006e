#pragma once

// Maximum cycle geometric mean, definite form and critical digraph.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tropvis/closure.hpp"
#include "tropvis/graph.hpp"
#include "tropvis/matrix.hpp"

namespace tropvis {

inline constexpr std::size_t kDefaultOracleLimit = 8;

// weight^(1/length) kept unevaluated so exact comparisons need no roots.
template <MaxScalar T>
struct CycleMean {
  T weight = T::zero();
  std::size_t length = 0;

  bool is_zero() const { return length == 0 || weight.is_zero(); }
  T value() const { return is_zero() ? T::zero() : nth_root(weight, static_cast<unsigned>(length)); }
};

// <0, 0, >0 as a < b, a == b, a > b. Exact mode compares w1^L2 with w2^L1.
template <MaxScalar T>
int compare_means(const CycleMean<T>& a, const CycleMean<T>& b) {
  if (a.is_zero() || b.is_zero()) return static_cast<int>(!a.is_zero()) - static_cast<int>(!b.is_zero());
  if constexpr (scalar_traits<T>::exact) {
    // Cheap float screen first; fall back to the exact comparison near ties.
    double la = log_of(a.weight) / static_cast<double>(a.length);
    double lb = log_of(b.weight) / static_cast<double>(b.length);
    if (std::fabs(la - lb) > 1e-9 * std::max(1.0, std::fabs(la))) return la < lb ? -1 : 1;
    T lhs = pow(a.weight, static_cast<unsigned>(b.length));
    T rhs = pow(b.weight, static_cast<unsigned>(a.length));
    return lhs < rhs ? -1 : (rhs < lhs ? 1 : 0);
  } else {
    double la = a.weight.log() / static_cast<double>(a.length);
    double lb = b.weight.log() / static_cast<double>(b.length);
    return la < lb ? -1 : (lb < la ? 1 : 0);
  }
}

// True when the mean is > 1 beyond tolerance.
template <MaxScalar T>
bool mean_exceeds_one(const CycleMean<T>& m, Tolerance tol) {
  if (m.is_zero()) return false;
  if constexpr (scalar_traits<T>::exact) {
    return T::one() < m.weight;
  } else {
    return m.weight.log() / static_cast<double>(m.length) > tol.eps;
  }
}

namespace detail {

// Karp's formula on one strongly connected component.
template <MaxScalar T>
CycleMean<T> karp_component(const Matrix<T>& a, const std::vector<std::size_t>& nodes) {
  const std::size_t s = nodes.size();
  if (s == 1) {
    const T& loop = a(nodes[0], nodes[0]);
    return loop.is_zero() ? CycleMean<T>{} : CycleMean<T>{loop, 1};
  }
  if constexpr (!scalar_traits<T>::exact) {
    constexpr double kBottom = -std::numeric_limits<double>::infinity();
    // w[v * s + u] = log a(u, v): predecessors of v are contiguous.
    std::vector<double> w(s * s);
    for (std::size_t u = 0; u < s; ++u)
      for (std::size_t v = 0; v < s; ++v) w[v * s + u] = a(nodes[u], nodes[v]).log();
    std::vector<double> d((s + 1) * s, kBottom);
    d[0] = 0.0;
    for (std::size_t k = 1; k <= s; ++k) {
      const double* prev = &d[(k - 1) * s];
      double* cur = &d[k * s];
      for (std::size_t v = 0; v < s; ++v) {
        const double* wv = &w[v * s];
        double best = kBottom;
        for (std::size_t u = 0; u < s; ++u) {
          const double cand = prev[u] + wv[u];
          best = cand > best ? cand : best;
        }
        cur[v] = best;
      }
    }
    CycleMean<T> best;
    double best_ratio = kBottom;
    for (std::size_t v = 0; v < s; ++v) {
      const double dn = d[s * s + v];
      if (dn == kBottom) continue;
      double worst = std::numeric_limits<double>::infinity();
      std::size_t worst_k = 0;
      for (std::size_t k = 0; k < s; ++k) {
        const double dk = d[k * s + v];
        if (dk == kBottom) continue;
        const double r = (dn - dk) / static_cast<double>(s - k);
        if (r < worst) {
          worst = r;
          worst_k = k;
        }
      }
      if (worst > best_ratio) {
        best_ratio = worst;
        best = CycleMean<T>{T::from_log(dn - d[worst_k * s + v]), s - worst_k};
      }
    }
    return best;
  } else {
    std::vector<std::vector<T>> d(s + 1, std::vector<T>(s, T::zero()));
    d[0][0] = T::one();
    for (std::size_t k = 1; k <= s; ++k) {
      for (std::size_t v = 0; v < s; ++v) {
        for (std::size_t u = 0; u < s; ++u) {
          const T& auv = a(nodes[u], nodes[v]);
          if (d[k - 1][u].is_zero() || auv.is_zero()) continue;
          T cand = d[k - 1][u] * auv;
          if (d[k][v] < cand) d[k][v] = std::move(cand);
        }
      }
    }
    CycleMean<T> best;
    for (std::size_t v = 0; v < s; ++v) {
      if (d[s][v].is_zero()) continue;
      std::optional<CycleMean<T>> worst;
      for (std::size_t k = 0; k < s; ++k) {
        if (d[k][v].is_zero()) continue;
        CycleMean<T> cand{d[s][v] / d[k][v], s - k};
        if (!worst || compare_means(cand, *worst) < 0) worst = std::move(cand);
      }
      if (worst && compare_means(*worst, best) > 0) best = std::move(*worst);
    }
    return best;
  }
}

}  // namespace detail

// lambda(A) as an unevaluated mean: Karp's algorithm on every strongly
// connected component of the digraph of A, maximum over components.
template <MaxScalar T>
CycleMean<T> max_cycle_mean(const Matrix<T>& a) {
  CycleMean<T> best;
  auto scc = strongly_connected_components(a.size(), support_edges(a));
  for (const auto& comp : scc.components) {
    CycleMean<T> m = detail::karp_component(a, comp);
    if (compare_means(m, best) > 0) best = std::move(m);
  }
  return best;
}

// lambda(A); zero iff the digraph of A has no cycle.
template <MaxScalar T>
T max_cycle_geometric_mean(const Matrix<T>& a) {
  return max_cycle_mean(a).value();
}

// Calls visit(nodes, weight) for every simple cycle with positive weight;
// each cycle is reported once, starting from its least node.
template <MaxScalar T>
void for_each_simple_cycle(const Matrix<T>& a,
                           const std::function<void(const std::vector<std::size_t>&, const T&)>& visit) {
  const std::size_t n = a.size();
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t, const T&)> extend = [&](std::size_t start, std::size_t v,
                                                                        const T& weight) {
    if (!a(v, start).is_zero()) visit(path, weight * a(v, start));
    for (std::size_t u = start + 1; u < n; ++u) {
      if (on_path[u] || a(v, u).is_zero()) continue;
      on_path[u] = true;
      path.push_back(u);
      extend(start, u, weight * a(v, u));
      path.pop_back();
      on_path[u] = false;
    }
  };
  for (std::size_t start = 0; start < n; ++start) {
    path.assign(1, start);
    on_path[start] = true;
    extend(start, start, T::one());
    on_path[start] = false;
  }
}

// Test oracle: lambda(A) by enumerating all simple cycles.
template <MaxScalar T>
CycleMean<T> brute_force_lambda(const Matrix<T>& a, std::size_t limit = kDefaultOracleLimit) {
  if (a.size() > limit) throw OracleLimitExceeded(a.size(), limit);
  CycleMean<T> best;
  for_each_simple_cycle<T>(a, [&](const std::vector<std::size_t>& nodes, const T& w) {
    CycleMean<T> m{w, nodes.size()};
    if (compare_means(m, best) > 0) best = std::move(m);
  });
  return best;
}

// Test oracle: edges lying on some cycle of maximal geometric mean, sorted.
template <MaxScalar T>
std::vector<Edge> brute_force_critical_edges(const Matrix<T>& a, Tolerance tol = {},
                                             std::size_t limit = kDefaultOracleLimit) {
  CycleMean<T> best = brute_force_lambda(a, limit);
  std::vector<Edge> edges;
  if (best.is_zero()) return edges;
  for_each_simple_cycle<T>(a, [&](const std::vector<std::size_t>& nodes, const T& w) {
    CycleMean<T> m{w, nodes.size()};
    bool critical;
    if constexpr (scalar_traits<T>::exact) {
      critical = compare_means(m, best) == 0;
    } else {
      critical = std::fabs(w.log() / static_cast<double>(nodes.size()) -
                           best.weight.log() / static_cast<double>(best.length)) <= tol.eps;
    }
    if (!critical) return;
    for (std::size_t i = 0; i < nodes.size(); ++i) edges.emplace_back(nodes[i], nodes[(i + 1) % nodes.size()]);
  });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

// A / lambda(A).
template <MaxScalar T>
Matrix<T> definite_form(const Matrix<T>& a) {
  T lambda = max_cycle_geometric_mean(a);
  if (lambda.is_zero()) throw ZeroLambda();
  return scale(a, lambda.inverse());
}

template <MaxScalar T>
struct SpectralData {
  T lambda;
  Matrix<T> definite;  // A / lambda
  Matrix<T> star;      // (A / lambda)*
  std::vector<bool> node_is_critical;
  std::vector<std::size_t> critical_nodes;
  std::vector<Edge> critical_edges;  // sorted
  // Components of C*(A): critical SCCs plus non-critical singletons,
  // ordered by least node.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
  std::vector<bool> component_is_critical;
  std::vector<std::size_t> representatives;  // M(A): least node of each critical SCC
  std::vector<std::size_t> non_critical;
  std::size_t n_critical_components = 0;

  std::size_t size() const { return node_is_critical.size(); }
  bool is_critical_edge(std::size_t i, std::size_t j) const {
    return std::binary_search(critical_edges.begin(), critical_edges.end(), Edge{i, j});
  }
};

// Edge (i, j) is critical iff b_ij * b*_ji = 1 for B = A / lambda(A).
template <MaxScalar T>
SpectralData<T> critical_structure(const Matrix<T>& a, Tolerance tol = {}) {
  const std::size_t n = a.size();
  SpectralData<T> sd;
  sd.lambda = max_cycle_geometric_mean(a);
  if (sd.lambda.is_zero()) throw ZeroLambda();
  sd.definite = scale(a, sd.lambda.inverse());
  sd.star = star_closure(sd.definite);
  sd.node_is_critical.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const T& bij = sd.definite(i, j);
      if (bij.is_zero() || sd.star(j, i).is_zero()) continue;
      if (approx_equal(bij * sd.star(j, i), T::one(), tol)) {
        sd.critical_edges.emplace_back(i, j);
        sd.node_is_critical[i] = true;
        sd.node_is_critical[j] = true;
      }
    }
  }
  auto scc = strongly_connected_components(n, sd.critical_edges);
  sd.components = std::move(scc.components);
  sd.component_of = std::move(scc.component_of);
  for (const auto& comp : sd.components) {
    bool critical = sd.node_is_critical[comp.front()];
    sd.component_is_critical.push_back(critical);
    if (critical) {
      sd.representatives.push_back(comp.front());
      ++sd.n_critical_components;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sd.node_is_critical[i]) {
      sd.critical_nodes.push_back(i);
    } else {
      sd.non_critical.push_back(i);
    }
  }
  return sd;
}

}  // namespace tropvis
