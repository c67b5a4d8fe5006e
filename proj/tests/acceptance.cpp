// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "support/properties.hpp"

using namespace tropvis;
using namespace tropvis::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

Verdict from(const Outcome& o, const std::string& extra = {}) {
  std::string d = std::to_string(o.trials) + " trials, " + std::to_string(o.failures) + " failures";
  if (!extra.empty()) d += ", " + extra;
  if (!o.first_failure.empty()) d += "; first: " + o.first_failure;
  return {o.ok(), d};
}

Verdict golden_example() {
  auto start = Clock::now();
  Matrix<Exact> a = golden6();
  std::vector<std::string> bad;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) bad.emplace_back(what);
  };
  expect(is_kleene_star(a), "is_kleene_star");
  SpectralData<Exact> sd = critical_structure(a);
  expect(sd.lambda == Exact::one(), "lambda == 1");
  std::vector<Edge> loops;
  for (std::size_t i = 0; i < 6; ++i) loops.emplace_back(i, i);
  expect(sd.critical_edges == loops, "critical graph = 6 loops");
  DimensionReport d = dimensions(sd);
  expect(d.maxdim_subeigencone == 6 && d.linear_hull_dim == 6, "maxdim_subeigencone == linear_hull_dim == 6");
  expect(d.linear_rank_star == 5u && linear_rank(kleene_star(a).star) == 5, "rank(A*) == 5");
  const Exact s(Rational(7, 11));
  Vector<Exact> v{s, s, s, Exact::one(), Exact::one(), Exact::one()};
  expect(membership(a, v) == Membership::eigen, "membership eigen");
  std::vector<Exact> augmented;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) augmented.push_back(a(i, j));
    augmented.push_back(v[i]);
  }
  expect(linear_rank(6, 7, augmented) == 6, "augmented rank == 6");
  double t = seconds_since(start);
  expect(t < 1.0, "under 1 s");
  std::string detail = "elapsed " + std::to_string(t) + " s";
  for (const auto& b : bad) detail += "; failed: " + b;
  return {bad.empty(), detail};
}

Verdict karp() {
  Rng rng(20240501);
  auto start = Clock::now();
  Outcome o = karp_vs_enumeration(rng, 1000);
  double t = seconds_since(start);
  Verdict v = from(o, "elapsed " + std::to_string(t) + " s (limit 60 s)");
  v.pass = v.pass && t < 60.0;
  return v;
}

Verdict closure() {
  Rng rng(20240502);
  return from(closure_vs_series(rng, 1000));
}

Verdict strict() {
  Rng rng(20240503);
  StrictGapStats stats;
  Outcome o = strict_visualization(rng, 1000, &stats);
  char buf[64];
  std::snprintf(buf, sizeof buf, "min float gap %.3g (needs > %.1g)", stats.min_gap, 10 * Tolerance{}.eps);
  return from(o, buf);
}

Verdict preserving() {
  Rng rng(20240504);
  return from(preserving_scalings(rng, 500));
}

Verdict assign() {
  Rng rng(20240505);
  return from(assignment(rng, 500));
}

Verdict invariant() {
  Rng rng(20240506);
  return from(invariance(rng, 500));
}

double pipeline_seconds(std::size_t n, Rng& rng, bool* strict) {
  Matrix<LogReal> a = random_float_matrix(rng, n);
  auto start = Clock::now();
  SpectralData<LogReal> sd = critical_structure(a);
  ScalingVector<LogReal> x = column_sum_visualizer(sd);
  VisualizationStatus<LogReal> st = check_visualization(diag_similarity(a, x), sd);
  double t = seconds_since(start);
  *strict = st.status == VisualizationLevel::strictly_visualized;
  return t;
}

Verdict performance() {
  Rng rng(20240507);
  bool strict_small = false, strict_large = false;
  double t250 = INFINITY, t500 = INFINITY;
  for (int rep = 0; rep < 3; ++rep) {
    t250 = std::min(t250, pipeline_seconds(250, rng, &strict_small));
    t500 = std::min(t500, pipeline_seconds(500, rng, &strict_large));
  }
  double exponent = std::log(t500 / t250) / std::log(2.0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=250 %.3f s, n=500 %.3f s, exponent %.2f, strict %s", t250, t500, exponent,
                strict_small && strict_large ? "yes" : "no");
  bool pass = t500 < 10.0 && exponent >= 2.5 && exponent <= 3.5 && strict_small && strict_large;
  return {pass, buf};
}

Verdict properties() {
  struct Suite {
    const char* name;
    std::function<Outcome(Rng&, std::size_t)> run;
  };
  const std::vector<Suite> suites = {
      {"cone generators", cone_generators},       {"subeigencone closure", subeigencone_closure},
      {"scaled cones", scaled_cone},              {"relative interior", relative_interior},
      {"quotient structure", quotient_structure}, {"preservation soundness", preservation_soundness},
  };
  Verdict v{true, ""};
  std::uint64_t seed = 20240508;
  for (const auto& s : suites) {
    Rng rng(seed++);
    Outcome o = s.run(rng, 500);
    v.pass = v.pass && o.ok();
    if (!v.detail.empty()) v.detail += "; ";
    v.detail += std::string(s.name) + " " + std::to_string(o.trials - o.failures) + "/" + std::to_string(o.trials);
    if (!o.ok()) v.detail += " (" + o.first_failure + ")";
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"golden 6x6 example: star, lambda, loops, dimensions 6, rank 5, eigenvector outside span", golden_example},
      {"Karp equals cycle enumeration on 1000 random matrices", karp},
      {"Floyd-Warshall closure equals the truncated series on 1000 definite matrices", closure},
      {"column-sum scaling strictly visualizes 1000 random matrices", strict},
      {"quotient inequalities characterize preserving scalings on 500 matrices", preserving},
      {"Hungarian method and assignment visualization on 500 matrices", assign},
      {"lambda, critical edges and star invariant under 500 diagonal similarities", invariant},
      {"float pipeline at n = 500 under 10 s with cubic scaling", performance},
      {"cone and visualization property suites, 500 trials each", properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::printf("criterion %zu: %s - %s (%s)\n", k + 1, v.pass ? "PASS" : "FAIL", criteria[k].first, v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
