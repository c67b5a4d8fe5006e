#include <doctest.h>

#include "helpers.hpp"
#include "support/random.hpp"

using namespace tropvis;
using tropvis::testing::exact;
using tropvis::testing::q;

TEST_SUITE("spectral") {

TEST_CASE("max_cycle_geometric_mean examples") {
  CHECK(max_cycle_geometric_mean(Matrix<Exact>::identity(3)) == q(1));
  CHECK(max_cycle_geometric_mean(exact("2\n1 8\n2 1\n")) == q(4));
  CHECK(max_cycle_geometric_mean(testing::golden6()) == q(1));
  CHECK(max_cycle_geometric_mean(Matrix<Exact>(3)).is_zero());
  CHECK(max_cycle_geometric_mean(exact("3\n0 2 0\n0 0 3\n1/5 0 1/2\n")) == Exact::root(Rational(6, 5), 3));
}

TEST_CASE("brute_force_lambda examples") {
  CHECK(brute_force_lambda(Matrix<Exact>::identity(3)).value() == q(1));
  CHECK(brute_force_lambda(exact("2\n0 2\n2 0\n")).value() == q(2));
  CHECK(brute_force_lambda(exact("1\n2\n")).value() == q(2));
  CHECK_THROWS_AS(brute_force_lambda(Matrix<Exact>::identity(9)), OracleLimitExceeded);
}

TEST_CASE("definite_form examples") {
  Matrix<Exact> d = exact("2\n1 2\n1/8 1\n");
  CHECK(definite_form(d) == d);
  CHECK(definite_form(exact("2\n1 8\n2 1\n")) == exact("2\n1/4 2\n1/2 1/4\n"));
  CHECK_THROWS_AS(definite_form(Matrix<Exact>(2)), ZeroLambda);
}

TEST_CASE("critical_structure examples") {
  SpectralData<Exact> id = critical_structure(Matrix<Exact>::identity(3));
  CHECK(id.critical_edges == std::vector<Edge>{{0, 0}, {1, 1}, {2, 2}});
  CHECK(id.n_critical_components == 3);
  CHECK(id.representatives == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.non_critical.empty());

  SpectralData<Exact> two = critical_structure(exact("2\n1/4 2\n1/2 1/4\n"));
  CHECK(two.critical_edges == std::vector<Edge>{{0, 1}, {1, 0}});
  CHECK(two.n_critical_components == 1);
  CHECK(two.representatives == std::vector<std::size_t>{0});

  SpectralData<Exact> g = critical_structure(testing::golden6());
  CHECK(g.critical_edges.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(g.is_critical_edge(i, i));
  CHECK(g.components.size() == 6);
  CHECK(g.non_critical.empty());

  SpectralData<Exact> mixed = critical_structure(exact("3\n1 0 0\n0 1/2 1\n0 0 0\n"));
  CHECK(mixed.critical_nodes == std::vector<std::size_t>{0});
  CHECK(mixed.non_critical == std::vector<std::size_t>{1, 2});
  CHECK(mixed.components.size() == mixed.n_critical_components + mixed.non_critical.size());

  CHECK_THROWS_AS(critical_structure(Matrix<Exact>(2)), ZeroLambda);
}

TEST_CASE("Karp agrees with enumeration") {
  testing::Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    auto a = testing::random_matrix(rng, testing::random_order(rng, 1, 6), 0.4);
    CHECK(compare_means(max_cycle_mean(a), brute_force_lambda(a)) == 0);
    auto fa = to_float(a);
    CHECK(approx_equal(max_cycle_geometric_mean(fa), brute_force_lambda(fa).value(), Tolerance{}));
  }
}

TEST_CASE("lambda is homogeneous") {
  testing::Rng rng(102);
  for (int t = 0; t < 200; ++t) {
    auto a = testing::random_nonzero_lambda(rng, testing::random_order(rng, 1, 6));
    Exact alpha(testing::random_positive(rng));
    CHECK(max_cycle_geometric_mean(scale(a, alpha)) == alpha * max_cycle_geometric_mean(a));
  }
}

TEST_CASE("lambda and critical edges are invariant under diagonal similarity") {
  testing::Rng rng(103);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = testing::random_order(rng, 1, 6);
    auto a = testing::random_nonzero_lambda(rng, n);
    auto b = diag_similarity(a, testing::random_scaling(rng, n));
    SpectralData<Exact> sa = critical_structure(a), sb = critical_structure(b);
    CHECK(sa.lambda == sb.lambda);
    CHECK(sa.critical_edges == sb.critical_edges);
  }
}

TEST_CASE("critical edges lie on cycles of mean lambda") {
  testing::Rng rng(104);
  for (int t = 0; t < 300; ++t) {
    auto a = testing::random_nonzero_lambda(rng, testing::random_order(rng, 1, 6));
    SpectralData<Exact> sd = critical_structure(a);
    CHECK(sd.critical_edges == brute_force_critical_edges(a));
    for (const auto& [i, j] : sd.critical_edges) {
      CHECK(sd.node_is_critical[i]);
      CHECK(sd.node_is_critical[j]);
    }
    CHECK(sd.representatives.size() == sd.n_critical_components);
    for (std::size_t r : sd.representatives) CHECK(sd.node_is_critical[r]);
    CHECK(sd.components.size() == sd.n_critical_components + sd.non_critical.size());

    SpectralData<LogReal> fs = critical_structure(to_float(a));
    CHECK(fs.critical_edges == sd.critical_edges);
  }
}

}  // TEST_SUITE
