#include <doctest.h>

#include "helpers.hpp"
#include "tropvis/cones.hpp"

using namespace tropvis;
using tropvis::testing::exact;
using tropvis::testing::q;

TEST_SUITE("cones") {

TEST_CASE("subeigencone_basis examples") {
  auto id = subeigencone_basis(Matrix<Exact>::identity(2));
  REQUIRE(id.generators.size() == 2);
  CHECK(id.generators[0] == Vector<Exact>{q(1), q(0)});
  CHECK(id.generators[1] == Vector<Exact>{q(0), q(1)});

  auto b = subeigencone_basis(exact("2\n1/4 2\n1/2 1/4\n"));
  REQUIRE(b.generators.size() == 1);
  CHECK(b.generators[0] == Vector<Exact>{q(1), q(1, 2)});

  auto g = subeigencone_basis(testing::golden6());
  CHECK(g.generators.size() == 6);
  CHECK(g.source_columns == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("eigencone_basis examples") {
  CHECK(eigencone_basis(Matrix<Exact>::identity(2)).generators.size() == 2);
  auto b = eigencone_basis(exact("2\n1/4 2\n1/2 1/4\n"));
  REQUIRE(b.generators.size() == 1);
  CHECK(b.generators[0] == Vector<Exact>{q(1), q(1, 2)});

  auto c = eigencone_basis(exact("2\n1 2\n1/8 1\n"));
  REQUIRE(c.generators.size() == 2);
  CHECK(c.generators[0] == Vector<Exact>{q(1), q(1, 8)});
  CHECK(c.generators[1] == Vector<Exact>{q(1), q(1, 2)});
}

TEST_CASE("membership examples") {
  CHECK(membership(Matrix<Exact>::identity(3), Vector<Exact>{q(2), q(1, 3), q(5)}) == Membership::eigen);
  const Exact s = q(7, 11);
  CHECK(membership(testing::golden6(), Vector<Exact>{s, s, s, q(1), q(1), q(1)}) == Membership::eigen);
  CHECK(membership(exact("2\n1 0\n0 0\n"), Vector<Exact>{q(1), q(1)}) == Membership::subeigen_only);
  CHECK(membership(exact("2\n1 2\n1/8 1\n"), Vector<Exact>{q(1), q(1)}) == Membership::outside);
  CHECK(membership(exact("2\n1 2\n1/8 1\n"), Vector<Exact>{q(3), q(9, 8)}) == Membership::eigen);
  CHECK(membership(exact("2\n1/4 2\n1/2 1/4\n"), Vector<Exact>{q(4), q(1)}) == Membership::outside);
  CHECK_THROWS_AS(membership(Matrix<Exact>::identity(2), Vector<Exact>{q(1)}), DimensionMismatch);
}

TEST_CASE("dimensions examples") {
  DimensionReport id = dimensions(Matrix<Exact>::identity(3));
  CHECK(id.maxdim_eigencone == 3);
  CHECK(id.maxdim_subeigencone == 3);
  CHECK(id.linear_hull_dim == 3);
  CHECK(id.linear_rank_star == 3u);

  DimensionReport b = dimensions(exact("2\n1/4 2\n1/2 1/4\n"));
  CHECK(b.maxdim_eigencone == 1);
  CHECK(b.maxdim_subeigencone == 1);
  CHECK(b.linear_hull_dim == 1);

  DimensionReport g = dimensions(testing::golden6());
  CHECK(g.maxdim_subeigencone == 6);
  CHECK(g.linear_hull_dim == 6);
  CHECK(g.linear_rank_star == 5u);
}

TEST_CASE("linear_rank examples") {
  CHECK(linear_rank(Matrix<Exact>::identity(4)) == 4);
  CHECK(linear_rank(exact("3\n1 1 1\n1 1 1\n1 1 1\n")) == 1);
  CHECK(linear_rank(testing::golden6()) == 5);
  CHECK(linear_rank(2, 3, {q(1), q(2), q(3), q(2), q(4), q(6)}) == 1);
}

TEST_CASE("float dimensions skip the linear rank") {
  auto f = std::get<Matrix<LogReal>>(parse_matrix("2\n1/4 2\n1/2 1/4\n", ModeRequest::floating));
  DimensionReport d = dimensions(f);
  CHECK(d.maxdim_subeigencone == 1);
  CHECK_FALSE(d.linear_rank_star.has_value());
}

}
