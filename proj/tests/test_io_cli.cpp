#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "tropvis/cli.hpp"

using namespace tropvis;
using tropvis::testing::exact;
using tropvis::testing::q;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err, input);
  return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return std::string(TROPVIS_EXAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse_matrix examples") {
  Matrix<Exact> a = exact("2\n1 2\n1/8 1\n");
  CHECK(a(0, 1) == q(2));
  CHECK(a(1, 0) == q(1, 8));
  CHECK_THROWS_AS(parse_matrix("1\n-3\n"), NegativeEntry);
  Matrix<Exact> g = std::get<Matrix<Exact>>(parse_matrix(read_file(example("golden6.txt"))));
  CHECK(g == testing::golden6());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_matrix("2\n1 2\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_matrix("2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 2 3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("domain: plus\n1\n0\n", ModeRequest::exact), ModeMismatch);
}

TEST_CASE("domains and modes") {
  auto p = parse_matrix("# logs\ndomain: plus\n2\n0 -inf\n1.5 0\n");
  REQUIRE(std::holds_alternative<Matrix<LogReal>>(p));
  const auto& f = std::get<Matrix<LogReal>>(p);
  CHECK(f(0, 1).is_zero());
  CHECK(f(1, 0).log() == doctest::Approx(1.5));
  auto t = parse_matrix("2\n1 2\n1/8 1\n", ModeRequest::floating);
  CHECK(std::get<Matrix<LogReal>>(t)(1, 0).log() == doctest::Approx(std::log(0.125)));
}

TEST_CASE("serialization round trips") {
  Matrix<Exact> a = exact("3\n1 0 5/11\n7/11 2 0\n0 1/3 1\n");
  CHECK(std::get<Matrix<Exact>>(parse_matrix(serialize_matrix(a))) == a);
  auto f = std::get<Matrix<LogReal>>(parse_matrix("2\n1 0\n1/8 3\n", ModeRequest::floating));
  auto back = std::get<Matrix<LogReal>>(parse_matrix(serialize_matrix(f)));
  CHECK(back(0, 1).is_zero());
  CHECK(back(1, 0).log() == f(1, 0).log());
  CHECK(back(1, 1).log() == f(1, 1).log());
}

}

TEST_SUITE("cli") {

TEST_CASE("lambda report") {
  Run r = run({"lambda", example("a2.txt")});
  CHECK(r.code == 0);
  json j = r.report();
  CHECK(j["command"] == "lambda");
  CHECK(j["mode"] == "exact");
  CHECK(j["n"] == 2);
  CHECK(j["lambda"] == "4");
}

TEST_CASE("star diverges with a domain error") {
  Run r = run({"star", "-"}, "1\n2\n");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("lambda(A) = 2 > 1") != std::string::npos);
}

TEST_CASE("dims on the 6x6 example") {
  json j = run({"dims", example("golden6.txt")}).report();
  CHECK(j["maxdim_subeigencone"] == 6);
  CHECK(j["linear_hull_dim"] == 6);
  CHECK(j["linear_rank_star"] == 5);
}

TEST_CASE("visualize and check") {
  json v = run({"visualize", "-"}, "2\n1 2\n1/8 1\n").report();
  CHECK(v["scaling"] == json({"3", "9/8"}));
  CHECK(v["check"]["status"] == "strictly_visualized");
  json c = run({"check", "-"}, "2\n1 2\n1/8 1\n").report();
  CHECK(c["status"] == "not_visualized");
  CHECK(c["witnesses"][0]["kind"] == "exceeds_lambda");
  Run p = run({"visualize", "--method", "perron", "-"}, "2\n1/4 2\n1/2 1/4\n");
  CHECK(p.code == 0);
  CHECK(p.report()["mode"] == "float");
  CHECK(p.report()["check"]["status"] == "strictly_visualized");
}

TEST_CASE("assign report") {
  json j = run({"assign", example("assign.txt")}).report();
  CHECK(j["permutation"] == json({0, 1}));
  CHECK(j["weight"] == "6");
  CHECK(j["result"] == json::array({json::array({"1", "8/9"}), json::array({"3/4", "1"})}));
}

TEST_CASE("oracle stages agree") {
  for (const char* stage : {"lambda", "star", "critical", "assign"}) {
    json j = run({"oracle", stage, example("idem.txt")}).report();
    CHECK(j["agree"] == true);
  }
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"basis", example("a2.txt")}).code == 1);
  CHECK(run({"basis", "--eigen", "--subeigen", example("a2.txt")}).code == 1);
  Run neg = run({"lambda", example("neg.txt")});
  CHECK(neg.code == 1);
  CHECK(neg.err.find("line 2") != std::string::npos);
  CHECK(run({"rank", "--mode", "float", example("a2.txt")}).code == 1);
}

TEST_CASE("global options") {
  json j = run({"--seed", "7", "--timing", "lambda", example("two.txt")}).report();
  CHECK(j["seed"] == 7);
  CHECK(j["timing"]["seconds"].is_number());
  json f = run({"--mode", "float", "lambda", example("a2.txt")}).report();
  CHECK(f["mode"] == "float");
}

}
