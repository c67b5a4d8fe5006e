#include <doctest.h>

#include "helpers.hpp"
#include "support/random.hpp"

using namespace tropvis;
using tropvis::testing::q;

TEST_SUITE("exact") {

TEST_CASE("parse_rational") {
  CHECK(*parse_rational("3") == Rational(3));
  CHECK(*parse_rational("-2/6") == Rational(-1, 3));
  CHECK(*parse_rational("0.125") == Rational(1, 8));
  CHECK(*parse_rational("1e-3") == Rational(1, 1000));
  CHECK(*parse_rational("2.5E2") == Rational(250));
  CHECK_FALSE(parse_rational("1/0"));
  CHECK_FALSE(parse_rational("1/-2"));
  CHECK_FALSE(parse_rational("abc"));
  CHECK_FALSE(parse_rational("1/2/3"));
  CHECK_FALSE(parse_rational(""));
}

TEST_CASE("roots canonicalize") {
  CHECK(Exact::root(Rational(16), 2) == q(4));
  CHECK(Exact::root(Rational(8), 6).to_string() == "2^(1/2)");
  CHECK(Exact::root(Rational(1, 4), 4).to_string() == "1/2*2^(1/2)");
  CHECK(Exact::root(Rational(27), 2).to_string() == "3*3^(1/2)");
  CHECK(Exact::root(Rational(5, 3), 2).to_string() == "1/3*15^(1/2)");
  Exact r2 = Exact::root(Rational(2), 2);
  CHECK(r2 * r2 == q(2));
  CHECK(r2.inverse() * q(2) == r2);
  CHECK(q(7, 5) < r2);
  CHECK(r2 < q(17, 12));
  Exact c = Exact::root(Rational(6, 5), 3);
  CHECK(pow(c, 3) == q(6, 5));
  CHECK(nth_root(pow(c, 2), 2) == c);
  CHECK(nth_root(q(9, 4), 2) == q(3, 2));
}

TEST_CASE("equivalent extensions combine") {
  Exact a = Exact::root(Rational(12), 2);
  Exact b = Exact::root(Rational(1, 3), 2);
  CHECK(a * b == q(2));
  CHECK(a - q(6) * b == q(0));
  Exact r4 = Exact::root(Rational(2), 4);
  Exact r2 = Exact::root(Rational(2), 2);
  CHECK(r4 * r4 == r2);
  CHECK((r2 + r4).sign() > 0);
  CHECK(std::abs((r2 + r4).to_double() - (std::sqrt(2.0) + std::pow(2.0, 0.25))) < 1e-12);
  CHECK(nth_root(r2, 2) == r4);
}

TEST_CASE("field arithmetic") {
  Exact t = Exact::root(Rational(3), 3);
  Exact a = q(1) + q(2) * t + q(1, 2) * t * t;
  Exact b = a.inverse();
  CHECK(a * b == q(1));
  CHECK((a - a).is_zero());
  CHECK((a - a).is_rational());
  CHECK(a.sign() > 0);
  CHECK((q(1) - t).sign() < 0);
  CHECK(std::abs(a.to_double() - (1 + 2 * std::cbrt(3.0) + 0.5 * std::cbrt(9.0))) < 1e-12);
  CHECK_THROWS_AS((void)(t == Exact::root(Rational(2), 2)), ModeMismatch);
}

TEST_CASE("near-ties are decided exactly") {
  // 577/408 differs from sqrt(2) by about 2e-6; 665857/470832 by about 1.6e-12.
  Exact r2 = Exact::root(Rational(2), 2);
  CHECK(r2 < q(577, 408));
  CHECK(r2 < q(665857, 470832));
  CHECK(q(470832, 665857) * q(2) < r2);
}

TEST_CASE("random field identities") {
  testing::Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    unsigned k = static_cast<unsigned>(testing::random_order(rng, 2, 5));
    Exact theta = Exact::root(testing::random_positive(rng), k);
    Exact a = q(0), b = q(0);
    Exact p = q(1);
    for (unsigned e = 0; e < k; ++e) {
      a += Exact(testing::random_positive(rng)) * p;
      b += Exact(testing::random_positive(rng) - Rational(5)) * p;
      p *= theta;
    }
    CHECK((a + b) - b == a);
    CHECK((a * b) / a == b);
    CHECK(a * (b + a) == a * b + a * a);
    CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) <=
          1e-9 * std::max(1.0, std::abs(a.to_double() * b.to_double())));
    CHECK(((a < b) == (a.to_double() < b.to_double()) ||
           std::abs(a.to_double() - b.to_double()) < 1e-9));
  }
}

}  // TEST_SUITE
