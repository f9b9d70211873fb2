#include <doctest.h>

#include <random>

#include "soergel/json_io.hpp"
#include "soergel/laurent.hpp"

using namespace soergel;

namespace {

LaurentPoly random_laurent(std::mt19937& rng) {
  LaurentPoly p;
  int n = static_cast<int>(rng() % 4);
  for (int i = 0; i < n; ++i)
    p += LaurentPoly::monomial(static_cast<long>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4);
  return p;
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("examples") {
  LaurentPoly v = LaurentPoly::v(), vi = LaurentPoly::v_inv(), q = LaurentPoly::q();
  CHECK(((v + vi) * LaurentPoly()).is_zero());
  CHECK(q * q == LaurentPoly::monomial(1, -4));
  LaurentPoly one_q = LaurentPoly(1) + q;
  CHECK(one_q * one_q == LaurentPoly(1) + LaurentPoly::monomial(2, -2) + LaurentPoly::monomial(1, -4));
  CHECK(v.bar() == vi);
  CHECK(one_q.bar() == LaurentPoly(1) + LaurentPoly::monomial(1, 2));
  CHECK(LaurentPoly().is_nonneg());
  CHECK((v + vi).is_nonneg());
  CHECK_FALSE((LaurentPoly(1) - LaurentPoly::monomial(1, 2)).is_nonneg());
  CHECK(one_q.eval_q1() == 2);
  CHECK(LaurentPoly().eval_q1() == 0);
  CHECK((LaurentPoly::monomial(1, 3) - LaurentPoly::monomial(1, -3)).eval_q1() == 0);
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p = LaurentPoly::v() - LaurentPoly::v();
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
}

TEST_CASE("ring axioms, bar and eval_q1 on random elements") {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a * b).eval_q1() == a.eval_q1() * b.eval_q1());
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("exponent overflow is detected") {
  LaurentPoly big = LaurentPoly::monomial(1, std::numeric_limits<int>::max() - 1);
  CHECK_THROWS_AS(big * LaurentPoly::monomial(1, 5), std::overflow_error);
}

TEST_CASE("json rendering round trip") {
  LaurentPoly p = LaurentPoly::monomial(3, -2) - LaurentPoly::monomial(BigInt("123456789012345678901234567890"), 5);
  json j = laurent_to_json(p);
  CHECK(j["v^-2"] == "3");
  CHECK(j["v^5"] == "-123456789012345678901234567890");
  CHECK(laurent_from_json(j) == p);
  CHECK_THROWS_AS(laurent_from_json(json{{"x^2", "1"}}), InputError);
}

}
