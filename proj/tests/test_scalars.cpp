#include <doctest.h>

#include <random>

#include "soergel/field.hpp"
#include "soergel/linalg.hpp"

using namespace soergel;

TEST_SUITE("scalars") {

TEST_CASE("rationals are canonical") {
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  Rational r = parse_rational("12/18");
  CHECK(r.get_den() == 3);
  CHECK(r.get_num() == 2);
}

TEST_CASE("univariate helpers") {
  using namespace upoly;
  Poly p{Rational(-1), Rational(-1), Rational(1)};  // c^2 - c - 1
  CHECK(degree(p) == 2);
  CHECK(is_irreducible(p));
  CHECK_FALSE(is_irreducible(Poly{Rational(-1), Rational(0), Rational(1)}));
  auto roots = isolate_real_roots(p, Rational(1, 100));
  REQUIRE(roots.size() == 2);
  CHECK(roots[1].first < Rational(809, 500));
  CHECK(roots[1].second > Rational(809, 500));
  // (2x - 1)(x + 3)(x - 2)
  Poly q = mul(mul(Poly{Rational(-1), Rational(2)}, Poly{Rational(3), Rational(1)}), Poly{Rational(-2), Rational(1)});
  auto rr = rational_roots(q);
  REQUIRE(rr.size() == 3);
  CHECK(rr[0] == -3);
  CHECK(rr[1] == Rational(1, 2));
  CHECK(rr[2] == 2);
  CHECK(simplest_between(Rational(3, 10), Rational(2, 5)) == Rational(1, 3));
}

TEST_CASE("fields for 2cos(pi/m)") {
  CHECK(field_for_cos(3).is_rational());
  CHECK(field_for_cos(2).is_rational());
  CHECK(field_for_cos(kInfinity).is_rational());
  CHECK(two_cos_pi_over(3) == FieldElement(1L));
  CHECK(two_cos_pi_over(kInfinity) == FieldElement(2L));
  CHECK(two_cos_pi_over(2).is_zero());

  const TowerField& f5 = field_for_cos(5);
  CHECK(f5.minimal_poly() == upoly::Poly{Rational(-1), Rational(-1), Rational(1)});
  CHECK(f5.lower() > 0);
  CHECK(upoly::sign_at(f5.minimal_poly(), f5.lower()) * upoly::sign_at(f5.minimal_poly(), f5.upper()) <= 0);
  FieldElement c = FieldElement::generator(f5);
  CHECK(c.sign() == 1);
  CHECK((c - FieldElement(2L)).sign() == -1);
  CHECK(FieldElement().sign() == 0);

  FieldElement c4 = two_cos_pi_over(4), c5 = two_cos_pi_over(5), c6 = two_cos_pi_over(6);
  CHECK(c4 * c4 == FieldElement(2L));
  CHECK(c5 * c5 == c5 + FieldElement(1L));
  CHECK(c6 * c6 == FieldElement(3L));
}

TEST_CASE("field axioms on random elements") {
  const TowerField& f = field_for_cos(7);
  std::mt19937 rng(11);
  auto draw = [&] {
    std::vector<Rational> cs;
    for (int i = 0; i < f.degree(); ++i) {
      Rational r(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
      r.canonicalize();
      cs.push_back(r);
    }
    return FieldElement(f, cs);
  };
  for (int i = 0; i < 60; ++i) {
    FieldElement a = draw(), b = draw(), c = draw();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK((a * b).sign() == a.sign() * b.sign());
  }
}

TEST_CASE("sign is consistent with ordering of known values") {
  // 2cos(pi/7) ~ 1.80194
  FieldElement c = two_cos_pi_over(7);
  CHECK((c - FieldElement(Rational(9, 5))).sign() == 1);
  CHECK((c - FieldElement(Rational(181, 100))).sign() == -1);
}

TEST_CASE("mixed irrational fields are rejected") {
  CHECK_THROWS_AS(two_cos_pi_over(4) + two_cos_pi_over(5), std::domain_error);
}

TEST_CASE("dense linear algebra") {
  Matrix m(3, 3);
  long vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Scalar(vals[i][j]);
  CHECK(determinant(m) == Scalar(18L));
  CHECK((m * inverse(m)).is_identity());
  Matrix sing = m;
  for (int j = 0; j < 3; ++j) sing(2, j) = sing(0, j) + sing(1, j);
  CHECK(rank(sing) == 2);
  Matrix k = kernel(sing.transpose());
  REQUIRE(k.cols() == 1);
  CHECK(rank(sing.transpose() * k) == 0);
}

TEST_CASE("row echelon insertion") {
  RowEchelon e(3);
  CHECK(e.insert({{0, Scalar(1L)}, {2, Scalar(1L)}}));
  CHECK(e.insert({{1, Scalar(1L)}}));
  CHECK_FALSE(e.insert({{0, Scalar(2L)}, {1, Scalar(3L)}, {2, Scalar(2L)}}));
  CHECK(e.rank() == 2);
}

}
