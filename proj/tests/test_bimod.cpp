#include <doctest.h>

#include <random>

#include "soergel/bimodule.hpp"
#include "soergel/decat.hpp"

using namespace soergel;

namespace {

std::shared_ptr<const PolyRing> a2_ring() {
  static auto ring = std::make_shared<const PolyRing>(geometric_rep(builtin_coxeter("A2")));
  return ring;
}

Poly random_poly(const PolyRing& r, std::mt19937& rng, int max_degree) {
  Poly p;
  for (int d = 0; d <= max_degree; ++d)
    for (Monomial m : mono::of_degree(r.nvars(), d))
      if (rng() % 3 == 0) p.add_term(m, Scalar(static_cast<long>(rng() % 7) - 3));
  return p;
}

}  // namespace

TEST_SUITE("bimod") {

TEST_CASE("monomials and polynomials") {
  CHECK(mono::count(3, 2) == 6);
  CHECK(mono::of_degree(3, 2).size() == 6);
  CHECK(mono::of_degree(2, -1).empty());
  CHECK(ring_dimension(3, 4) == 6);
  CHECK(ring_dimension(2, 3) == 0);
  Poly x = Poly::variable(0), y = Poly::variable(1);
  Poly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.is_homogeneous(2));
  CHECK(divide_linear(p, {Scalar(1L), Scalar(1L)}) == x - y);
  CHECK_THROWS_AS(divide_linear(x * x + y, {Scalar(1L), Scalar(0L)}), std::domain_error);
  CHECK(p.evaluate({Scalar(3L), Scalar(1L)}) == Scalar(8L));
}

TEST_CASE("Demazure splitting") {
  auto ring = a2_ring();
  std::mt19937 rng(41);
  for (int i = 0; i < 40; ++i) {
    Poly r = random_poly(*ring, rng, 6);
    for (int s = 0; s < 2; ++s) {
      auto [a, b] = ring->split(s, r);
      CHECK(ring->act(s, a) == a);
      CHECK(ring->act(s, b) == b);
      CHECK(a + b * ring->x(s) == r);
      Poly half = ring->demazure(s, r).scaled(Scalar(Rational(1, 2)));
      CHECK(half == b);
    }
  }
  CHECK(ring->act(0, ring->x(0)) == -ring->x(0));
}

TEST_CASE("right action of the basic bimodules") {
  auto ring = a2_ring();
  BSBimodule r(ring, {});
  CHECK(r.rank() == 1);
  BSBimodule th(ring, {0});
  CHECK(th.rank() == 2);
  CHECK(BSBimodule(ring, {0, 1, 0}).rank() == 8);
  const Poly& xs = ring->x(0);
  // (1 (x) x_s) x_s = x_s^2 (1 (x) 1)
  CHECK(th.right_mul(th.basis_element(1), xs) == th.left_mul(xs * xs, th.basis_element(0)));
  CHECK(th.right_mul(th.basis_element(0), xs) == th.basis_element(1));
  CHECK(th.basis_degree(0) == 0);
  CHECK(th.basis_degree(1) == 2);
  CHECK(BSBimodule(ring, {0}, 1).basis_degree(0) == -1);
}

TEST_CASE("right action is associative and commutes with the left action") {
  auto ring = a2_ring();
  BSBimodule m(ring, {0, 1, 0});
  std::mt19937 rng(43);
  for (int i = 0; i < 10; ++i) {
    Poly f = random_poly(*ring, rng, 2), g = random_poly(*ring, rng, 2), l = random_poly(*ring, rng, 1);
    FreeElement e = m.basis_element(static_cast<int>(rng() % 8));
    CHECK(m.right_mul(m.right_mul(e, f), g) == m.right_mul(e, f * g));
    CHECK(m.right_mul(m.left_mul(l, e), f) == m.left_mul(l, m.right_mul(e, f)));
  }
}

TEST_CASE("Hom dimensions follow the Hilbert series prediction") {
  auto ring = a2_ring();
  GroupTable g(builtin_coxeter("A2"));
  HeckeAlgebra h(g);
  BSBimodule target(ring, {});
  for (const Word& w : std::vector<Word>{{}, {0}, {0, 1}, {0, 1, 0}, {1, 0, 1}, {0, 0}}) {
    BSBimodule m(ring, w);
    HomSeries hs = hom_series(m, target, -6, 8);
    auto shifts = hom_rank_formula(h, w).shifts;
    for (int d = -6; d <= 8; ++d) {
      std::size_t expected = 0;
      for (int s : shifts) expected += ring_dimension(2, d + s);
      CHECK(hs.dim(d) == static_cast<int>(expected));
    }
    CHECK(hs.shifts() == shifts);
    CHECK(hs.free_consistent);
    for (const auto& basis : hs.bases)
      for (const auto& phi : basis) CHECK(is_bimodule_map(phi, m, target));
  }
  BSBimodule sts(ring, {0, 1, 0});
  CHECK(hom_solve(sts, target, -2).size() == 1);
  CHECK(hom_solve(sts, target, 0).size() == 3);
  CHECK(hom_solve(BSBimodule(ring, {0}), target, -2).empty());
  CHECK(hom_solve(BSBimodule(ring, {0}), target, 0).size() == 1);
}

TEST_CASE("Hom between Bott-Samelson bimodules") {
  auto ring = a2_ring();
  BSBimodule s(ring, {0});
  HomSeries hs = hom_series(s, s, hom_min_degree(s, s), 6);
  CHECK(hs.shifts() == std::vector<int>{-2, 0});
  CHECK(hs.dim(-2) == 0);
  CHECK(hs.dim(0) == 1);
  CHECK(hs.dim(2) == 3);
  HomSeries hs2 = hom_series(BSBimodule(ring, {0, 1, 0}), s, -6, 6);
  CHECK(hs2.shifts() == std::vector<int>{-2, 0, 0, 2});
  CHECK(hs2.free_consistent);
}

TEST_CASE("morphism algebra") {
  auto ring = a2_ring();
  BSBimodule s(ring, {0});
  auto id = identity_morphism(s);
  CHECK(is_bimodule_map(id, s, s));
  CHECK(compose(id, id) == id);
  auto maps = hom_solve(s, s, 2);
  for (const auto& phi : maps) {
    CHECK(has_degree(phi, s, s, 2));
    CHECK(compose(phi, id) == phi);
    CHECK(is_bimodule_map(right_act(phi, s, 0), s, s));
  }
}

TEST_CASE("caps") {
  auto ring = a2_ring();
  BSBimodule s(ring, {0});
  CHECK_THROWS_AS(HomLayout(s, s, 12, DegreeCaps{10, 8}), CapExceeded);
  CHECK_THROWS_AS(BSBimodule(ring, Word(17, 0)), CapExceeded);
}

}
