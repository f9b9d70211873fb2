#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "soergel/soergel_ops.hpp"

using namespace soergel;

namespace {

struct A2Pair {
  GroupTable g{builtin_coxeter("A2")};
  HeckeAlgebra h{g};
  KLTable kl{h};
  BaseChange q{direct_sum_trivial(geometric_rep(g.matrix()), 1).second};
  std::shared_ptr<const PolyRing> ring = std::make_shared<const PolyRing>(geometric_rep(g.matrix()));
};

const A2Pair& a2() {
  static A2Pair p;
  return p;
}

std::vector<Scalar> point(std::initializer_list<long> xs) {
  std::vector<Scalar> p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

std::vector<int> ranks(const Decomposition& d) {
  std::vector<int> r;
  for (const auto& s : d.summands) r.push_back(s.rank);
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

TEST_SUITE("ops") {

TEST_CASE("exact sequence for theta_s") {
  for (int s = 0; s < 2; ++s) {
    auto rep = theta_exact_sequence(a2().ring, s, 10);
    CHECK(rep.ok());
    CHECK(rep.m_s.m[0][0] == Poly(Scalar(1L)));
    CHECK(rep.m_s.m[1][0] == a2().ring->x(s));
    CHECK(rep.mu_one == FreeElement{a2().ring->x(s), Poly(Scalar(-1L))});
  }
  CHECK(theta_exact_sequence(a2().q.source(), 0, 8).ok());
}

TEST_CASE("generic splitting") {
  const PolyRing& r = *a2().ring;
  auto rep = generic_splitting(r, 0, point({1, 1}));
  CHECK(rep.ok());
  CHECK(rep.determinant == Scalar(-2L) * rep.xs_value);
  CHECK(rep.nu_e1 == Scalar(Rational(-1, 2)));
  CHECK(r.x(0).evaluate(point({1, 2})).is_zero());
  CHECK_THROWS_AS(generic_splitting(r, 0, point({1, 2})), NonGenericPoint);
  CHECK_THROWS_AS(generic_splitting(r, 0, point({0, 0})), NonGenericPoint);
  std::mt19937 rng(47);
  int done = 0;
  while (done < 5) {
    auto p = point({static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 13) - 6});
    if (r.x(1).evaluate(p).is_zero()) {
      CHECK_THROWS_AS(generic_splitting(r, 1, p), NonGenericPoint);
      continue;
    }
    CHECK(generic_splitting(r, 1, p).nu_mu.is_one());
    ++done;
  }
}

TEST_CASE("standard matrices") {
  const PolyRing& r = *a2().ring;
  const GroupTable& g = a2().g;
  auto one = standard_matrix(r, g, {}, point({1, 2}));
  CHECK(one.matrix.is_identity());
  CHECK(one.matrix.rows() == 1);
  auto p = point({1, 3});
  auto m = standard_matrix(r, g, {0}, p);
  Scalar xs = r.x(0).evaluate(p);
  CHECK(m.matrix(0, 0) == Scalar(1L));
  CHECK(m.matrix(0, 1) == xs);
  CHECK(m.matrix(1, 1) == -xs);
  CHECK(m.determinant == Scalar(-2L) * xs);
  auto sts = standard_matrix(r, g, {0, 1, 0}, p);
  CHECK_FALSE(sts.determinant.is_zero());
  std::map<Element, BigInt> labels;
  for (Element x : sts.labels) labels[x] += 1;
  CHECK(labels == oracle::subsequence_counts(g, {0, 1, 0}));

  std::mt19937 rng(53);
  for (const Word& w : std::vector<Word>{{0, 1}, {1, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}) {
    int ok = 0;
    while (ok < 5) {
      auto pt = point({static_cast<long>(rng() % 15) - 7, static_cast<long>(rng() % 15) - 7});
      std::optional<StandardMatrix> sm;
      try {
        sm = standard_matrix(r, g, w, pt);
      } catch (const NonGenericPoint&) {
        continue;
      }
      CHECK_FALSE(sm->determinant.is_zero());
      ++ok;
    }
  }
  CHECK_THROWS_AS(standard_matrix(r, g, {0}, point({0, 0})), NonGenericPoint);
}

TEST_CASE("adjunction formulas") {
  auto ring = a2().ring;
  BSBimodule r(ring, {}), t(ring, {1});
  for (int d = -4; d <= 4; d += 2) {
    auto rep = check_adjunction(0, t, r, d);
    CHECK(rep.ok());
  }
  CHECK(check_adjunction(0, r, r, 0).dim_left == 1);
  // F(m_s)(1) = x_s e0 + e1
  auto es = theta_exact_sequence(ring, 0, 2);
  auto f = adjunction_f(0, r, r, es.m_s);
  CHECK(f.m.size() == 1);
  CHECK(f.m[0] == FreeElement{ring->x(0), Poly(Scalar(1L))});
  CHECK(check_adjunction(1, BSBimodule(ring, {0}), BSBimodule(ring, {0}), 0).ok());
}

TEST_CASE("degree zero endomorphisms") {
  auto ring = a2().ring;
  auto e_s = end0_algebra(BSBimodule(ring, {0}));
  CHECK(e_s.dim() == 1);
  CHECK(e_s.local());
  CHECK(end0_algebra(BSBimodule(ring, {})).dim() == 1);
  auto e_sts = end0_algebra(BSBimodule(ring, {0, 1, 0}));
  CHECK(e_sts.dim() == 2);
  CHECK(e_sts.idempotents.size() == 2);
  auto e_ss = end0_algebra(BSBimodule(ring, {0, 0}));
  CHECK(e_ss.dim() == 5);
  CHECK(e_ss.radical.size() == 3);
  CHECK(e_ss.nilpotency_index == 2);
  for (const auto* a : {&e_s, &e_sts, &e_ss}) {
    std::vector<Scalar> sum(a->dim());
    for (const auto& e : a->idempotents) {
      CHECK(a->multiply(e, e) == e);
      for (int i = 0; i < a->dim(); ++i) sum[i] += e[i];
    }
    CHECK(sum == a->unit);
  }
}

TEST_CASE("decompositions") {
  auto ring = a2().ring;
  const KLTable& kl = a2().kl;
  auto d_s = decompose_bs(BSBimodule(ring, {0}), &kl);
  CHECK(ranks(d_s) == std::vector<int>{2});
  auto d_sts = decompose_bs(BSBimodule(ring, {0, 1, 0}), &kl);
  CHECK(ranks(d_sts) == std::vector<int>{2, 6});
  CHECK(d_sts.matches_prediction == true);
  auto d_ss = decompose_bs(BSBimodule(ring, {0, 0}), &kl);
  CHECK(ranks(d_ss) == std::vector<int>{2, 2});
  CHECK(d_ss.matches_prediction == true);
  auto d_shift = decompose_bs(BSBimodule(ring, {0, 1, 0}, 3), &kl);
  CHECK(d_shift.matches_prediction == true);
  CHECK(decompose_bs(BSBimodule(ring, {0, 1, 0, 1}), &kl).matches_prediction == true);
}

TEST_CASE("summand ranks do not depend on the choice of idempotents") {
  auto ring = a2().ring;
  BSBimodule m(ring, {0, 0});
  auto a = end0_algebra(m);
  // conjugate by the unit 1 + j with j in the radical
  for (const auto& j : a.radical) {
    std::vector<Scalar> u = a.unit, ui = a.unit;
    for (int i = 0; i < a.dim(); ++i) {
      u[i] += j[i];
      ui[i] -= j[i];
    }
    REQUIRE(a.multiply(u, ui) == a.unit);  // j^2 = 0 here
    std::vector<int> r1, r2;
    for (const auto& e : a.idempotents) {
      auto conj = a.multiply(a.multiply(u, e), ui);
      CHECK(a.multiply(conj, conj) == conj);
      auto rank_of = [&](const std::vector<Scalar>& x) {
        auto phi = a.morphism(x, m.rank());
        Matrix c(m.rank(), m.rank());
        for (int p = 0; p < m.rank(); ++p)
          for (int q = 0; q < m.rank(); ++q) c(p, q) = phi.m[p][q].constant_term();
        return rank(c);
      };
      r1.push_back(rank_of(e));
      r2.push_back(rank_of(conj));
    }
    std::sort(r1.begin(), r1.end());
    std::sort(r2.begin(), r2.end());
    CHECK(r1 == r2);
  }
}

TEST_CASE("base change functor") {
  const BaseChange& q = a2().q;
  for (const Word& w : std::vector<Word>{{}, {0}, {0, 1}, {0, 1, 0}}) {
    BSBimodule m(q.source(), w);
    auto x = x_functor(m, q);
    CHECK(x.structure_matches);
    CHECK(x.image.word() == w);
    CHECK(x.image.rank() == m.rank());
    CHECK(x.image.shift() == m.shift());
  }
  for (int s = 0; s < 2; ++s) CHECK(q.apply(q.source()->x(s)) == q.target()->x(s));
  CHECK_THROWS_AS(x_functor(BSBimodule(a2().ring, {0}), q), std::invalid_argument);
}

TEST_CASE("Hom generators agree over R and R'") {
  const BaseChange& q = a2().q;
  auto R = q.source();
  for (const Word& m : std::vector<Word>{{0}, {0, 1}, {0, 1, 0}})
    for (const Word& n : std::vector<Word>{{}, {0}}) {
      auto rep = verify_theorem1(BSBimodule(R, m), BSBimodule(R, n), q, 6);
      CHECK(rep.ok());
      CHECK(rep.free);
      CHECK(rep.free_prime);
    }
  auto sts = verify_theorem1(BSBimodule(R, {0, 1, 0}), BSBimodule(R, {}), q, 6);
  CHECK(sts.shifts == std::vector<int>{0, 2});
  auto rr = verify_theorem1(BSBimodule(R, {}), BSBimodule(R, {}), q, 4);
  CHECK(rr.shifts == std::vector<int>{0});
  CHECK(rr.shifts_prime == std::vector<int>{0});
}

TEST_CASE("indecomposability agrees over R and R'") {
  const BaseChange& q = a2().q;
  auto R = q.source();
  auto s = verify_theorem2(BSBimodule(R, {0}), q);
  CHECK(s.ok());
  CHECK(s.indecomposable);
  auto sts = verify_theorem2(BSBimodule(R, {0, 1, 0}), q);
  CHECK(sts.ok());
  CHECK_FALSE(sts.indecomposable);
  CHECK(sts.dim == 2);
  CHECK(sts.ranks == std::vector<int>{2, 6});
  auto e = verify_theorem2(BSBimodule(R, {}), q);
  CHECK(e.ok());
  CHECK(e.indecomposable_prime);
  auto ss = verify_theorem2(BSBimodule(R, {0, 0}), q);
  CHECK(ss.ok());
  CHECK(ss.lifted);
  CHECK(ss.dim == 6);
  CHECK(ss.dim_prime == 5);
}

TEST_CASE("lifted idempotents map to the given ones") {
  const BaseChange& q = a2().q;
  BSBimodule m(q.source(), {0, 1, 0});
  BSBimodule mp = x_functor(m, q).image;
  auto a = end0_algebra(m), ap = end0_algebra(mp);
  auto lift = lift_idempotents(m, a, mp, ap, q);
  CHECK(lift.ok);
  REQUIRE(lift.lifted.size() == ap.idempotents.size());
  for (std::size_t i = 0; i < lift.lifted.size(); ++i) {
    CHECK(compose(lift.lifted[i], lift.lifted[i]) == lift.lifted[i]);
    CHECK(q.apply(lift.lifted[i]) == ap.morphism(ap.idempotents[i], mp.rank()));
  }
}

}
