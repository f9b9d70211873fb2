#include "soergel/soergel_ops.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace soergel {

namespace {

SparseVector to_sparse(const std::vector<Scalar>& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

std::vector<Scalar> axpy_dense(std::vector<Scalar> y, const Scalar& a, const std::vector<Scalar>& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
  return y;
}

/// Coordinates of a homogeneous free-module element: (basis index, monomial) -> column.
class GradedCoords {
 public:
  GradedCoords(const BSBimodule& m, int degree) {
    for (int e = 0; e < m.rank(); ++e) {
      int g = degree - m.basis_degree(e);
      if (g < 0 || g % 2 != 0) continue;
      for (Monomial mon : mono::of_degree(m.ring().nvars(), g / 2)) index_.emplace(key(e, mon), size_++);
    }
  }
  int size() const { return size_; }
  SparseVector vector(const FreeElement& x) const {
    SparseVector v;
    for (std::size_t e = 0; e < x.size(); ++e)
      for (const auto& [mon, c] : x[e].terms()) v.emplace_back(index_.at(key(static_cast<int>(e), mon)), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

 private:
  static std::uint64_t key(int e, Monomial m) { return (m << 16) ^ static_cast<std::uint64_t>(e); }
  std::unordered_map<std::uint64_t, int> index_;
  int size_ = 0;
};

std::vector<Scalar> faddeev_leverrier(const Matrix& a) {
  const int m = a.rows();
  std::vector<Scalar> c(m + 1);
  c[m] = Scalar(1L);
  Matrix mk(m, m);
  for (int k = 1; k <= m; ++k) {
    mk = a * mk + Matrix::identity(m).scaled(c[m - k + 1]);
    Matrix am = a * mk;
    Scalar tr;
    for (int i = 0; i < m; ++i) tr += am(i, i);
    c[m - k] = -(tr / Scalar(static_cast<long>(k)));
  }
  return c;
}

}  // namespace

// --- exact sequence -------------------------------------------------------------------

ExactSequenceReport theta_exact_sequence(const std::shared_ptr<const PolyRing>& ring, int s, int max_degree) {
  ExactSequenceReport rep;
  rep.max_degree = max_degree;
  BSBimodule th(ring, {s});
  BSBimodule r(ring, {});
  const Poly& xs = ring->x(s);
  rep.m_s.degree = 0;
  rep.m_s.m = {{Poly(Scalar(1L))}, {xs}};
  rep.mu_one = {xs, Poly(Scalar(-1L))};

  rep.composition_zero = soergel::apply(rep.m_s, rep.mu_one)[0].is_zero();
  rep.m_bimodule = is_bimodule_map(rep.m_s, th, r);
  rep.mu_twisted_linear = true;
  for (int j = 0; j < ring->nvars(); ++j)
    if (th.right_var(rep.mu_one, j) != th.left_mul(ring->act(s, Poly::variable(j)), rep.mu_one))
      rep.mu_twisted_linear = false;

  rep.m_surjective = rep.mu_injective = rep.exact_middle = true;
  const int n = ring->nvars();
  for (int d = 0; d <= max_degree; d += 2) {
    GradedCoords theta_d(th, d), r_d(r, d);
    RowEchelon image_m(std::max(1, r_d.size()));
    for (int e = 0; e < 2; ++e)
      for (Monomial mon : mono::of_degree(n, (d - th.basis_degree(e)) / 2)) {
        if (d - th.basis_degree(e) < 0) break;
        FreeElement x = th.zero();
        x[e] = Poly::term(mon, Scalar(1L));
        image_m.insert(r_d.vector(soergel::apply(rep.m_s, x)));
      }
    RowEchelon image_mu(std::max(1, theta_d.size()));
    for (Monomial mon : mono::of_degree(n, d / 2 - 1)) {
      FreeElement y = th.left_mul(Poly::term(mon, Scalar(1L)), rep.mu_one);
      image_mu.insert(theta_d.vector(y));
    }
    const int dim_r = static_cast<int>(ring_dimension(n, d));
    const int dim_r2 = static_cast<int>(ring_dimension(n, d - 2));
    if (image_m.rank() != dim_r) rep.m_surjective = false;
    if (image_mu.rank() != dim_r2) rep.mu_injective = false;
    if (image_mu.rank() != theta_d.size() - image_m.rank()) rep.exact_middle = false;
  }
  return rep;
}

// --- generic fibres ---------------------------------------------------------------------

SplittingReport generic_splitting(const PolyRing& ring, int s, const std::vector<Scalar>& point) {
  if (static_cast<int>(point.size()) != ring.nvars()) throw std::invalid_argument("point has the wrong dimension");
  SplittingReport rep;
  rep.xs_value = ring.x(s).evaluate(point);
  if (rep.xs_value.is_zero()) throw NonGenericPoint("non-generic point: x_s vanishes there");
  Scalar sxs = ring.act(s, ring.x(s)).evaluate(point);
  rep.change_of_basis = Matrix(2, 2);
  rep.change_of_basis(0, 0) = Scalar(1L);
  rep.change_of_basis(0, 1) = rep.xs_value;
  rep.change_of_basis(1, 0) = Scalar(1L);
  rep.change_of_basis(1, 1) = sxs;
  rep.determinant = determinant(rep.change_of_basis);
  // nu_s(a (x) b) = a s(b) / (2 x_s)
  Scalar two_xs = Scalar(2L) * rep.xs_value;
  rep.nu_e0 = Scalar(1L) / two_xs;
  rep.nu_e1 = sxs / two_xs;
  rep.nu_mu = rep.xs_value * rep.nu_e0 - rep.nu_e1;
  return rep;
}

StandardMatrix standard_matrix(const PolyRing& ring, const GroupTable& g, const Word& word,
                               const std::vector<Scalar>& point) {
  if (static_cast<int>(point.size()) != ring.nvars()) throw std::invalid_argument("point has the wrong dimension");
  const int k = static_cast<int>(word.size());
  if (k > 12) throw CapExceeded("standard matrices are limited to words of length 12");
  const int size = 1 << k;
  StandardMatrix out;
  out.matrix = Matrix(size, size);
  for (int eps = 0; eps < size; ++eps) {
    Word sub;
    std::vector<Scalar> q = point;
    std::vector<Scalar> factor(k);
    for (int i = 0; i < k; ++i) {
      if ((eps >> i) & 1) {
        q = soergel::apply(ring.rep().matrix(word[i]), q);
        sub.push_back(word[i]);
      }
      Scalar v;
      for (int c = 0; c < ring.nvars(); ++c) v += ring.x_form(word[i])[c] * q[c];
      if (v.is_zero()) throw NonGenericPoint("non-generic point for the standard matrix");
      factor[i] = std::move(v);
    }
    out.labels.push_back(g.evaluate(sub));
    for (int col = 0; col < size; ++col) {
      Scalar entry(1L);
      for (int i = 0; i < k; ++i)
        if ((col >> i) & 1) entry *= factor[i];
      out.matrix(eps, col) = std::move(entry);
    }
  }
  out.determinant = determinant(out.matrix);
  return out;
}

// --- adjunction ------------------------------------------------------------------------

BSBimodule theta(int s, const BSBimodule& m) {
  Word w{s};
  w.insert(w.end(), m.word().begin(), m.word().end());
  return BSBimodule(m.ring_ptr(), std::move(w), m.shift());
}

BSMorphism adjunction_f(int s, const BSBimodule& src, const BSBimodule& tgt, const BSMorphism& f) {
  const PolyRing& ring = src.ring();
  if (static_cast<int>(f.m.size()) != 2 * src.rank()) throw std::invalid_argument("f must start at theta_s src");
  // iota(n) = 1 (x) n in theta_s tgt
  auto iota = [&](const FreeElement& n) {
    FreeElement out(2 * tgt.rank());
    for (int g = 0; g < tgt.rank(); ++g) {
      if (n[g].is_zero()) continue;
      auto [a, b] = ring.split(s, n[g]);
      out[g << 1] += a;
      out[(g << 1) | 1] += b;
    }
    return out;
  };
  BSMorphism r;
  r.degree = f.degree + 2;
  for (int d = 0; d < src.rank(); ++d) {
    FreeElement first = iota(f.m[d << 1]);
    FreeElement second = iota(f.m[(d << 1) | 1]);
    for (std::size_t i = 0; i < first.size(); ++i) first[i] = ring.x(s) * first[i] + second[i];
    r.m.push_back(std::move(first));
  }
  return r;
}

BSMorphism adjunction_g(int s, const BSBimodule& src, const BSBimodule& tgt, const BSMorphism& g) {
  const PolyRing& ring = src.ring();
  if (static_cast<int>(g.m.size()) != src.rank()) throw std::invalid_argument("g must start at src");
  BSMorphism r;
  r.degree = g.degree - 2;
  r.m.assign(2 * src.rank(), std::vector<Poly>(tgt.rank()));
  for (int d = 0; d < src.rank(); ++d)
    for (int e0 = 0; e0 < 2; ++e0) {
      // second component of x_s^e0 g(e_d) in theta_s tgt = 1 (x) tgt + x_s (x) tgt
      FreeElement& row = r.m[(d << 1) | e0];
      for (int idx = 0; idx < 2 * tgt.rank(); ++idx) {
        Poly c = g.m[d][idx];
        if (c.is_zero()) continue;
        if (e0) c = ring.x(s) * c;
        auto [a, b] = ring.split(s, c);
        if (idx & 1) b = b * ring.x(s);
        row[idx >> 1] += b;
      }
    }
  return r;
}

AdjunctionReport check_adjunction(int s, const BSBimodule& src, const BSBimodule& tgt, int d, const DegreeCaps& caps) {
  AdjunctionReport rep;
  rep.degree = d;
  BSBimodule ts = theta(s, src), tt = theta(s, tgt);
  auto left = hom_solve(ts, tgt, d, caps);
  auto right = hom_solve(src, tt, d + 2, caps);
  rep.dim_left = static_cast<int>(left.size());
  rep.dim_right = static_cast<int>(right.size());
  for (const auto& f : left) {
    BSMorphism ff = adjunction_f(s, src, tgt, f);
    if (!is_bimodule_map(ff, src, tt)) rep.images_are_maps = false;
    if (!(adjunction_g(s, src, tgt, ff) == f)) rep.gf_identity = false;
  }
  for (const auto& g : right) {
    BSMorphism gg = adjunction_g(s, src, tgt, g);
    if (!is_bimodule_map(gg, ts, tgt)) rep.images_are_maps = false;
    if (!(adjunction_f(s, src, tgt, gg) == g)) rep.fg_identity = false;
  }
  return rep;
}

// --- End_0 --------------------------------------------------------------------------------

std::vector<Scalar> End0Algebra::multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  std::vector<Scalar> out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      out = axpy_dense(std::move(out), a[i] * b[j], structure[i][j]);
    }
  }
  return out;
}

BSMorphism End0Algebra::morphism(const std::vector<Scalar>& coords, int rank) const {
  return linear_combination(basis, coords, rank, rank, 0);
}

std::vector<Scalar> lift_idempotent(const End0Algebra& a, std::vector<Scalar> x) {
  // (3e^2 - 2e^3)^2 - (3e^2 - 2e^3) = (e^2 - e)^2 (4e^2 - 4e - 3): the defect
  // lies in J^(2^i) after i steps, so ceil(log2 N) steps suffice.
  int steps = 0;
  while ((1 << steps) < a.nilpotency_index) ++steps;
  for (int i = 0; i <= steps; ++i) {
    std::vector<Scalar> x2 = a.multiply(x, x);
    if (x2 == x) return x;
    std::vector<Scalar> x3 = a.multiply(x2, x);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = Scalar(3L) * x2[k] - Scalar(2L) * x3[k];
  }
  if (a.multiply(x, x) != x) throw std::logic_error("idempotent lifting did not terminate within the certified bound");
  return x;
}

End0Algebra end0_algebra(const BSBimodule& m, const DegreeCaps& caps) {
  End0Algebra A;
  A.basis = hom_solve(m, m, 0, caps);
  const int r = A.dim();
  HomLayout layout(m, m, 0, caps);
  std::vector<SparseVector> vecs;
  for (const auto& b : A.basis) vecs.push_back(layout.to_vector(b));
  CoordinateSolver coords(vecs, layout.size());
  auto coords_of = [&](const BSMorphism& phi) {
    auto c = coords.coordinates(layout.to_vector(phi));
    if (!c) throw std::logic_error("composition left the degree zero endomorphisms");
    return *c;
  };
  A.structure.assign(r, std::vector<std::vector<Scalar>>(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) A.structure[a][b] = coords_of(compose(A.basis[a], A.basis[b]));
  A.unit = coords_of(identity_morphism(m));

  // Radical = kernel of the trace form Tr(L_{ab}) (characteristic zero).
  std::vector<Scalar> tr(r);
  for (int c = 0; c < r; ++c)
    for (int d = 0; d < r; ++d) tr[c] += A.structure[c][d][d];
  Matrix gram(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) gram(a, b) += A.structure[a][b][c] * tr[c];
  Matrix ker = kernel(gram);
  for (int c = 0; c < ker.cols(); ++c) A.radical.push_back(ker.column(c));

  // Nilpotency index of J.
  {
    std::vector<std::vector<Scalar>> power = A.radical;
    A.nilpotency_index = 1;
    while (!power.empty()) {
      ++A.nilpotency_index;
      RowEchelon ech(r);
      std::vector<std::vector<Scalar>> next;
      for (const auto& u : power)
        for (const auto& v : A.radical) {
          auto w = A.multiply(u, v);
          if (ech.insert(to_sparse(w))) next.push_back(std::move(w));
        }
      power = std::move(next);
      if (A.nilpotency_index > r + 1) throw std::logic_error("radical is not nilpotent");
    }
  }

  // Complement of J and coordinates modulo J.
  RowEchelon span(r);
  RowEchelon jspan(r);
  for (const auto& v : A.radical) {
    span.insert(to_sparse(v));
    jspan.insert(to_sparse(v));
  }
  std::vector<std::vector<Scalar>> comp;
  for (int i = 0; i < r; ++i) {
    std::vector<Scalar> e(r);
    e[i] = Scalar(1L);
    if (span.insert(to_sparse(e))) comp.push_back(std::move(e));
  }
  const int q = static_cast<int>(comp.size());
  std::vector<SparseVector> full;
  for (const auto& c : comp) full.push_back(to_sparse(c));
  for (const auto& v : A.radical) full.push_back(to_sparse(v));
  CoordinateSolver quotient(full, r);

  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      auto ab = A.multiply(comp[i], comp[j]);
      auto ba = A.multiply(comp[j], comp[i]);
      if (!jspan.in_span(axpy(to_sparse(ab), Scalar(-1L), to_sparse(ba))))
        throw NonSplitQuotient("non-split semisimple quotient: End_0 modulo its radical is not commutative");
    }

  if (q == 1) {
    A.idempotents = {A.unit};
    return A;
  }

  std::vector<std::vector<Scalar>> bars;
  for (int attempt = 0; attempt < 24 && bars.empty(); ++attempt) {
    std::vector<Scalar> a(r);
    for (int i = 0; i < q; ++i) {
      long w = 1 + (static_cast<long>(i + 1) * (2 * attempt + 3) + attempt * attempt) % 29;
      a = axpy_dense(std::move(a), Scalar(w), comp[i]);
    }
    Matrix la(q, q);
    for (int i = 0; i < q; ++i) {
      auto c = quotient.coordinates(to_sparse(A.multiply(a, comp[i])));
      for (int k = 0; k < q; ++k) la(k, i) = (*c)[k];
    }
    auto cp = faddeev_leverrier(la);
    upoly::Poly p;
    bool rational = true;
    for (const auto& c : cp) {
      if (!c.is_rational()) rational = false;
      p.push_back(c.rational_value());
    }
    if (!rational) continue;
    auto roots = upoly::rational_roots(p);
    if (static_cast<int>(roots.size()) != q) continue;
    for (int i = 0; i < q; ++i) {
      std::vector<Scalar> e = A.unit;
      for (int j = 0; j < q; ++j) {
        if (j == i) continue;
        auto shifted = axpy_dense(a, Scalar(-roots[j]), A.unit);
        Scalar inv = Scalar(1L) / Scalar(roots[i] - roots[j]);
        e = A.multiply(e, shifted);
        for (auto& x : e) x *= inv;
      }
      bars.push_back(std::move(e));
    }
  }
  if (bars.empty())
    throw NonSplitQuotient("non-split semisimple quotient: no element with rational, distinct eigenvalues found");

  std::vector<Scalar> used(r);
  for (int i = 0; i + 1 < q; ++i) {
    auto f = axpy_dense(A.unit, Scalar(-1L), used);
    auto x = A.multiply(A.multiply(f, bars[i]), f);
    auto e = lift_idempotent(A, std::move(x));
    used = axpy_dense(std::move(used), Scalar(1L), e);
    A.idempotents.push_back(std::move(e));
  }
  auto last = axpy_dense(A.unit, Scalar(-1L), used);
  if (A.multiply(last, last) != last) throw std::logic_error("complementary idempotent is not idempotent");
  A.idempotents.push_back(std::move(last));
  for (std::size_t i = 0; i < A.idempotents.size(); ++i)
    for (std::size_t j = 0; j < A.idempotents.size(); ++j)
      if (i != j) {
        auto p = A.multiply(A.idempotents[i], A.idempotents[j]);
        for (const auto& x : p)
          if (!x.is_zero()) throw std::logic_error("lifted idempotents are not orthogonal");
      }
  return A;
}

// --- decomposition ---------------------------------------------------------------------------

namespace {

Summand make_summand(const BSBimodule& m, BSMorphism e) {
  Summand s;
  const int n = m.rank();
  Matrix at0(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) at0(i, j) = e.m[i][j].constant_term();
  s.rank = rank(at0);
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < n; ++i) by_degree[m.basis_degree(i)].push_back(i);
  for (const auto& [deg, idx] : by_degree) {
    Matrix block(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) block(a, b) = at0(idx[a], idx[b]);
    int rk = rank(block);
    if (rk > 0) s.graded_rank[deg] = rk;
  }
  s.idempotent = std::move(e);
  return s;
}

}  // namespace

std::vector<std::map<int, int>> predicted_graded_ranks(const KLTable& kl, const Word& word, int shift) {
  const GroupTable& g = kl.algebra().group();
  const int k = static_cast<int>(word.size());
  KLExpansion ex = bs_in_kl_basis(kl, word);
  std::vector<std::map<int, int>> out;
  for (const auto& [x, c] : ex.coefficients) {
    std::map<int, long> gr;
    for (const auto& [y, p] : kl.element(x).terms()) {
      LaurentPoly h = p.shifted(-g.length(y));
      for (const auto& [e, cc] : h.terms()) gr[g.length(y) - e] += cc.get_si();
    }
    for (const auto& [j, cj] : c.terms()) {
      if (cj < 0) throw std::logic_error("negative multiplicity in the C' expansion");
      std::map<int, int> one;
      for (const auto& [deg, cnt] : gr)
        if (cnt != 0) one[deg + k - shift - j] = static_cast<int>(cnt);
      for (long copy = 0; copy < cj.get_si(); ++copy) out.push_back(one);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition decompose_bs(const BSBimodule& m, const KLTable* kl, const DegreeCaps& caps) {
  End0Algebra a = end0_algebra(m, caps);
  Decomposition d;
  d.end0_dim = a.dim();
  d.radical_dim = static_cast<int>(a.radical.size());
  for (const auto& e : a.idempotents) d.summands.push_back(make_summand(m, a.morphism(e, m.rank())));
  if (kl != nullptr) {
    d.kl_expansion = bs_in_kl_basis(*kl, m.word()).coefficients;
    d.predicted = predicted_graded_ranks(*kl, m.word(), m.shift());
    std::vector<std::map<int, int>> found;
    for (const auto& s : d.summands) found.push_back(s.graded_rank);
    std::sort(found.begin(), found.end());
    d.matches_prediction = found == d.predicted;
  }
  return d;
}

// --- base change --------------------------------------------------------------------------------

BaseChange::BaseChange(const SubRep& sub)
    : sub_(sub),
      r_(std::make_shared<const PolyRing>(sub.ambient())),
      rp_(std::make_shared<const PolyRing>(sub.restricted())) {
  const Matrix& b = sub.basis();
  for (int i = 0; i < b.rows(); ++i) {
    std::vector<Scalar> row(b.cols());
    for (int j = 0; j < b.cols(); ++j) row[j] = b(i, j);
    images_.push_back(Poly::linear(row));
  }
}

FreeElement BaseChange::apply(const FreeElement& x) const {
  FreeElement out;
  out.reserve(x.size());
  for (const auto& p : x) out.push_back(apply(p));
  return out;
}

BSMorphism BaseChange::apply(const BSMorphism& phi) const {
  BSMorphism r;
  r.degree = phi.degree;
  for (const auto& row : phi.m) r.m.push_back(apply(row));
  return r;
}

XFunctorResult x_functor(const BSBimodule& m, const BaseChange& q) {
  if (m.ring_ptr() != q.source()) throw std::invalid_argument("bimodule is not defined over the source ring of Q");
  XFunctorResult out{BSBimodule(q.target(), m.word(), m.shift()), true};
  for (int e = 0; e < m.rank(); ++e)
    for (int j = 0; j < m.ring().nvars(); ++j) {
      FreeElement lhs = q.apply(m.right_var(e, j));
      FreeElement rhs = out.image.right_mul(out.image.basis_element(e), q.apply(Poly::variable(j)));
      if (lhs != rhs) out.structure_matches = false;
    }
  return out;
}

Theorem1Report verify_theorem1(const BSBimodule& m, const BSBimodule& n, const BaseChange& q, int max_degree,
                               const DegreeCaps& caps) {
  Theorem1Report rep;
  BSBimodule mp = x_functor(m, q).image;
  BSBimodule np = x_functor(n, q).image;
  int lo = hom_min_degree(m, n);
  HomSeries hs = hom_series(m, n, lo, max_degree, caps);
  HomSeries hsp = hom_series(mp, np, lo, max_degree, caps);
  rep.lo = hs.lo;
  rep.hi = max_degree;
  rep.shifts = hs.shifts();
  rep.shifts_prime = hsp.shifts();
  rep.dims = hs.dims;
  rep.dims_prime = hsp.dims;
  rep.free = hs.free_consistent;
  rep.free_prime = hsp.free_consistent;
  rep.surjective = true;
  for (int d = hs.lo; d <= max_degree; ++d) {
    if (hsp.dim(d) == 0) continue;
    HomLayout layout(mp, np, d, caps);
    RowEchelon ech(layout.size());
    for (const auto& phi : hs.bases[d - hs.lo]) ech.insert(layout.to_vector(q.apply(phi)));
    if (ech.rank() != hsp.dim(d)) rep.surjective = false;
  }
  return rep;
}

LiftReport lift_idempotents(const BSBimodule& m, const End0Algebra& a, const BSBimodule& mprime,
                            const End0Algebra& aprime, const BaseChange& q) {
  LiftReport rep;
  rep.ok = true;
  HomLayout layout(mprime, mprime, 0);
  const int r = a.dim();
  std::vector<SparseVector> images;
  for (const auto& b : a.basis) images.push_back(layout.to_vector(q.apply(b)));
  Matrix qa(layout.size(), r);
  for (int c = 0; c < r; ++c)
    for (const auto& [i, x] : images[c]) qa(i, c) = x;
  for (const auto& ep : aprime.idempotents) {
    BSMorphism target = aprime.morphism(ep, mprime.rank());
    Matrix b(layout.size(), 1);
    for (const auto& [i, x] : layout.to_vector(target)) b(i, 0) = x;
    auto sol = solve(qa, b);
    if (!sol) {
      rep.ok = false;
      continue;
    }
    std::vector<Scalar> x = sol->column(0);
    try {
      x = lift_idempotent(a, std::move(x));
    } catch (const std::logic_error&) {
      rep.ok = false;
      continue;
    }
    BSMorphism lifted = a.morphism(x, m.rank());
    if (!(q.apply(lifted) == target)) rep.ok = false;
    rep.lifted.push_back(std::move(lifted));
  }
  return rep;
}

Theorem2Report verify_theorem2(const BSBimodule& m, const BaseChange& q, const DegreeCaps& caps) {
  Theorem2Report rep;
  BSBimodule mp = x_functor(m, q).image;
  End0Algebra a = end0_algebra(m, caps);
  End0Algebra ap = end0_algebra(mp, caps);
  rep.dim = a.dim();
  rep.dim_prime = ap.dim();
  rep.radical_dim = static_cast<int>(a.radical.size());
  rep.radical_dim_prime = static_cast<int>(ap.radical.size());
  rep.indecomposable = a.local();
  rep.indecomposable_prime = ap.local();
  for (const auto& e : a.idempotents) rep.ranks.push_back(make_summand(m, a.morphism(e, m.rank())).rank);
  for (const auto& e : ap.idempotents) rep.ranks_prime.push_back(make_summand(mp, ap.morphism(e, mp.rank())).rank);
  std::sort(rep.ranks.begin(), rep.ranks.end());
  std::sort(rep.ranks_prime.begin(), rep.ranks_prime.end());
  rep.lifted = lift_idempotents(m, a, mp, ap, q).ok;
  return rep;
}

}  // namespace soergel
