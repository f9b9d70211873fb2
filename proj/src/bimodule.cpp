#include "soergel/bimodule.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace soergel {

namespace {

using Table = std::vector<std::vector<FreeElement>>;

FreeElement right_var_with(const Table& table, const FreeElement& m, int j) {
  FreeElement out(m.size());
  for (std::size_t d = 0; d < m.size(); ++d) {
    if (m[d].is_zero()) continue;
    const FreeElement& img = table[d][j];
    for (std::size_t g = 0; g < img.size(); ++g)
      if (!img[g].is_zero()) out[g] += m[d] * img[g];
  }
  return out;
}

FreeElement right_mul_with(const Table& table, const FreeElement& m, const Poly& f) {
  FreeElement out(m.size());
  for (const auto& [mon, c] : f.terms()) {
    FreeElement cur = m;
    for (int i = 0; i < mono::kMaxVars; ++i)
      for (int e = mono::exponent(mon, i); e > 0; --e) cur = right_var_with(table, cur, i);
    for (std::size_t g = 0; g < out.size(); ++g)
      if (!cur[g].is_zero()) out[g] += cur[g].scaled(c);
  }
  return out;
}

}  // namespace

std::size_t ring_dimension(int nvars, int d) {
  if (d < 0 || d % 2 != 0) return 0;
  return mono::count(nvars, d / 2);
}

// --- Bott-Samelson bimodules -------------------------------------------------

BSBimodule::BSBimodule(std::shared_ptr<const PolyRing> ring, Word word, int shift)
    : ring_(std::move(ring)), word_(std::move(word)), shift_(shift) {
  if (!ring_) throw std::invalid_argument("missing polynomial ring");
  for (int s : word_)
    if (s < 0 || s >= ring_->rank()) throw std::invalid_argument("word letter out of range");
  if (word_.size() > 16) throw CapExceeded("Bott-Samelson words are limited to 16 letters");
  const int n = ring_->nvars();
  Table t(1, std::vector<FreeElement>(n));
  for (int j = 0; j < n; ++j) t[0][j] = {Poly::variable(j)};
  for (std::size_t p = 0; p < word_.size(); ++p) {
    const int s = word_[p];
    const int old_rank = 1 << p;
    Table next(2 * old_rank, std::vector<FreeElement>(n));
    for (int eps = 0; eps < 2 * old_rank; ++eps) {
      const int head = eps & (old_rank - 1);
      const bool tail = (eps >> p) & 1;
      FreeElement base(old_rank);
      base[head] = Poly(Scalar(1L));
      for (int j = 0; j < n; ++j) {
        // e_head (x) x_s^tail x_j with x_s^tail x_j = a + b x_s, a and b s-invariant
        Poly g = tail ? ring_->x(s) * Poly::variable(j) : Poly::variable(j);
        auto [a, b] = ring_->split(s, g);
        FreeElement m1 = right_mul_with(t, base, a);
        FreeElement m2 = right_mul_with(t, base, b);
        FreeElement out(2 * old_rank);
        for (int d = 0; d < old_rank; ++d) {
          out[d] = std::move(m1[d]);
          out[d | old_rank] = std::move(m2[d]);
        }
        next[eps][j] = std::move(out);
      }
    }
    t = std::move(next);
  }
  table_ = std::move(t);
}

int BSBimodule::basis_degree(int eps) const { return 2 * std::popcount(static_cast<unsigned>(eps)) - shift_; }

FreeElement BSBimodule::basis_element(int eps) const {
  FreeElement e = zero();
  e.at(eps) = Poly(Scalar(1L));
  return e;
}

FreeElement BSBimodule::right_var(const FreeElement& m, int j) const { return right_var_with(table_, m, j); }

FreeElement BSBimodule::right_mul(const FreeElement& m, const Poly& f) const { return right_mul_with(table_, m, f); }

FreeElement BSBimodule::left_mul(const Poly& f, const FreeElement& m) const {
  FreeElement out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!m[i].is_zero()) out[i] = f * m[i];
  return out;
}

// --- morphisms -----------------------------------------------------------------

FreeElement apply(const BSMorphism& phi, const FreeElement& x) {
  if (x.size() != phi.m.size()) throw std::invalid_argument("morphism applied to an element of the wrong module");
  std::size_t cols = phi.m.empty() ? 0 : phi.m[0].size();
  FreeElement out(cols);
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e].is_zero()) continue;
    for (std::size_t d = 0; d < cols; ++d)
      if (!phi.m[e][d].is_zero()) out[d] += x[e] * phi.m[e][d];
  }
  return out;
}

BSMorphism compose(const BSMorphism& psi, const BSMorphism& phi) {
  BSMorphism r;
  r.degree = phi.degree + psi.degree;
  r.m.reserve(phi.m.size());
  for (const auto& row : phi.m) r.m.push_back(apply(psi, row));
  return r;
}

BSMorphism identity_morphism(const BSBimodule& m) {
  BSMorphism r;
  r.degree = 0;
  for (int e = 0; e < m.rank(); ++e) r.m.push_back(m.basis_element(e));
  return r;
}

BSMorphism right_act(const BSMorphism& phi, const BSBimodule& tgt, int j) {
  BSMorphism r;
  r.degree = phi.degree + 2;
  for (const auto& row : phi.m) r.m.push_back(tgt.right_var(row, j));
  return r;
}

BSMorphism linear_combination(const std::vector<BSMorphism>& basis, const std::vector<Scalar>& coeffs,
                              int rows, int cols, int degree) {
  BSMorphism r;
  r.degree = degree;
  r.m.assign(rows, std::vector<Poly>(cols));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (int e = 0; e < rows; ++e)
      for (int d = 0; d < cols; ++d)
        if (!basis[i].m[e][d].is_zero()) r.m[e][d] += basis[i].m[e][d].scaled(coeffs[i]);
  }
  return r;
}

bool is_bimodule_map(const BSMorphism& phi, const BSBimodule& src, const BSBimodule& tgt) {
  if (static_cast<int>(phi.m.size()) != src.rank()) return false;
  for (const auto& row : phi.m)
    if (static_cast<int>(row.size()) != tgt.rank()) return false;
  for (int e = 0; e < src.rank(); ++e)
    for (int j = 0; j < src.ring().nvars(); ++j)
      if (apply(phi, src.right_var(e, j)) != tgt.right_var(phi.m[e], j)) return false;
  return true;
}

bool has_degree(const BSMorphism& phi, const BSBimodule& src, const BSBimodule& tgt, int d) {
  for (int e = 0; e < src.rank(); ++e)
    for (int t = 0; t < tgt.rank(); ++t) {
      const Poly& p = phi.m[e][t];
      if (p.is_zero()) continue;
      int g = src.basis_degree(e) + d - tgt.basis_degree(t);
      if (g < 0 || g % 2 != 0 || !p.is_homogeneous(g / 2)) return false;
    }
  return true;
}

// --- Hom layout and solver -------------------------------------------------------

HomLayout::HomLayout(const BSBimodule& src, const BSBimodule& tgt, int d, const DegreeCaps& caps)
    : rows_(src.rank()), cols_(tgt.rank()), nvars_(src.ring().nvars()), d_(d) {
  if (src.ring_ptr() != tgt.ring_ptr()) throw std::invalid_argument("bimodules over different rings");
  if (d > caps.hom_max) throw CapExceeded("Hom degree " + std::to_string(d) + " exceeds the cap " +
                                          std::to_string(caps.hom_max));
  deg_.assign(rows_, std::vector<int>(cols_, -1));
  off_.assign(rows_, std::vector<int>(cols_, 0));
  for (int e = 0; e < rows_; ++e)
    for (int t = 0; t < cols_; ++t) {
      int g = src.basis_degree(e) + d - tgt.basis_degree(t);
      off_[e][t] = size_;
      if (g < 0 || g % 2 != 0) continue;
      int pd = g / 2;
      if (pd > caps.poly_degree)
        throw CapExceeded("polynomial degree " + std::to_string(pd) + " exceeds the cap " +
                          std::to_string(caps.poly_degree));
      deg_[e][t] = pd;
      if (static_cast<int>(mono_by_degree_.size()) <= pd) mono_by_degree_.resize(pd + 1);
      if (mono_by_degree_[pd].empty()) mono_by_degree_[pd] = mono::of_degree(nvars_, pd);
      size_ += static_cast<int>(mono_by_degree_[pd].size());
    }
}

const std::vector<Monomial>& HomLayout::monomials(int eps, int delta) const {
  static const std::vector<Monomial> kEmpty;
  int pd = deg_[eps][delta];
  return pd < 0 ? kEmpty : mono_by_degree_[pd];
}

SparseVector HomLayout::to_vector(const BSMorphism& phi) const {
  SparseVector v;
  for (int e = 0; e < rows_; ++e)
    for (int t = 0; t < cols_; ++t) {
      const Poly& p = phi.m.at(e).at(t);
      if (p.is_zero()) continue;
      const auto& mons = monomials(e, t);
      for (const auto& [mon, c] : p.terms()) {
        auto it = std::lower_bound(mons.begin(), mons.end(), mon);
        if (it == mons.end() || *it != mon) throw std::invalid_argument("morphism entry has the wrong degree");
        v.emplace_back(off_[e][t] + static_cast<int>(it - mons.begin()), c);
      }
    }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

BSMorphism HomLayout::from_vector(const SparseVector& v) const {
  BSMorphism phi;
  phi.degree = d_;
  phi.m.assign(rows_, std::vector<Poly>(cols_));
  std::size_t k = 0;
  for (int e = 0; e < rows_; ++e)
    for (int t = 0; t < cols_; ++t) {
      const auto& mons = monomials(e, t);
      int end = off_[e][t] + static_cast<int>(mons.size());
      while (k < v.size() && v[k].first < end) {
        phi.m[e][t].add_term(mons[v[k].first - off_[e][t]], v[k].second);
        ++k;
      }
    }
  return phi;
}

int hom_min_degree(const BSBimodule& src, const BSBimodule& tgt) {
  return -tgt.shift() - (2 * src.length() - src.shift());
}

std::vector<BSMorphism> hom_solve(const BSBimodule& src, const BSBimodule& tgt, int d, const DegreeCaps& caps) {
  if (d < hom_min_degree(src, tgt)) return {};
  HomLayout layout(src, tgt, d, caps);
  if (layout.size() == 0) return {};
  const int n = src.ring().nvars();
  RowEchelon ech(layout.size());
  // phi(e_eps . x_j) = phi(e_eps) . x_j, coefficient of f_delta' monomial by monomial.
  for (int e = 0; e < src.rank(); ++e)
    for (int j = 0; j < n; ++j) {
      std::vector<std::map<Monomial, std::map<int, Scalar>>> eqs(tgt.rank());
      const FreeElement& lhs = src.right_var(e, j);
      for (int e2 = 0; e2 < src.rank(); ++e2) {
        if (lhs[e2].is_zero()) continue;
        for (int t = 0; t < tgt.rank(); ++t) {
          const auto& mons = layout.monomials(e2, t);
          for (std::size_t u = 0; u < mons.size(); ++u)
            for (const auto& [cm, cc] : lhs[e2].terms())
              eqs[t][mono::mul(cm, mons[u])][layout.offset(e2, t) + static_cast<int>(u)] += cc;
        }
      }
      for (int t = 0; t < tgt.rank(); ++t) {
        const auto& mons = layout.monomials(e, t);
        if (mons.empty()) continue;
        for (int t2 = 0; t2 < tgt.rank(); ++t2) {
          const Poly& c = tgt.right_var(t, j)[t2];
          if (c.is_zero()) continue;
          for (std::size_t u = 0; u < mons.size(); ++u)
            for (const auto& [cm, cc] : c.terms())
              eqs[t2][mono::mul(cm, mons[u])][layout.offset(e, t) + static_cast<int>(u)] -= cc;
        }
      }
      for (const auto& per_target : eqs)
        for (const auto& [mon, row] : per_target) {
          SparseVector sv;
          for (const auto& [idx, val] : row)
            if (!val.is_zero()) sv.emplace_back(idx, val);
          if (!sv.empty()) ech.insert(std::move(sv));
        }
    }
  std::vector<BSMorphism> basis;
  for (const auto& v : ech.kernel()) basis.push_back(layout.from_vector(v));
  return basis;
}

std::vector<int> HomSeries::shifts() const {
  std::vector<int> s;
  for (int g : generators) s.push_back(-g);
  std::sort(s.begin(), s.end());
  return s;
}

HomSeries hom_series(const BSBimodule& src, const BSBimodule& tgt, int lo, int hi, const DegreeCaps& caps) {
  HomSeries hs;
  hs.lo = std::min(lo, hom_min_degree(src, tgt));
  hs.hi = hi;
  const int n = src.ring().nvars();
  for (int d = hs.lo; d <= hi; ++d) {
    auto basis = hom_solve(src, tgt, d, caps);
    int dim = static_cast<int>(basis.size());
    int decomposable = 0;
    if (d - 2 >= hs.lo && dim > 0) {
      HomLayout layout(src, tgt, d, caps);
      RowEchelon ech(layout.size());
      for (const auto& phi : hs.bases[d - 2 - hs.lo])
        for (int j = 0; j < n; ++j) ech.insert(layout.to_vector(right_act(phi, tgt, j)));
      decomposable = ech.rank();
    }
    for (int i = decomposable; i < dim; ++i) hs.generators.push_back(d);
    hs.dims.push_back(dim);
    hs.bases.push_back(std::move(basis));
  }
  for (int d = hs.lo; d <= hi; ++d) {
    std::size_t predicted = 0;
    for (int g : hs.generators) predicted += ring_dimension(n, d - g);
    if (predicted != static_cast<std::size_t>(hs.dims[d - hs.lo])) hs.free_consistent = false;
  }
  return hs;
}

}  // namespace soergel
