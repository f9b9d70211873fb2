#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "soergel/poly.hpp"

namespace soergel {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DegreeCaps {
  int poly_degree = 10;  // polynomial degree of any unknown coefficient
  int hom_max = 8;       // largest Hom degree solved
};

/// Element of a free left R-module with a fixed basis: one coefficient per basis vector.
using FreeElement = std::vector<Poly>;

/// Bott-Samelson bimodule theta_{s_1} ... theta_{s_k}(shift) as a free left
/// R-module with basis e_eps = 1 (x) x_{s_1}^{eps_1} (x) ... (x) x_{s_k}^{eps_k}.
///
/// Basis indices are bitmasks: bit i holds eps_{i+1}. e_eps has grading
/// degree 2|eps| - shift, following M(n)_i = M_{i+n}. The empty word is R.
class BSBimodule {
 public:
  BSBimodule(std::shared_ptr<const PolyRing> ring, Word word, int shift = 0);

  const PolyRing& ring() const { return *ring_; }
  const std::shared_ptr<const PolyRing>& ring_ptr() const { return ring_; }
  const Word& word() const { return word_; }
  int shift() const { return shift_; }
  int length() const { return static_cast<int>(word_.size()); }
  int rank() const { return 1 << length(); }
  int basis_degree(int eps) const;

  FreeElement zero() const { return FreeElement(rank()); }
  FreeElement basis_element(int eps) const;
  /// e_eps * x_j.
  const FreeElement& right_var(int eps, int j) const { return table_[eps][j]; }
  FreeElement right_var(const FreeElement& m, int j) const;
  FreeElement right_mul(const FreeElement& m, const Poly& f) const;
  FreeElement left_mul(const Poly& f, const FreeElement& m) const;

 private:
  std::shared_ptr<const PolyRing> ring_;
  Word word_;
  int shift_;
  std::vector<std::vector<FreeElement>> table_;  // table_[eps][j]
};

/// A left R-linear map between free modules given on basis vectors:
/// m[eps][delta] is the coefficient of target basis delta in phi(e_eps).
struct BSMorphism {
  int degree = 0;
  std::vector<std::vector<Poly>> m;
  friend bool operator==(const BSMorphism&, const BSMorphism&) = default;
};

FreeElement apply(const BSMorphism& phi, const FreeElement& x);
/// psi o phi.
BSMorphism compose(const BSMorphism& psi, const BSMorphism& phi);
BSMorphism identity_morphism(const BSBimodule& m);
/// (phi . x_j)(m) = phi(m) x_j.
BSMorphism right_act(const BSMorphism& phi, const BSBimodule& tgt, int j);
BSMorphism linear_combination(const std::vector<BSMorphism>& basis, const std::vector<Scalar>& coeffs,
                              int rows, int cols, int degree);
/// Right R-linearity on all basis vectors and ring variables.
bool is_bimodule_map(const BSMorphism& phi, const BSBimodule& src, const BSBimodule& tgt);
/// Degree check: every entry homogeneous of the forced degree.
bool has_degree(const BSMorphism& phi, const BSBimodule& src, const BSBimodule& tgt, int d);

/// Coordinates of degree-d maps src -> tgt: one unknown per (eps, delta, monomial).
class HomLayout {
 public:
  HomLayout(const BSBimodule& src, const BSBimodule& tgt, int d, const DegreeCaps& caps = {});

  int degree() const { return d_; }
  int size() const { return size_; }
  /// Polynomial degree of entry (eps, delta), or -1 when it is forced to vanish.
  int entry_degree(int eps, int delta) const { return deg_[eps][delta]; }
  int offset(int eps, int delta) const { return off_[eps][delta]; }
  const std::vector<Monomial>& monomials(int eps, int delta) const;

  SparseVector to_vector(const BSMorphism& phi) const;
  BSMorphism from_vector(const SparseVector& v) const;

 private:
  int rows_, cols_, nvars_, d_, size_ = 0;
  std::vector<std::vector<int>> deg_, off_;
  std::vector<std::vector<Monomial>> mono_by_degree_;
};

/// Basis of the degree-d bimodule maps src -> tgt.
std::vector<BSMorphism> hom_solve(const BSBimodule& src, const BSBimodule& tgt, int d,
                                  const DegreeCaps& caps = {});

/// Lowest degree in which a map src -> tgt can be nonzero.
int hom_min_degree(const BSBimodule& src, const BSBimodule& tgt);

/// Graded Hom over a degree window, with free generators of the right
/// R-module structure detected degreewise.
struct HomSeries {
  int lo = 0, hi = 0;
  std::vector<int> dims;                       // dims[d - lo]
  std::vector<int> generators;                 // generator degrees, sorted
  std::vector<std::vector<BSMorphism>> bases;  // bases[d - lo]
  /// dims agree with those of the free module on `generators` throughout the window.
  bool free_consistent = true;
  int dim(int d) const { return d < lo || d > hi ? 0 : dims[d - lo]; }
  /// Generator multiset as shifts: a generator in degree g is a copy of R(-g).
  std::vector<int> shifts() const;
};

HomSeries hom_series(const BSBimodule& src, const BSBimodule& tgt, int lo, int hi, const DegreeCaps& caps = {});

/// Dimension of the degree-d part of R (zero for odd or negative d).
std::size_t ring_dimension(int nvars, int d);

}  // namespace soergel
