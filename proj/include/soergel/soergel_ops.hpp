#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soergel/bimodule.hpp"
#include "soergel/decat.hpp"

namespace soergel {

class NonGenericPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonSplitQuotient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- the sequence 0 -> R_s -> theta_s -> R -> 0 -------------------------------------

struct ExactSequenceReport {
  BSMorphism m_s;          // theta_s -> R, e0 -> 1, e1 -> x_s
  FreeElement mu_one;      // mu_s(1) = x_s e0 - e1
  bool composition_zero = false;
  bool m_surjective = false;
  bool mu_injective = false;
  bool exact_middle = false;
  bool m_bimodule = false;
  bool mu_twisted_linear = false;  // mu(1) f = s(f) mu(1)
  int max_degree = 0;
  bool ok() const {
    return composition_zero && m_surjective && mu_injective && exact_middle && m_bimodule && mu_twisted_linear;
  }
};

ExactSequenceReport theta_exact_sequence(const std::shared_ptr<const PolyRing>& ring, int s, int max_degree = 10);

// --- generic fibres -------------------------------------------------------------------

struct SplittingReport {
  Scalar xs_value;        // x_s(p)
  Matrix change_of_basis;  // rows (ab, a s(b)), columns e0, e1
  Scalar determinant;
  Scalar nu_e0, nu_e1;    // nu_s(e0) = 1/(2 x_s(p)), nu_s(e1) = -1/2
  Scalar nu_mu;           // nu_s(mu_s(1)) at p
  bool ok() const { return !determinant.is_zero() && nu_mu.is_one(); }
};

/// Throws NonGenericPoint when x_s(p) = 0.
SplittingReport generic_splitting(const PolyRing& ring, int s, const std::vector<Scalar>& point);

struct StandardMatrix {
  Matrix matrix;                // rows: subsequences, columns: basis tensors
  std::vector<Element> labels;  // product of each subsequence
  Scalar determinant;
};

/// Entry (eps, eps') = prod_{i : eps'_i = 1} (x_i . x_{s_i})(p) with
/// x_i = s_1^{eps_1} ... s_i^{eps_i} and (w.f)(p) = f(w^-1 p).
/// Throws NonGenericPoint when one of these factors vanishes.
StandardMatrix standard_matrix(const PolyRing& ring, const GroupTable& g, const Word& word,
                               const std::vector<Scalar>& point);

// --- adjunction ---------------------------------------------------------------------

/// theta_s applied on the left: the word s followed by m's word.
BSBimodule theta(int s, const BSBimodule& m);
/// f : theta_s src -> tgt gives src -> theta_s tgt (degree + 2).
BSMorphism adjunction_f(int s, const BSBimodule& src, const BSBimodule& tgt, const BSMorphism& f);
/// g : src -> theta_s tgt gives theta_s src -> tgt (degree - 2).
BSMorphism adjunction_g(int s, const BSBimodule& src, const BSBimodule& tgt, const BSMorphism& g);

struct AdjunctionReport {
  int degree = 0;
  int dim_left = 0;   // Hom(theta_s src, tgt)_d
  int dim_right = 0;  // Hom(src, theta_s tgt)_{d+2}
  bool images_are_maps = true;
  bool gf_identity = true;
  bool fg_identity = true;
  bool ok() const { return dim_left == dim_right && images_are_maps && gf_identity && fg_identity; }
};

AdjunctionReport check_adjunction(int s, const BSBimodule& src, const BSBimodule& tgt, int d,
                                  const DegreeCaps& caps = {});

// --- degree zero endomorphisms ----------------------------------------------------------

struct End0Algebra {
  std::vector<BSMorphism> basis;
  /// structure[a][b] = coordinates of basis[a] o basis[b].
  std::vector<std::vector<std::vector<Scalar>>> structure;
  std::vector<Scalar> unit;
  std::vector<std::vector<Scalar>> radical;  // coordinate vectors spanning the radical
  int nilpotency_index = 1;                  // smallest N with J^N = 0
  std::vector<std::vector<Scalar>> idempotents;  // primitive, orthogonal, summing to the unit
  int dim() const { return static_cast<int>(basis.size()); }
  bool local() const { return dim() - static_cast<int>(radical.size()) == 1; }

  std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
  BSMorphism morphism(const std::vector<Scalar>& coords, int rank) const;
};

/// Throws NonSplitQuotient if End_0 / J is not a product of copies of Q.
End0Algebra end0_algebra(const BSBimodule& m, const DegreeCaps& caps = {});

/// e <- 3e^2 - 2e^3 until exact; `x` must be idempotent modulo the radical.
std::vector<Scalar> lift_idempotent(const End0Algebra& a, std::vector<Scalar> x);

struct Summand {
  BSMorphism idempotent;
  int rank = 0;
  std::map<int, int> graded_rank;  // generator degree -> count
};

struct Decomposition {
  std::vector<Summand> summands;
  int end0_dim = 0;
  int radical_dim = 0;
  /// Graded ranks predicted by the C' expansion of the word (when requested).
  std::vector<std::map<int, int>> predicted;
  std::optional<bool> matches_prediction;
  std::map<Element, LaurentPoly> kl_expansion;
};

Decomposition decompose_bs(const BSBimodule& m, const KLTable* kl = nullptr, const DegreeCaps& caps = {});

/// Graded rank of the summands predicted by b_{s_1} ... b_{s_k} = sum c_x C'_x,
/// for the bimodule of the word with the given shift.
std::vector<std::map<int, int>> predicted_graded_ranks(const KLTable& kl, const Word& word, int shift);

// --- base change --------------------------------------------------------------------

/// The surjection Q : R -> R' of a subrepresentation.
class BaseChange {
 public:
  BaseChange(const SubRep& sub);

  const std::shared_ptr<const PolyRing>& source() const { return r_; }
  const std::shared_ptr<const PolyRing>& target() const { return rp_; }
  const SubRep& sub() const { return sub_; }

  Poly apply(const Poly& f) const { return f.substitute(images_); }
  BSMorphism apply(const BSMorphism& phi) const;
  FreeElement apply(const FreeElement& x) const;

 private:
  SubRep sub_;
  std::shared_ptr<const PolyRing> r_, rp_;
  std::vector<Poly> images_;
};

struct XFunctorResult {
  BSBimodule image;
  bool structure_matches = false;  // Q(e . x_j) = e' . Q(x_j) for all basis tensors
};

/// X(M) over R', with the structure constants compared after Q.
XFunctorResult x_functor(const BSBimodule& m, const BaseChange& q);

struct Theorem1Report {
  std::vector<int> shifts, shifts_prime;
  std::vector<int> dims, dims_prime;
  int lo = 0, hi = 0;
  bool free = false, free_prime = false;
  bool surjective = false;  // Q(Hom_d) spans Hom'_d for every d in the window
  bool ok() const { return shifts == shifts_prime && surjective; }
};

Theorem1Report verify_theorem1(const BSBimodule& m, const BSBimodule& n, const BaseChange& q, int max_degree = 8,
                               const DegreeCaps& caps = {});

struct Theorem2Report {
  int dim = 0, dim_prime = 0;
  int radical_dim = 0, radical_dim_prime = 0;
  bool indecomposable = false, indecomposable_prime = false;
  std::vector<int> ranks, ranks_prime;  // summand ranks, sorted
  bool lifted = false;                  // every idempotent over R' lifts through Q
  bool ok() const {
    return indecomposable == indecomposable_prime && ranks == ranks_prime && lifted;
  }
};

Theorem2Report verify_theorem2(const BSBimodule& m, const BaseChange& q, const DegreeCaps& caps = {});

struct LiftReport {
  std::vector<BSMorphism> lifted;
  bool ok = false;
};

/// Lifts each primitive idempotent of End_0(X M) to an idempotent E of End_0(M) with Q(E) = e'.
LiftReport lift_idempotents(const BSBimodule& m, const End0Algebra& a, const BSBimodule& mprime,
                            const End0Algebra& aprime, const BaseChange& q);

}  // namespace soergel
