#pragma once

#include <map>
#include <string>
#include <vector>

#include "soergel/coxeter.hpp"
#include "soergel/laurent.hpp"

namespace soergel {

/// Finite Z[v, v^-1]-combination of standard basis elements T_x.
class HeckeElement {
 public:
  using Terms = std::map<Element, LaurentPoly>;

  HeckeElement() = default;
  static HeckeElement basis(Element x, const LaurentPoly& c = LaurentPoly(1));

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  LaurentPoly coefficient(Element x) const;
  void add_term(Element x, const LaurentPoly& c);

  HeckeElement operator-() const;
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& a);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.t_ == b.t_; }

 private:
  Terms t_;
};

/// The Hecke algebra of an enumerated Coxeter group, with q = v^-2 and
/// T_s^2 = q + (q - 1) T_s.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const GroupTable& g);

  const GroupTable& group() const { return *g_; }

  HeckeElement T(Element x) const { return HeckeElement::basis(x); }
  HeckeElement T(int s) const { return HeckeElement::basis(g_->right(g_->identity(), s)); }
  HeckeElement one() const { return HeckeElement::basis(g_->identity()); }
  /// C'_s = v (1 + T_s).
  HeckeElement cprime_s(int s) const;

  /// a * T_s. Throws OutOfRange past a truncation.
  HeckeElement mul_generator(const HeckeElement& a, int s) const;
  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
  /// Coefficient of T_e.
  LaurentPoly tau(const HeckeElement& a) const;
  /// Bar involution: v -> v^-1 on scalars, T_x -> (T_{x^-1})^-1.
  HeckeElement bar(const HeckeElement& a) const;

  /// Human-readable form, terms in element order.
  std::string to_string(const HeckeElement& a) const;

 private:
  const GroupTable* g_;
  std::vector<HeckeElement> bar_t_;  // bar(T_x) for every enumerated x
};

/// Kazhdan-Lusztig basis: C'_w = sum_x v^{l(w)} P_{x,w}(v^-2) T_x,
/// bar-invariant with C'_s = v (1 + T_s).
class KLTable {
 public:
  explicit KLTable(const HeckeAlgebra& h);

  const HeckeAlgebra& algebra() const { return *h_; }
  const HeckeElement& element(Element w) const { return c_.at(w.index); }
  /// Coefficients of P_{x,w} as a polynomial in q, lowest degree first.
  std::vector<BigInt> kl_polynomial(Element x, Element w) const;

 private:
  const HeckeAlgebra* h_;
  std::vector<HeckeElement> c_;
};

/// Coefficients of `a` in the C' basis; `a` must be supported on the table.
std::map<Element, LaurentPoly> in_kl_basis(const HeckeElement& a, const KLTable& kl);

}  // namespace soergel
