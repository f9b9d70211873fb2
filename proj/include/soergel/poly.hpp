#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "soergel/linalg.hpp"
#include "soergel/reps.hpp"

namespace soergel {

/// Exponent vector packed 8 bits per variable; at most 8 variables.
using Monomial = std::uint64_t;

namespace mono {
inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExponent = 255;
inline int exponent(Monomial m, int i) { return static_cast<int>((m >> (8 * i)) & 0xff); }
inline Monomial var(int i) { return Monomial{1} << (8 * i); }
int degree(Monomial m);
/// Throws std::overflow_error if an exponent would exceed kMaxExponent.
Monomial mul(Monomial a, Monomial b);
/// All monomials of total degree `d` in `nvars` variables, in increasing packed order.
std::vector<Monomial> of_degree(int nvars, int d);
std::size_t count(int nvars, int d);
}  // namespace mono

/// Sparse polynomial in variables x_0, x_1, ... over a tower field.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Poly() = default;
  Poly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  static Poly variable(int i);
  static Poly term(Monomial m, const Scalar& c);
  /// sum_i coeffs[i] x_i.
  static Poly linear(const std::vector<Scalar>& coeffs);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Scalar coefficient(Monomial m) const;
  Scalar constant_term() const { return coefficient(0); }
  /// Largest total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous(int d) const;
  void add_term(Monomial m, const Scalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Scalar& c) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Ring morphism x_i -> images[i].
  Poly substitute(const std::vector<Poly>& images) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Terms t_;
};

/// f / l for a linear form l dividing f; throws std::domain_error otherwise.
Poly divide_linear(const Poly& f, const std::vector<Scalar>& l);

/// The polynomial ring R = S(V*) of a representation. Variables are the
/// coordinate functions of V (degree 2 in the grading); s acts on linear forms
/// through l -> l M_s.
class PolyRing {
 public:
  /// Requires every simple reflection to act as a reflection.
  explicit PolyRing(Representation rep);

  const Representation& rep() const { return rep_; }
  int nvars() const { return rep_.dim(); }
  int rank() const { return rep_.coxeter().rank(); }
  const ReflectionData& reflections() const { return refl_; }
  /// Equation of the reflecting hyperplane of s, with x_s(alpha_s) = 2.
  const Poly& x(int s) const { return x_.at(s); }
  const std::vector<Scalar>& x_form(int s) const { return refl_.x.at(s); }

  Poly act(int s, const Poly& f) const;
  /// (f - s(f)) / x_s.
  Poly demazure(int s, const Poly& f) const;
  /// g = a + b x_s with a, b s-invariant.
  std::pair<Poly, Poly> split(int s, const Poly& g) const;

 private:
  Representation rep_;
  ReflectionData refl_;
  std::vector<Poly> x_;
  std::vector<std::vector<Poly>> images_;  // images_[s][i] = s(x_i)
};

}  // namespace soergel
