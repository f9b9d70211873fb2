#pragma once

#include <climits>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "soergel/rational.hpp"

namespace soergel {

/// Marker for an infinite Coxeter matrix entry.
inline constexpr int kInfinity = INT_MAX;

/// A real number field Q[c]/(p(c)) together with a designated real root of p.
///
/// Fields are interned: `make` returns the same object for the same minimal
/// polynomial and the same real root, so fields compare by address. Interned
/// fields live for the whole process and are immutable.
class TowerField {
 public:
  static const TowerField& rationals();

  /// Validates (monic, irreducible, degree <= 8, the interval brackets exactly
  /// one real root with a sign change) and interns the field.
  /// `minimal_poly` lists coefficients from c^0 upwards.
  static const TowerField& make(const upoly::Poly& minimal_poly, const Rational& lo,
                                const Rational& hi);

  int degree() const { return static_cast<int>(poly_.size()) - 1; }
  bool is_rational() const { return degree() == 1; }
  const upoly::Poly& minimal_poly() const { return poly_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }

  /// An interval of width <= `width` containing the designated root.
  std::pair<Rational, Rational> refined(const Rational& width) const;

  std::string describe() const;

 private:
  TowerField(upoly::Poly p, Rational lo, Rational hi);

  upoly::Poly poly_;
  Rational lo_, hi_;
  Rational fine_lo_, fine_hi_;
};

/// Q(2cos(pi/m)); the rational field for m in {2, 3, kInfinity}.
/// The designated root is the largest real root of the minimal polynomial.
const TowerField& field_for_cos(int m);

/// An element of a TowerField, stored as its reduced coefficient vector in c.
///
/// Trailing zero coefficients are trimmed, so zero is the empty vector and a
/// rational value has at most one coefficient; rationals combine freely with
/// elements of any field.
class FieldElement {
 public:
  FieldElement() : field_(&TowerField::rationals()) {}
  FieldElement(long v);  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& v);  // NOLINT(google-explicit-constructor)
  FieldElement(const TowerField& field, std::vector<Rational> coeffs);

  static FieldElement generator(const TowerField& field);

  const TowerField& field() const { return *field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;

  /// Exact sign under the designated real embedding.
  int sign() const;

  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }
  /// Structural order (coefficient vectors), for use as container keys only.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  const TowerField* field_;
  std::vector<Rational> c_;

  void adopt_field(const FieldElement& o);
  void reduce();
};

/// 2cos(pi/m) as an element of field_for_cos(m).
FieldElement two_cos_pi_over(int m);

/// Parses a field element: a rational literal, or a list of coefficient literals.
FieldElement parse_field_element(const TowerField& field, const std::vector<std::string>& coeffs);

}  // namespace soergel
