#pragma once

#include <map>
#include <string>

#include "soergel/rational.hpp"

namespace soergel {

/// Element of Z[v, v^-1]: sparse exponent -> nonzero coefficient map.
///
/// The Hecke parameter is q = v^-2. Exponents are machine integers; products
/// that would overflow `int` throw std::overflow_error.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const BigInt& c, int exponent);
  static LaurentPoly v() { return monomial(1, 1); }
  static LaurentPoly v_inv() { return monomial(1, -1); }
  static LaurentPoly q() { return monomial(1, -2); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  BigInt coefficient(int exponent) const;
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;

  /// v -> v^-1.
  LaurentPoly bar() const;
  /// Every coefficient >= 0.
  bool is_nonneg() const;
  /// Value at v = 1.
  BigInt eval_q1() const;
  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }

  /// Human-readable form such as "v^-2 + 1" (decreasing exponents from v^max).
  std::string to_string() const;

 private:
  Terms t_;
  void add_term(int e, const BigInt& c);
};

/// Checked exponent addition.
int add_exponents(int a, int b);

}  // namespace soergel
