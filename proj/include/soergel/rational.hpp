#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace soergel {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed input
/// or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Dense univariate polynomials over Q, coefficient i is the coefficient of x^i.
/// The zero polynomial is the empty vector. Everything here keeps results trimmed.
namespace upoly {

using Poly = std::vector<Rational>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
Poly derivative(const Poly& p);
/// Quotient and remainder; b must be nonzero.
void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly rem(const Poly& a, const Poly& b);
Poly monic(const Poly& p);
Poly gcd(const Poly& a, const Poly& b);
Rational eval(const Poly& p, const Rational& x);
int sign_at(const Poly& p, const Rational& x);

/// Sturm chain of a squarefree polynomial.
std::vector<Poly> sturm_chain(const Poly& p);
/// Number of distinct real roots in the half-open interval (a, b].
int count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b);
/// Cauchy bound: every real root has absolute value < the result.
Rational root_bound(const Poly& p);

/// Disjoint isolating intervals (lo, hi] for all real roots of a squarefree p,
/// sorted increasingly, each of width at most max_width.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p,
                                                              const Rational& max_width);

/// Irreducibility over Q by Kronecker's method (trial factors up to half degree).
/// Throws std::invalid_argument for degree above `degree_cap`.
bool is_irreducible(const Poly& p, int degree_cap = 8);

/// All rational roots of p (distinct, increasing).
std::vector<Rational> rational_roots(const Poly& p);

/// Simplest fraction (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace upoly
}  // namespace soergel
