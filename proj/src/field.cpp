#include "soergel/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace soergel {

namespace {

constexpr int kMaxFieldDegree = 8;

struct Registry {
  std::mutex mu;
  std::map<std::string, std::unique_ptr<TowerField>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::string poly_key(const upoly::Poly& p) {
  std::string key;
  for (const auto& c : p) key += c.get_str() + ",";
  return key;
}

struct Interval {
  Rational lo, hi;
};

Interval mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Interval r{p[0], p[0]};
  for (const auto& x : p) {
    if (x < r.lo) r.lo = x;
    if (x > r.hi) r.hi = x;
  }
  return r;
}

Interval horner(const std::vector<Rational>& c, const Interval& x) {
  Interval acc{0, 0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

// Halves (lo, hi] keeping the root of p.
void bisect(const upoly::Poly& p, Rational& lo, Rational& hi) {
  Rational mid = (lo + hi) / 2;
  int sm = upoly::sign_at(p, mid);
  if (sm == 0) {
    lo = hi = mid;
    return;
  }
  if (sm == upoly::sign_at(p, hi))
    hi = mid;
  else
    lo = mid;
}

}  // namespace

TowerField::TowerField(upoly::Poly p, Rational lo, Rational hi)
    : poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
  fine_lo_ = lo_;
  fine_hi_ = hi_;
  if (degree() > 1) {
    Rational w(1, 1ul << 31);
    while (fine_hi_ - fine_lo_ > w) bisect(poly_, fine_lo_, fine_hi_);
  }
}

const TowerField& TowerField::rationals() {
  static const TowerField& q = make({Rational(0), Rational(1)}, Rational(-1), Rational(1));
  return q;
}

const TowerField& TowerField::make(const upoly::Poly& minimal_poly, const Rational& lo,
                                   const Rational& hi) {
  upoly::Poly p = minimal_poly;
  upoly::trim(p);
  if (upoly::degree(p) < 1) throw std::invalid_argument("minimal polynomial must have degree >= 1");
  if (p.back() != 1) throw std::invalid_argument("minimal polynomial must be monic");
  if (upoly::degree(p) > kMaxFieldDegree)
    throw std::invalid_argument("field degree exceeds cap of 8");
  if (!(lo < hi)) throw std::invalid_argument("isolating interval must satisfy lo < hi");
  if (!upoly::is_irreducible(p, kMaxFieldDegree))
    throw std::invalid_argument("minimal polynomial is reducible over Q");
  if (upoly::sign_at(p, lo) * upoly::sign_at(p, hi) >= 0)
    throw std::invalid_argument("isolating interval has no sign change");
  auto chain = upoly::sturm_chain(p);
  if (upoly::count_roots(chain, lo, hi) != 1)
    throw std::invalid_argument("isolating interval does not contain exactly one root");

  // Identify the root by its rank among the real roots so equal fields intern together.
  Rational bound = upoly::root_bound(p);
  int rank = upoly::count_roots(chain, -bound, lo);
  std::string key = poly_key(p) + "#" + std::to_string(rank);

  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return *it->second;
  auto* f = new TowerField(p, lo, hi);
  reg.fields.emplace(key, std::unique_ptr<TowerField>(f));
  return *f;
}

std::pair<Rational, Rational> TowerField::refined(const Rational& width) const {
  Rational lo = fine_lo_, hi = fine_hi_;
  while (hi - lo > width) bisect(poly_, lo, hi);
  return {lo, hi};
}

std::string TowerField::describe() const {
  if (is_rational()) return "Q";
  std::string s = "Q[c]/(";
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = poly_[i];
    if (a == 0) continue;
    std::string coef = a.get_str();
    if (!first) s += (a > 0 ? "+" : "");
    first = false;
    if (i == 0) {
      s += coef;
    } else {
      if (a == -1)
        s += "-";
      else if (a != 1)
        s += coef + "*";
      s += (i == 1 ? "c" : "c^" + std::to_string(i));
    }
  }
  return s + ")";
}

// --- cos fields ------------------------------------------------------------

namespace {

upoly::Poly cyclotomic(int n) {
  upoly::Poly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    upoly::Poly q, r;
    upoly::divmod(num, cyclotomic(d), q, r);
    num = q;
  }
  return num;
}

// Rewrites a palindromic polynomial of degree 2d in x as a polynomial of degree d
// in c = x + 1/x.
upoly::Poly palindromic_to_trace(const upoly::Poly& phi) {
  int d = upoly::degree(phi) / 2;
  std::vector<upoly::Poly> cheb;  // cheb[k] = x^k + x^-k in terms of c
  cheb.push_back({Rational(2)});
  cheb.push_back({Rational(0), Rational(1)});
  for (int k = 1; k < d; ++k)
    cheb.push_back(upoly::sub(upoly::mul({Rational(0), Rational(1)}, cheb[k]), cheb[k - 1]));
  upoly::Poly out{phi[d]};
  for (int k = 1; k <= d; ++k) out = upoly::add(out, upoly::scale(cheb[k], phi[d + k]));
  return out;
}

}  // namespace

const TowerField& field_for_cos(int m) {
  if (m < 2) throw std::invalid_argument("field_for_cos needs m >= 2");
  if (m == 2 || m == 3 || m == kInfinity) return TowerField::rationals();
  upoly::Poly p = palindromic_to_trace(cyclotomic(2 * m));
  if (upoly::degree(p) > kMaxFieldDegree)
    throw std::invalid_argument("2cos(pi/" + std::to_string(m) + ") needs a field of degree > 8");
  // 2cos(pi/m) is the largest root; all roots lie in (-2, 2).
  auto roots = upoly::isolate_real_roots(p, Rational(1, 8));
  auto [lo, hi] = roots.back();
  if (upoly::sign_at(p, hi) == 0) hi += Rational(1, 64);
  return TowerField::make(p, lo, hi);
}

FieldElement two_cos_pi_over(int m) {
  if (m == 2) return FieldElement(0L);
  if (m == 3) return FieldElement(1L);
  if (m == kInfinity) return FieldElement(2L);
  return FieldElement::generator(field_for_cos(m));
}

// --- FieldElement ----------------------------------------------------------

FieldElement::FieldElement(long v) : field_(&TowerField::rationals()) {
  if (v != 0) c_.emplace_back(v);
}

FieldElement::FieldElement(const Rational& v) : field_(&TowerField::rationals()) {
  if (v != 0) c_.push_back(v);
}

FieldElement::FieldElement(const TowerField& field, std::vector<Rational> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  reduce();
}

FieldElement FieldElement::generator(const TowerField& field) {
  if (field.is_rational()) return FieldElement(-field.minimal_poly()[0]);
  return FieldElement(field, {Rational(0), Rational(1)});
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("field element is not rational: " + to_string());
  return c_.empty() ? Rational(0) : c_[0];
}

void FieldElement::reduce() {
  upoly::trim(c_);
  if (static_cast<int>(c_.size()) > field_->degree()) c_ = upoly::rem(c_, field_->minimal_poly());
}

void FieldElement::adopt_field(const FieldElement& o) {
  if (field_ == o.field_ || o.field_->is_rational()) return;
  if (field_->is_rational()) {
    field_ = o.field_;
    return;
  }
  if (c_.size() <= 1 || o.c_.size() <= 1) {
    if (c_.size() <= 1) field_ = o.field_;
    return;
  }
  throw std::domain_error("arithmetic between incompatible fields " + field_->describe() +
                          " and " + o.field_->describe());
}

int FieldElement::sign() const {
  if (c_.empty()) return 0;
  if (c_.size() == 1) return sgn(c_[0]);
  Rational w(1, 1ul << 31);
  auto [lo, hi] = field_->refined(w);
  const auto& p = field_->minimal_poly();
  // x(root) != 0, so refinement eventually separates the image interval from 0.
  for (int iter = 0; iter < 4096; ++iter) {
    if (lo == hi) return sgn(upoly::eval(c_, lo));
    Interval v = horner(c_, Interval{lo, hi});
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    bisect(p, lo, hi);
  }
  throw std::logic_error("sign refinement did not terminate");
}

FieldElement FieldElement::inverse() const {
  if (c_.empty()) throw std::domain_error("division by zero in field");
  if (c_.size() == 1) return FieldElement(1 / c_[0]);
  // Extended Euclid: find u with u*x = 1 mod p.
  upoly::Poly r0 = field_->minimal_poly(), r1 = c_;
  upoly::Poly s0, s1{Rational(1)};
  while (upoly::degree(r1) > 0) {
    upoly::Poly q, r;
    upoly::divmod(r0, r1, q, r);
    upoly::Poly s = upoly::sub(s0, upoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw std::logic_error("minimal polynomial is not irreducible");
  return FieldElement(*field_, upoly::scale(s1, 1 / r1[0]));
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  adopt_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  upoly::trim(c_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  adopt_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  upoly::trim(c_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  adopt_field(o);
  if (c_.empty()) return *this;
  if (o.c_.empty()) {
    c_.clear();
    return *this;
  }
  if (o.c_.size() == 1) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (c_.size() == 1) {
    Rational a = c_[0];
    c_ = o.c_;
    for (auto& x : c_) x *= a;
    return *this;
  }
  c_ = upoly::mul(c_, o.c_);
  reduce();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
  if (c_.empty()) return "0";
  if (c_.size() == 1) return c_[0].get_str();
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string coef = c_[i].get_str();
    if (!s.empty() && c_[i] > 0) s += "+";
    if (i == 0) {
      s += coef;
      continue;
    }
    if (c_[i] == -1)
      s += "-";
    else if (c_[i] != 1)
      s += coef + "*";
    s += (i == 1 ? "c" : "c^" + std::to_string(i));
  }
  return s;
}

FieldElement parse_field_element(const TowerField& field, const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& t : coeffs) c.push_back(parse_rational(t));
  return FieldElement(field, std::move(c));
}

}  // namespace soergel
