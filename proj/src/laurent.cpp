#include "soergel/laurent.hpp"

#include <limits>
#include <stdexcept>

namespace soergel {

int add_exponents(int a, int b) {
  long long s = static_cast<long long>(a) + b;
  if (s > std::numeric_limits<int>::max() || s < std::numeric_limits<int>::min())
    throw std::overflow_error("Laurent exponent overflow");
  return static_cast<int>(s);
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) t_.emplace(0, BigInt(c));
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.t_.emplace(exponent, c);
  return p;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = t_.find(exponent);
  return it == t_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (t_.empty()) throw std::domain_error("min_exponent of zero");
  return t_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (t_.empty()) throw std::domain_error("max_exponent of zero");
  return t_.rbegin()->first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) {
    if (e == std::numeric_limits<int>::min()) throw std::overflow_error("Laurent exponent overflow");
    r.t_.emplace(-e, c);
  }
  return r;
}

bool LaurentPoly::is_nonneg() const {
  for (const auto& [e, c] : t_)
    if (c < 0) return false;
  return true;
}

BigInt LaurentPoly::eval_q1() const {
  BigInt s = 0;
  for (const auto& [e, c] : t_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), add_exponents(e, k), c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) r.add_term(add_exponents(ea, eb), ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += (e == 1 ? "v" : "v^" + std::to_string(e));
  }
  return s;
}

}  // namespace soergel
