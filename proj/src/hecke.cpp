#include "soergel/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace soergel {

HeckeElement HeckeElement::basis(Element x, const LaurentPoly& c) {
  HeckeElement h;
  h.add_term(x, c);
  return h;
}

LaurentPoly HeckeElement::coefficient(Element x) const {
  auto it = t_.find(x);
  return it == t_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add_term(Element x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement r(*this);
  for (auto& [x, c] : r.t_) c = -c;
  return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [x, c] : o.t_) add_term(x, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [x, c] : o.t_) add_term(x, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& a) {
  HeckeElement r;
  if (c.is_zero()) return r;
  for (const auto& [x, p] : a.t_) r.add_term(x, c * p);
  return r;
}

// --- algebra -------------------------------------------------------------------

HeckeAlgebra::HeckeAlgebra(const GroupTable& g) : g_(&g) {
  const LaurentPoly qinv = LaurentPoly::monomial(1, 2);
  bar_t_.resize(g.size());
  bar_t_[0] = one();
  // Elements are stored in nondecreasing length, so prefixes come first.
  for (int i = 1; i < g.size(); ++i) {
    Element x{i};
    Word w = g.word(x);
    int s = w.back();
    w.pop_back();
    const HeckeElement& prefix = bar_t_.at(g.find(w)->index);
    bar_t_[i] = qinv * mul_generator(prefix, s) + (qinv - LaurentPoly(1)) * prefix;
  }
}

HeckeElement HeckeAlgebra::cprime_s(int s) const {
  return LaurentPoly::v() * (one() + T(s));
}

HeckeElement HeckeAlgebra::mul_generator(const HeckeElement& a, int s) const {
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly qm1 = q - LaurentPoly(1);
  HeckeElement r;
  for (const auto& [x, c] : a.terms()) {
    if (g_->right_descent(x, s)) {
      r.add_term(g_->right(x, s), q * c);
      r.add_term(x, qm1 * c);
    } else {
      r.add_term(g_->right(x, s), c);
    }
  }
  return r;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement r;
  for (const auto& [y, c] : b.terms()) {
    HeckeElement part = a;
    for (int s : g_->word(y)) part = mul_generator(part, s);
    r += c * part;
  }
  return r;
}

LaurentPoly HeckeAlgebra::tau(const HeckeElement& a) const { return a.coefficient(g_->identity()); }

HeckeElement HeckeAlgebra::bar(const HeckeElement& a) const {
  HeckeElement r;
  for (const auto& [x, c] : a.terms()) r += c.bar() * bar_t_.at(x.index);
  return r;
}

std::string HeckeAlgebra::to_string(const HeckeElement& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [x, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*T_" + g_->word_string(x);
  }
  return s;
}

// --- Kazhdan-Lusztig basis -----------------------------------------------------

namespace {

/// Bar-invariant a whose nonpositive part agrees with that of h.
LaurentPoly bar_invariant_correction(const LaurentPoly& h) {
  LaurentPoly a;
  for (const auto& [e, c] : h.terms()) {
    if (e > 0) continue;
    a += LaurentPoly::monomial(c, e);
    if (e < 0) a += LaurentPoly::monomial(c, -e);
  }
  return a;
}

}  // namespace

KLTable::KLTable(const HeckeAlgebra& h) : h_(&h) {
  const GroupTable& g = h.group();
  c_.resize(g.size());
  c_[0] = h.one();
  for (int i = 1; i < g.size(); ++i) {
    Element w{i};
    Word word = g.word(w);
    int s = word.back();
    word.pop_back();
    HeckeElement c = h.mul(c_.at(g.find(word)->index), h.cprime_s(s));
    std::vector<Element> lower;
    for (const auto& [x, p] : c.terms())
      if (x != w) lower.push_back(x);
    std::sort(lower.begin(), lower.end(),
              [&](Element a, Element b) { return g.length(a) > g.length(b) || (g.length(a) == g.length(b) && a < b); });
    for (Element x : lower) {
      LaurentPoly hx = c.coefficient(x).shifted(-g.length(x));
      if (hx.is_zero() || hx.min_exponent() > 0) continue;
      c -= bar_invariant_correction(hx) * c_.at(x.index);
    }
    c_[i] = std::move(c);
  }
}

std::vector<BigInt> KLTable::kl_polynomial(Element x, Element w) const {
  const GroupTable& g = h_->group();
  LaurentPoly p = element(w).coefficient(x).shifted(-g.length(w));
  std::vector<BigInt> out;
  for (const auto& [e, c] : p.terms()) {
    if (e > 0 || e % 2 != 0) throw std::logic_error("KL coefficient is not a polynomial in q");
    std::size_t d = static_cast<std::size_t>(-e / 2);
    if (out.size() <= d) out.resize(d + 1);
    out[d] = c;
  }
  return out;
}

std::map<Element, LaurentPoly> in_kl_basis(const HeckeElement& a, const KLTable& kl) {
  const GroupTable& g = kl.algebra().group();
  std::map<Element, LaurentPoly> out;
  HeckeElement rest = a;
  while (!rest.is_zero()) {
    Element top = rest.terms().begin()->first;
    for (const auto& [x, c] : rest.terms())
      if (g.length(x) > g.length(top)) top = x;
    LaurentPoly c = rest.coefficient(top).shifted(-g.length(top));
    out[top] += c;
    rest -= c * kl.element(top);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace soergel
