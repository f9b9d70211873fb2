#include "soergel/poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace soergel {

namespace mono {

int degree(Monomial m) {
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) d += exponent(m, i);
  return d;
}

Monomial mul(Monomial a, Monomial b) {
  Monomial r = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = exponent(a, i) + exponent(b, i);
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    r |= static_cast<Monomial>(e) << (8 * i);
  }
  return r;
}

std::vector<Monomial> of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0 || nvars < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.push_back(0);
    return out;
  }
  if (d > kMaxExponent) throw std::overflow_error("degree exceeds the monomial exponent range");
  std::function<void(int, int, Monomial)> rec = [&](int i, int left, Monomial acc) {
    if (i == nvars - 1) {
      out.push_back(acc | (static_cast<Monomial>(left) << (8 * i)));
      return;
    }
    for (int e = 0; e <= left; ++e) rec(i + 1, left - e, acc | (static_cast<Monomial>(e) << (8 * i)));
  };
  rec(0, d, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count(int nvars, int d) {
  if (d < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  // binomial(d + nvars - 1, nvars - 1)
  std::size_t r = 1;
  for (int i = 1; i < nvars; ++i) r = r * static_cast<std::size_t>(d + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace mono

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) t_.emplace(0, c);
}

Poly Poly::variable(int i) {
  if (i < 0 || i >= mono::kMaxVars) throw std::out_of_range("variable index");
  return term(mono::var(i), Scalar(1L));
}

Poly Poly::term(Monomial m, const Scalar& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Poly Poly::linear(const std::vector<Scalar>& coeffs) {
  if (coeffs.size() > static_cast<std::size_t>(mono::kMaxVars)) throw std::out_of_range("too many variables");
  Poly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(mono::var(static_cast<int>(i)), coeffs[i]);
  return p;
}

Scalar Poly::coefficient(Monomial m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Scalar() : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, mono::degree(m));
  return d;
}

bool Poly::is_homogeneous(int d) const {
  for (const auto& [m, c] : t_)
    if (mono::degree(m) != d) return false;
  return true;
}

void Poly::add_term(Monomial m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add_term(mono::mul(ma, mb), ca * cb);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return {};
  Poly r(*this);
  for (auto& [m, v] : r.t_) v *= c;
  return r;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  Scalar total;
  for (const auto& [m, c] : t_) {
    Scalar v = c;
    for (int i = 0; i < mono::kMaxVars; ++i)
      for (int e = mono::exponent(m, i); e > 0; --e) {
        if (i >= static_cast<int>(point.size())) throw std::out_of_range("point has too few coordinates");
        v *= point[i];
      }
    total += v;
  }
  return total;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](int i, int e) -> const Poly& {
    if (i >= static_cast<int>(images.size())) throw std::out_of_range("substitution has too few images");
    auto& p = powers[i];
    if (p.empty()) p.push_back(Poly(Scalar(1L)));
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[i]);
    return p[e];
  };
  Poly r;
  for (const auto& [m, c] : t_) {
    Poly t(c);
    for (int i = 0; i < mono::kMaxVars; ++i) {
      int e = mono::exponent(m, i);
      if (e > 0) t = t * power(i, e);
    }
    r += t;
  }
  return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mon;
    for (int i = 0; i < mono::kMaxVars; ++i) {
      int e = mono::exponent(m, i);
      if (e == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
      if (e > 1) mon += "^" + std::to_string(e);
    }
    std::string coef = c.to_string();
    if (!s.empty()) s += " + ";
    if (mon.empty())
      s += coef;
    else if (c.is_one())
      s += mon;
    else
      s += "(" + coef + ")*" + mon;
  }
  return s;
}

Poly divide_linear(const Poly& f, const std::vector<Scalar>& l) {
  int j = -1;
  for (int i = static_cast<int>(l.size()) - 1; i >= 0; --i)
    if (!l[i].is_zero()) {
      j = i;
      break;
    }
  if (j < 0) throw std::domain_error("division by the zero linear form");
  Poly lin = Poly::linear(l);
  Scalar inv = l[j].inverse();
  Poly q, r = f;
  while (!r.is_zero()) {
    // a term of maximal x_j-degree
    auto best = r.terms().begin();
    for (auto it = r.terms().begin(); it != r.terms().end(); ++it)
      if (mono::exponent(it->first, j) > mono::exponent(best->first, j)) best = it;
    if (mono::exponent(best->first, j) == 0) throw std::domain_error("polynomial is not divisible by the linear form");
    Poly t = Poly::term(best->first - mono::var(j), best->second * inv);
    q += t;
    r -= t * lin;
  }
  return q;
}

// --- ring -------------------------------------------------------------------

PolyRing::PolyRing(Representation rep) : rep_(std::move(rep)) {
  if (rep_.dim() > mono::kMaxVars)
    throw std::invalid_argument("polynomial rings support at most " + std::to_string(mono::kMaxVars) + " variables");
  auto rr = check_reflections(rep_);
  if (!rr.ok) {
    std::string bad;
    for (int s : rr.offending) bad += (bad.empty() ? "" : ",") + rep_.coxeter().labels()[s];
    throw std::invalid_argument("simple reflections do not act as reflections: " + bad);
  }
  refl_ = std::move(*rr.data);
  for (int s = 0; s < rank(); ++s) {
    x_.push_back(Poly::linear(refl_.x[s]));
    std::vector<Poly> img;
    const Matrix& m = rep_.matrix(s);
    for (int i = 0; i < nvars(); ++i) {
      std::vector<Scalar> row(nvars());
      for (int c = 0; c < nvars(); ++c) row[c] = m(i, c);
      img.push_back(Poly::linear(row));
    }
    images_.push_back(std::move(img));
  }
}

Poly PolyRing::act(int s, const Poly& f) const { return f.substitute(images_.at(s)); }

Poly PolyRing::demazure(int s, const Poly& f) const { return divide_linear(f - act(s, f), refl_.x.at(s)); }

std::pair<Poly, Poly> PolyRing::split(int s, const Poly& g) const {
  const Scalar half = Scalar(Rational(1, 2));
  Poly a = (g + act(s, g)).scaled(half);
  Poly b = demazure(s, g).scaled(half);
  return {std::move(a), std::move(b)};
}

}  // namespace soergel
