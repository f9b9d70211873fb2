#include "soergel/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace soergel {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == ' '; }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("malformed rational: " + s);
    return Rational(BigInt(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("malformed rational: " + s);
  BigInt d(strip_plus(den));
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational r(BigInt(strip_plus(num)), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

namespace upoly {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Rational& c) {
  if (c == 0) return {};
  Poly r(a);
  for (auto& x : r) x *= c;
  return r;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  rem = a;
  trim(rem);
  quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!rem.empty() && rem.size() >= b.size()) {
    std::size_t shift = rem.size() - b.size();
    Rational f = rem.back() / lead;
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
    rem.pop_back();
    trim(rem);
  }
  trim(quot);
}

Poly rem(const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(a, b, q, r);
  return r;
}

Poly monic(const Poly& p) {
  if (p.empty()) return p;
  return scale(p, 1 / p.back());
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const Poly& p, const Rational& x) { return sgn(eval(p, x)); }

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  trim(chain.back());
  chain.push_back(derivative(chain.back()));
  while (!chain.back().empty()) {
    Poly r = rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

namespace {
int variations(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}
}  // namespace

int count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return variations(chain, a) - variations(chain, b);
}

Rational root_bound(const Poly& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational r = abs(p[i] / p.back());
    if (r > m) m = r;
  }
  return m + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p,
                                                              const Rational& max_width) {
  std::vector<std::pair<Rational, Rational>> out;
  if (degree(p) < 1) return out;
  auto chain = sturm_chain(p);
  Rational b = root_bound(p);
  std::vector<std::pair<Rational, Rational>> work{{-b, b}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int n = count_roots(chain, lo, hi);
    if (n == 0) continue;
    if (n == 1 && hi - lo <= max_width) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<BigInt> integer_primitive(const Poly& p) {
  BigInt den = 1;
  for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> z;
  z.reserve(p.size());
  BigInt g = 0;
  for (const auto& c : p) {
    BigInt v = c.get_num() * (den / c.get_den());
    z.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 0)
    for (auto& v : z) v /= g;
  return z;
}

BigInt eval_int(const std::vector<BigInt>& p, long x) {
  BigInt acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

bool is_irreducible(const Poly& p_in, int degree_cap) {
  Poly p = p_in;
  trim(p);
  int n = degree(p);
  if (n < 0) throw std::invalid_argument("zero polynomial has no irreducibility");
  if (n > degree_cap) throw std::invalid_argument("polynomial degree exceeds cap");
  if (n == 0) return false;
  if (n == 1) return true;
  auto ip = integer_primitive(p);
  Poly P;
  for (const auto& z : ip) P.push_back(Rational(z));

  // Candidate evaluation points, preferring values with few divisors.
  struct Point {
    long x;
    BigInt value;
    std::size_t ndiv;
  };
  std::vector<Point> pts;
  for (long r = 0; r <= 40; ++r) {
    for (long x : {r, -r}) {
      if (r == 0 && x == 0 && !pts.empty()) continue;
      BigInt v = eval_int(ip, x);
      if (v == 0) return false;  // rational root, n >= 2
      pts.push_back({x, v, 0});
    }
  }
  for (auto& pt : pts) {
    // Skip expensive factorizations of huge values; small ones are plentiful.
    pt.ndiv = abs(pt.value) < BigInt("100000000") ? positive_divisors(pt.value).size()
                                                       : std::size_t(1) << 30;
  }
  std::stable_sort(pts.begin(), pts.end(),
                   [](const Point& a, const Point& b) { return a.ndiv < b.ndiv; });

  for (int d = 1; d <= n / 2; ++d) {
    std::vector<Point> use(pts.begin(), pts.begin() + d + 1);
    std::vector<std::vector<BigInt>> divs;
    for (const auto& pt : use) divs.push_back(positive_divisors(pt.value));
    // Lagrange basis polynomials.
    std::vector<Poly> basis;
    for (int i = 0; i <= d; ++i) {
      Poly l{Rational(1)};
      for (int j = 0; j <= d; ++j) {
        if (j == i) continue;
        Rational denom = Rational(use[i].x - use[j].x);
        l = mul(l, Poly{Rational(-use[j].x) / denom, Rational(1) / denom});
      }
      basis.push_back(l);
    }
    // Odometer over divisor choices with signs; first value fixed positive.
    std::vector<std::size_t> idx(d + 1, 0);
    std::vector<int> sgn_choice(d + 1, 1);
    while (true) {
      Poly g;
      for (int i = 0; i <= d; ++i)
        g = add(g, scale(basis[i], Rational(divs[i][idx[i]] * sgn_choice[i])));
      bool integral = degree(g) >= 1;
      for (const auto& c : g)
        if (c.get_den() != 1) integral = false;
      if (integral && rem(P, g).empty()) return false;
      int pos = d;
      while (pos >= 0) {
        if (pos > 0 && sgn_choice[pos] == 1) {
          sgn_choice[pos] = -1;
          break;
        }
        sgn_choice[pos] = 1;
        if (++idx[pos] < divs[pos].size()) break;
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return true;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

std::vector<Rational> rational_roots(const Poly& p_in) {
  Poly p = p_in;
  trim(p);
  std::vector<Rational> roots;
  if (degree(p) < 1) return roots;
  Poly sq = p;
  Poly g = gcd(p, derivative(p));
  if (degree(g) > 0) {
    Poly q, r;
    divmod(p, g, q, r);
    sq = q;
  }
  auto ip = integer_primitive(sq);
  BigInt lead = abs(ip.back());
  Rational width = Rational(1, 2) / Rational(lead * lead);
  for (const auto& [lo, hi] : isolate_real_roots(sq, width)) {
    Rational cand = simplest_between(lo, hi);
    if (cand > lo && eval(sq, cand) == 0) roots.push_back(cand);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace upoly
}  // namespace soergel
