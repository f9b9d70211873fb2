#include "soergel/decat.hpp"

#include <algorithm>
#include <stdexcept>

namespace soergel {

GradedShiftVector make_shifts(std::vector<int> shifts) {
  std::sort(shifts.begin(), shifts.end());
  return GradedShiftVector{std::move(shifts)};
}

HeckeElement bs_character(const HeckeAlgebra& h, const Word& word) {
  HeckeElement r = h.one();
  for (int s : word) r = r + h.mul_generator(r, s);
  return r;
}

GradedShiftVector hom_rank_formula(const HeckeAlgebra& h, const Word& word) {
  LaurentPoly t = h.tau(bs_character(h, word));
  std::vector<int> shifts;
  for (const auto& [e, c] : t.terms()) {
    if (e > 0 || e % 2 != 0) throw std::logic_error("tau has a term that is not a power of q: " + t.to_string());
    if (c < 0) throw std::logic_error("tau has a negative coefficient: " + t.to_string());
    if (!c.fits_sint_p()) throw std::overflow_error("multiplicity too large");
    for (long i = 0; i < c.get_si(); ++i) shifts.push_back(-e);
  }
  return make_shifts(std::move(shifts));
}

CharacterTable standard_multiplicities(const HeckeAlgebra& h, const Word& word) {
  const GroupTable& g = h.group();
  // c_j(w) = c_{j-1}(w) + c_{j-1}(w s_j)
  std::vector<BigInt> c(g.size(), 0);
  c[g.identity().index] = 1;
  for (int s : word) {
    std::vector<BigInt> next = c;
    for (int i = 0; i < g.size(); ++i) {
      if (c[i] == 0) continue;
      // a subsequence with product x followed by s has product x s
      next[g.right(Element{i}, s).index] += c[i];
    }
    c = std::move(next);
  }
  CharacterTable ct;
  ct.word = word;
  ct.bs_char = bs_character(h, word);
  for (int i = 0; i < g.size(); ++i)
    if (c[i] != 0) ct.n.emplace(Element{i}, c[i]);
  return ct;
}

bool verify_n1_identity(const HeckeAlgebra& h, const Word& word) {
  CharacterTable ct = standard_multiplicities(h, word);
  auto it = ct.n.find(h.group().identity());
  BigInt ne = it == ct.n.end() ? BigInt(0) : it->second;
  BigInt total = static_cast<long>(hom_rank_formula(h, word).shifts.size());
  BigInt at1 = h.tau(ct.bs_char).eval_q1();
  return ne == total && total == at1;
}

std::map<Element, BigInt> specialize_q1(const HeckeAlgebra& h, const Word& word) {
  std::map<Element, BigInt> out;
  const HeckeElement b = bs_character(h, word);
  for (const auto& [x, c] : b.terms()) {
    BigInt v = c.eval_q1();
    if (v != 0) out.emplace(x, v);
  }
  return out;
}

KLExpansion bs_in_kl_basis(const KLTable& kl, const Word& word) {
  const HeckeAlgebra& h = kl.algebra();
  HeckeElement b = h.one();
  for (int s : word) b = h.mul(b, h.cprime_s(s));
  KLExpansion out;
  out.coefficients = in_kl_basis(b, kl);
  for (const auto& [x, c] : out.coefficients)
    if (!c.is_nonneg()) out.positive = false;
  return out;
}

CharacterTable x_functor_decat(const CharacterTable& ct) { return ct; }

}  // namespace soergel
