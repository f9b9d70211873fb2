#pragma once

#include <map>
#include <vector>

#include "soergel/hecke.hpp"

namespace soergel {

/// Multiset of shifts d representing the direct sum of R(d).
/// Kept sorted; a generator of R(d) sits in degree -d.
struct GradedShiftVector {
  std::vector<int> shifts;
  friend bool operator==(const GradedShiftVector&, const GradedShiftVector&) = default;
};

GradedShiftVector make_shifts(std::vector<int> shifts);

/// (1 + T_{s_1}) ... (1 + T_{s_k}).
HeckeElement bs_character(const HeckeAlgebra& h, const Word& word);

/// tau(bs_character) = sum_i n_i q^i gives n_i copies of the shift 2i.
/// Throws std::logic_error on a negative or non-q-power coefficient.
GradedShiftVector hom_rank_formula(const HeckeAlgebra& h, const Word& word);

struct CharacterTable {
  Word word;
  HeckeElement bs_char;
  std::map<Element, BigInt> n;  // n_w, zero entries omitted
  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

/// n_w = number of subsequences of the word with product w, by the
/// left-to-right recursion over the group.
CharacterTable standard_multiplicities(const HeckeAlgebra& h, const Word& word);

/// n_e == sum_i n_i == tau(bs_character) at q = 1.
bool verify_n1_identity(const HeckeAlgebra& h, const Word& word);

/// bs_character with every coefficient evaluated at v = 1.
std::map<Element, BigInt> specialize_q1(const HeckeAlgebra& h, const Word& word);

struct KLExpansion {
  std::map<Element, LaurentPoly> coefficients;
  bool positive = true;
};

/// b_{s_1} ... b_{s_k} with b_s = v(1 + T_s), expanded in the C' basis.
KLExpansion bs_in_kl_basis(const KLTable& kl, const Word& word);

/// Decategorified image of the base change functor: the identity on characters.
CharacterTable x_functor_decat(const CharacterTable& ct);

}  // namespace soergel
