#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "soergel/field.hpp"

namespace soergel {

class OutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Words are sequences of generator indices into CoxeterMatrix::labels().
using Word = std::vector<int>;

class CoxeterMatrix {
 public:
  /// Validates symmetry, unit diagonal and off-diagonal entries >= 2
  /// (kInfinity for infinite order).
  CoxeterMatrix(std::vector<std::string> labels, std::vector<std::vector<int>> m);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  int m(int s, int r) const { return m_[s][r]; }
  const std::vector<std::vector<int>>& entries() const { return m_; }
  bool has_infinite_entry() const;

  int generator(std::string_view label) const;
  /// Accepts "s,t,s", or "sts" when every label is one character; "" and "e"
  /// (when not a label) denote the empty word.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> m_;
};

/// Built-in types: A1, A2, A3, B2, H2, I2(m) for 2 <= m <= 8, I2(inf).
CoxeterMatrix builtin_coxeter(std::string_view name);

/// Entries 2cos(pi/m(s,r)) off the diagonal, in a single common field.
/// Throws std::invalid_argument when the system needs two different
/// irrational fields.
std::vector<std::vector<FieldElement>> two_cos_table(const CoxeterMatrix& cm);

struct Element {
  int index = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

/// Enumerated Coxeter group: canonical (ShortLex-least) reduced words,
/// multiplication tables and Bruhat order.
///
/// Finite groups are enumerated completely through the permutation action on
/// the root system of the geometric representation. The infinite dihedral
/// group is enumerated up to `max_length` through its alternating normal
/// forms; products leaving that ball throw OutOfRange.
class GroupTable {
 public:
  static constexpr int kDefaultElementCap = 50000;

  explicit GroupTable(CoxeterMatrix cm, int max_length = 12,
                      int element_cap = kDefaultElementCap);

  const CoxeterMatrix& matrix() const { return cm_; }
  int rank() const { return cm_.rank(); }
  bool is_finite() const { return finite_; }
  /// Truncation radius for infinite groups, length of the longest element otherwise.
  int max_length() const { return max_length_; }
  int size() const { return static_cast<int>(words_.size()); }

  Element identity() const { return Element{0}; }
  int length(Element x) const { return static_cast<int>(words_[x.index].size()); }
  const Word& word(Element x) const { return words_[x.index]; }
  std::string word_string(Element x) const { return cm_.format_word(words_[x.index]); }
  std::vector<Element> elements() const;

  /// x*s and s*x; throw OutOfRange beyond the truncation.
  Element right(Element x, int s) const;
  Element left(int s, Element x) const;
  std::optional<Element> try_right(Element x, int s) const;
  Element inverse(Element x) const;
  Element multiply(Element x, Element y) const;
  /// Product of the letters of an arbitrary (not necessarily reduced) word.
  Element evaluate(const Word& w) const;
  /// The element whose canonical word is `w`, if enumerated.
  std::optional<Element> find(const Word& w) const;

  bool right_descent(Element x, int s) const;
  bool left_descent(int s, Element x) const;

  /// Bruhat order by the descent recursion, memoized (thread-safe).
  bool bruhat_leq(Element x, Element w) const;

  /// Conjugates w s w^-1 of simple reflections that lie in the enumerated range.
  std::vector<Element> reflections() const;

 private:
  CoxeterMatrix cm_;
  bool finite_ = true;
  int max_length_ = 0;
  std::vector<Word> words_;
  std::vector<std::vector<int>> right_, left_;
  std::vector<int> inverse_;
  std::unordered_map<std::string, int> by_word_;

  mutable std::mutex bruhat_mu_;
  mutable std::unordered_map<std::uint64_t, bool> bruhat_memo_;

  void build_finite(int element_cap);
  void build_dihedral(int max_length);
  void index_words();
  Word reduce_dihedral(const Word& w) const;
  bool bruhat_rec(int x, int w) const;
};

}  // namespace soergel
