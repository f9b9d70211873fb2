#include "soergel/coxeter.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace soergel {

namespace {

std::string key_of(const std::vector<int>& v) {
  std::string k;
  k.reserve(v.size() * 2);
  for (int x : v) {
    k.push_back(static_cast<char>(x & 0xff));
    k.push_back(static_cast<char>((x >> 8) & 0xff));
  }
  return k;
}

std::string trim_copy(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return std::string(s.substr(a, b - a + 1));
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> labels, std::vector<std::vector<int>> m)
    : labels_(std::move(labels)), m_(std::move(m)) {
  int n = rank();
  if (n == 0) throw std::invalid_argument("Coxeter matrix needs at least one generator");
  if (n > 255) throw std::invalid_argument("too many generators");
  if (static_cast<int>(m_.size()) != n)
    throw std::invalid_argument("Coxeter matrix size does not match the label count");
  for (int i = 0; i < n; ++i) {
    if (labels_[i].empty() || labels_[i].find(',') != std::string::npos)
      throw std::invalid_argument("generator labels must be nonempty and contain no comma");
    for (int j = 0; j < i; ++j)
      if (labels_[i] == labels_[j]) throw std::invalid_argument("duplicate label " + labels_[i]);
    if (static_cast<int>(m_[i].size()) != n) throw std::invalid_argument("Coxeter matrix is not square");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m_[i][j] != m_[j][i]) throw std::invalid_argument("Coxeter matrix is not symmetric");
      if (i == j && m_[i][j] != 1) throw std::invalid_argument("Coxeter matrix diagonal must be 1");
      if (i != j && m_[i][j] < 2) throw std::invalid_argument("off-diagonal Coxeter entries must be >= 2");
    }
}

bool CoxeterMatrix::has_infinite_entry() const {
  for (const auto& row : m_)
    for (int x : row)
      if (x == kInfinity) return true;
  return false;
}

int CoxeterMatrix::generator(std::string_view label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown generator '" + std::string(label) + "'");
}

Word CoxeterMatrix::parse_word(std::string_view text) const {
  std::string t = trim_copy(text);
  Word w;
  if (t.empty()) return w;
  bool is_label = std::find(labels_.begin(), labels_.end(), t) != labels_.end();
  if (t == "e" && !is_label) return w;
  if (t.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = t.find(',', start);
      std::string part = trim_copy(std::string_view(t).substr(start, comma - start));
      w.push_back(generator(part));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return w;
  }
  if (is_label) return {generator(t)};
  bool single = std::all_of(labels_.begin(), labels_.end(),
                            [](const std::string& l) { return l.size() == 1; });
  if (!single)
    throw std::invalid_argument("word '" + t + "' is ambiguous: separate multi-character labels by commas");
  for (char ch : t) w.push_back(generator(std::string_view(&ch, 1)));
  return w;
}

std::string CoxeterMatrix::format_word(const Word& w) const {
  if (w.empty()) return "e";
  bool single = std::all_of(labels_.begin(), labels_.end(),
                            [](const std::string& l) { return l.size() == 1; });
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) s += ",";
    s += labels_.at(w[i]);
  }
  return s;
}

CoxeterMatrix builtin_coxeter(std::string_view name) {
  auto dihedral = [](int m) { return CoxeterMatrix({"s", "t"}, {{1, m}, {m, 1}}); };
  if (name == "A1") return CoxeterMatrix({"s"}, {{1}});
  if (name == "A2") return dihedral(3);
  if (name == "B2") return dihedral(4);
  if (name == "H2") return dihedral(5);
  if (name == "A3") return CoxeterMatrix({"s", "t", "u"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  if (name.substr(0, 3) == "I2(" && name.size() > 4 && name.back() == ')') {
    std::string arg(name.substr(3, name.size() - 4));
    if (arg == "inf") return dihedral(kInfinity);
    if (!arg.empty() && arg.size() <= 2 && std::all_of(arg.begin(), arg.end(), ::isdigit)) {
      int m = std::stoi(arg);
      if (m >= 2 && m <= 8) return dihedral(m);
    }
  }
  throw std::invalid_argument("unknown built-in Coxeter type '" + std::string(name) +
                              "' (A1, A2, A3, B2, H2, I2(m) with 2<=m<=8, I2(inf))");
}

std::vector<std::vector<FieldElement>> two_cos_table(const CoxeterMatrix& cm) {
  int n = cm.rank();
  const TowerField* common = nullptr;
  int common_m = 0;
  std::vector<std::vector<FieldElement>> t(n, std::vector<FieldElement>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int m = cm.m(i, j);
      const TowerField& f = field_for_cos(m);
      if (!f.is_rational()) {
        if (common != nullptr && common != &f)
          throw std::invalid_argument("mixed incompatible field requirements: m=" +
                                      std::to_string(common_m) + " and m=" + std::to_string(m) +
                                      " need different extensions of Q");
        common = &f;
        common_m = m;
      }
      t[i][j] = two_cos_pi_over(m);
    }
  return t;
}

// --- group table -------------------------------------------------------------

GroupTable::GroupTable(CoxeterMatrix cm, int max_length, int element_cap) : cm_(std::move(cm)) {
  if (element_cap <= 0) throw std::invalid_argument("element cap must be positive");
  if (cm_.has_infinite_entry()) {
    if (cm_.rank() != 2)
      throw std::invalid_argument("the infinite dihedral group is the only supported infinite type");
    if (max_length < 0) throw std::invalid_argument("max_length must be nonnegative");
    if (2 * max_length + 1 > element_cap) throw GroupTooLarge("group too large: truncation exceeds the element cap");
    finite_ = false;
    build_dihedral(max_length);
  } else {
    build_finite(element_cap);
  }
  index_words();
}

void GroupTable::build_finite(int element_cap) {
  int n = cm_.rank();
  auto cos2 = two_cos_table(cm_);
  // Roots in the basis of simple roots; s_i(v) = v - (B v)_i alpha_i with
  // B_ii = 2 and B_ij = -2cos(pi/m_ij).
  using Root = std::vector<FieldElement>;
  std::vector<Root> roots;
  std::map<Root, int> root_index;
  for (int i = 0; i < n; ++i) {
    Root r(n);
    r[i] = FieldElement(1L);
    root_index.emplace(r, i);
    roots.push_back(std::move(r));
  }
  auto reflect = [&](int s, const Root& v) {
    FieldElement pairing = v[s] * FieldElement(2L);
    for (int j = 0; j < n; ++j)
      if (j != s && !v[j].is_zero()) pairing -= cos2[s][j] * v[j];
    Root w(v);
    w[s] -= pairing;
    return w;
  };
  const std::size_t root_cap = std::min<std::size_t>(20000, 2 * static_cast<std::size_t>(element_cap));
  std::vector<std::vector<int>> perm(n);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (int s = 0; s < n; ++s) {
      Root img = reflect(s, roots[k]);
      auto it = root_index.find(img);
      int idx;
      if (it == root_index.end()) {
        if (roots.size() >= root_cap) throw GroupTooLarge("group too large: root system exceeds the cap");
        idx = static_cast<int>(roots.size());
        root_index.emplace(img, idx);
        roots.push_back(std::move(img));
      } else {
        idx = it->second;
      }
      if (perm[s].size() <= k) perm[s].resize(k + 1);
      perm[s][k] = idx;
    }
  }
  const int nroots = static_cast<int>(roots.size());

  // Elements as permutations of roots, keyed by the images of simple roots.
  std::unordered_map<std::string, int> seen;
  std::vector<std::vector<int>> perms;
  auto simple_key = [&](const std::vector<int>& p) { return key_of(std::vector<int>(p.begin(), p.begin() + n)); };
  std::vector<int> id(nroots);
  for (int i = 0; i < nroots; ++i) id[i] = i;
  seen.emplace(simple_key(id), 0);
  perms.push_back(id);
  words_.push_back({});
  std::vector<int> level = {0};
  while (!level.empty()) {
    std::vector<int> next;
    for (int x : level)
      for (int s = 0; s < n; ++s) {
        std::vector<int> y(nroots);
        for (int i = 0; i < nroots; ++i) y[i] = perms[x][perm[s][i]];
        std::string k = simple_key(y);
        if (seen.count(k)) continue;
        if (static_cast<int>(perms.size()) >= element_cap)
          throw GroupTooLarge("group too large: more than " + std::to_string(element_cap) + " elements");
        int id_y = static_cast<int>(perms.size());
        seen.emplace(std::move(k), id_y);
        perms.push_back(std::move(y));
        Word w = words_[x];
        w.push_back(s);
        words_.push_back(std::move(w));
        next.push_back(id_y);
      }
    level = std::move(next);
  }

  const int size = static_cast<int>(perms.size());
  right_.assign(size, std::vector<int>(n));
  left_.assign(size, std::vector<int>(n));
  inverse_.assign(size, 0);
  for (int x = 0; x < size; ++x) {
    std::vector<int> y(nroots);
    for (int s = 0; s < n; ++s) {
      for (int i = 0; i < nroots; ++i) y[i] = perms[x][perm[s][i]];
      right_[x][s] = seen.at(simple_key(y));
      for (int i = 0; i < nroots; ++i) y[i] = perm[s][perms[x][i]];
      left_[x][s] = seen.at(simple_key(y));
    }
    std::vector<int> inv(nroots);
    for (int i = 0; i < nroots; ++i) inv[perms[x][i]] = i;
    inverse_[x] = seen.at(simple_key(inv));
  }
  max_length_ = static_cast<int>(words_.back().size());
}

void GroupTable::build_dihedral(int max_length) {
  max_length_ = max_length;
  words_.push_back({});
  for (int len = 1; len <= max_length; ++len)
    for (int first = 0; first < 2; ++first) {
      Word w(len);
      for (int i = 0; i < len; ++i) w[i] = (first + i) % 2;
      words_.push_back(std::move(w));
    }
}

void GroupTable::index_words() {
  for (int i = 0; i < size(); ++i) by_word_.emplace(key_of(words_[i]), i);
  if (finite_) return;
  int n = size();
  right_.assign(n, std::vector<int>(2, -1));
  left_.assign(n, std::vector<int>(2, -1));
  inverse_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < 2; ++s) {
      Word w = words_[x];
      w.push_back(s);
      if (auto e = find(reduce_dihedral(w))) right_[x][s] = e->index;
      w = words_[x];
      w.insert(w.begin(), s);
      if (auto e = find(reduce_dihedral(w))) left_[x][s] = e->index;
    }
    Word r(words_[x].rbegin(), words_[x].rend());
    inverse_[x] = find(r)->index;
  }
}

Word GroupTable::reduce_dihedral(const Word& w) const {
  Word out;
  for (int s : w) {
    if (!out.empty() && out.back() == s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

std::vector<Element> GroupTable::elements() const {
  std::vector<Element> v(size());
  for (int i = 0; i < size(); ++i) v[i] = Element{i};
  return v;
}

std::optional<Element> GroupTable::try_right(Element x, int s) const {
  int y = right_.at(x.index).at(s);
  if (y < 0) return std::nullopt;
  return Element{y};
}

Element GroupTable::right(Element x, int s) const {
  int y = right_.at(x.index).at(s);
  if (y < 0) throw OutOfRange("out of enumerated range: " + word_string(x) + "*" + cm_.labels()[s]);
  return Element{y};
}

Element GroupTable::left(int s, Element x) const {
  int y = left_.at(x.index).at(s);
  if (y < 0) throw OutOfRange("out of enumerated range: " + cm_.labels()[s] + "*" + word_string(x));
  return Element{y};
}

Element GroupTable::inverse(Element x) const { return Element{inverse_.at(x.index)}; }

Element GroupTable::multiply(Element x, Element y) const {
  if (!finite_) {
    Word w = words_.at(x.index);
    const Word& b = words_.at(y.index);
    w.insert(w.end(), b.begin(), b.end());
    return evaluate(w);
  }
  for (int s : words_.at(y.index)) x = right(x, s);
  return x;
}

Element GroupTable::evaluate(const Word& w) const {
  for (int s : w)
    if (s < 0 || s >= rank()) throw std::invalid_argument("generator index out of range");
  if (!finite_) {
    Word r = reduce_dihedral(w);
    auto e = find(r);
    if (!e) throw OutOfRange("out of enumerated range: length " + std::to_string(r.size()) + " exceeds " +
                             std::to_string(max_length_));
    return *e;
  }
  Element x = identity();
  for (int s : w) x = right(x, s);
  return x;
}

std::optional<Element> GroupTable::find(const Word& w) const {
  auto it = by_word_.find(key_of(w));
  if (it == by_word_.end()) return std::nullopt;
  return Element{it->second};
}

bool GroupTable::right_descent(Element x, int s) const {
  if (!finite_) return !word(x).empty() && word(x).back() == s;
  return length(Element{right_[x.index][s]}) < length(x);
}

bool GroupTable::left_descent(int s, Element x) const {
  if (!finite_) return !word(x).empty() && word(x).front() == s;
  return length(Element{left_[x.index][s]}) < length(x);
}

bool GroupTable::bruhat_leq(Element x, Element w) const { return bruhat_rec(x.index, w.index); }

bool GroupTable::bruhat_rec(int x, int w) const {
  if (x == w) return true;
  if (length(Element{x}) >= length(Element{w})) return false;
  std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(w);
  {
    std::lock_guard<std::mutex> lock(bruhat_mu_);
    auto it = bruhat_memo_.find(key);
    if (it != bruhat_memo_.end()) return it->second;
  }
  int s = words_[w].front();
  int sw = left_[w][s];
  int sx = left_[x][s];
  bool r;
  if (sx >= 0 && length(Element{sx}) < length(Element{x}))
    r = bruhat_rec(sx, sw);
  else
    r = bruhat_rec(x, sw);
  std::lock_guard<std::mutex> lock(bruhat_mu_);
  bruhat_memo_.emplace(key, r);
  return r;
}

std::vector<Element> GroupTable::reflections() const {
  std::vector<bool> is_ref(size(), false);
  for (int w = 0; w < size(); ++w)
    for (int s = 0; s < rank(); ++s) {
      Word c = words_[w];
      c.push_back(s);
      const Word& wi = words_[inverse_[w]];
      c.insert(c.end(), wi.begin(), wi.end());
      if (finite_) {
        is_ref[evaluate(c).index] = true;
      } else if (auto e = find(reduce_dihedral(c))) {
        is_ref[e->index] = true;
      }
    }
  std::vector<Element> out;
  for (int i = 0; i < size(); ++i)
    if (is_ref[i]) out.push_back(Element{i});
  return out;
}

}  // namespace soergel
