#include "soergel/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "soergel/json_io.hpp"
#include "soergel/soergel_ops.hpp"

namespace soergel::cli {

namespace {

struct Options {
  std::string type = "A2";
  std::string coxeter_file;
  int max_length = 12;
  int element_cap = GroupTable::kDefaultElementCap;
  std::string format = "json";
  std::uint64_t seed = 1;
  int poly_cap = 10;
  int hom_max = 8;
};

struct Result {
  json report;
  int code = kOk;
};

/// A verification mismatch: reported, exit code 2.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- resolution of inputs ---------------------------------------------------------

CoxeterMatrix resolve_coxeter(const Options& o) {
  if (!o.coxeter_file.empty()) return coxeter_from_json(read_json_file(o.coxeter_file));
  try {
    return builtin_coxeter(o.type);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Word parse_word(const CoxeterMatrix& cm, const std::string& text) {
  try {
    return cm.parse_word(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

struct Pair {
  Representation ambient;
  SubRep sub;
};

Pair resolve_pair(const std::string& spec, const CoxeterMatrix& cm) {
  try {
    if (spec == "builtin:geom") {
      Representation r = geometric_rep(cm);
      Matrix id = Matrix::identity(r.dim());
      return {r, SubRep(r, id)};
    }
    if (spec == "builtin:geom-plus-trivial") {
      auto [r, sub] = direct_sum_trivial(geometric_rep(cm), 1);
      return {r, sub};
    }
    if (spec.rfind("builtin:", 0) == 0) throw InputError("unknown built-in representation " + spec);
    RepresentationFile f = representation_from_json(read_json_file(spec), cm);
    Matrix basis = f.subspace ? *f.subspace : Matrix::identity(f.rep.dim());
    return {f.rep, SubRep(f.rep, basis)};
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::shared_ptr<const PolyRing> make_ring(const Representation& rep) {
  try {
    return std::make_shared<const PolyRing>(rep);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

DegreeCaps caps_of(const Options& o) { return DegreeCaps{o.poly_cap, o.hom_max}; }

/// Deterministic small rational points, redrawn by the caller when not generic.
class PointSource {
 public:
  explicit PointSource(std::uint64_t seed) : rng_(seed) {}
  std::vector<Scalar> next(int n) {
    std::vector<Scalar> p;
    for (int i = 0; i < n; ++i) p.emplace_back(static_cast<long>(rng_() % 19) - 9);
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

// --- rendering ----------------------------------------------------------------------------

json hecke_to_json(const GroupTable& g, const HeckeElement& a) {
  json out = json::object();
  for (const auto& [x, c] : a.terms()) out[g.word_string(x)] = laurent_to_json(c);
  return out;
}

std::vector<std::string> variable_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

json morphism_to_json(const BSMorphism& phi, int nvars) {
  auto names = variable_names(nvars);
  json rows = json::array();
  for (const auto& row : phi.m) {
    json r = json::array();
    for (const auto& p : row) r.push_back(p.to_string(names));
    rows.push_back(r);
  }
  return rows;
}

json counts_to_json(const GroupTable& g, const std::map<Element, BigInt>& n) {
  json out = json::object();
  for (const auto& [x, c] : n) out[g.word_string(x)] = c.get_si();
  return out;
}

json graded_to_json(const std::map<int, int>& m) {
  json out = json::object();
  for (const auto& [d, c] : m) out[std::to_string(d)] = c;
  return out;
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : report.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : report.items()) {
    out << k << std::string(width - k.size() + 2, ' ');
    out << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

// --- coxeter / hecke ----------------------------------------------------------------------

Result coxeter_build(const Options& o) {
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, o.max_length, o.element_cap);
  json hist = json::array();
  json elems = json::array();
  for (Element x : g.elements()) {
    int l = g.length(x);
    while (static_cast<int>(hist.size()) <= l) hist.push_back(0);
    hist[l] = hist[l].get<int>() + 1;
    if (g.size() <= 1000) elems.push_back(g.word_string(x));
  }
  json r = {{"coxeter", coxeter_to_json(cm)},
            {"finite", g.is_finite()},
            {"size", g.size()},
            {"max_length", g.max_length()},
            {"length_histogram", hist},
            {"reflections", g.reflections().size()}};
  if (g.size() <= 1000) r["elements"] = elems;
  return {r};
}

HeckeElement word_element(const HeckeAlgebra& h, const Word& w, const std::string& basis) {
  HeckeElement a = h.one();
  for (int s : w) {
    if (basis == "T")
      a = h.mul_generator(a, s);
    else if (basis == "C")
      a = h.mul(a, h.cprime_s(s));
    else if (basis == "BS")
      a = a + h.mul_generator(a, s);
    else
      throw InputError("basis must be T, C or BS");
  }
  return a;
}

Result hecke_mul(const Options& o, const std::string& left, const std::string& right, const std::string& basis) {
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, o.max_length, o.element_cap);
  HeckeAlgebra h(g);
  HeckeElement a = word_element(h, parse_word(cm, left), basis);
  HeckeElement b = word_element(h, parse_word(cm, right), basis);
  return {json{{"basis", basis},
               {"left", hecke_to_json(g, a)},
               {"right", hecke_to_json(g, b)},
               {"product", hecke_to_json(g, h.mul(a, b))}}};
}

Result hecke_tau(const Options& o, const std::string& word, const std::string& basis) {
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, o.max_length, o.element_cap);
  HeckeAlgebra h(g);
  HeckeElement a = word_element(h, parse_word(cm, word), basis);
  return {json{{"word", word}, {"basis", basis}, {"tau", laurent_to_json(h.tau(a))}}};
}

Result hecke_kl(const Options& o, const std::string& element) {
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, o.max_length, o.element_cap);
  if (!g.is_finite()) throw InputError("the Kazhdan-Lusztig table needs a finite group");
  HeckeAlgebra h(g);
  KLTable kl(h);
  std::vector<Element> targets;
  if (element.empty()) {
    targets = g.elements();
  } else {
    targets.push_back(g.evaluate(parse_word(cm, element)));
  }
  json c = json::object(), p = json::object();
  for (Element w : targets) {
    c[g.word_string(w)] = hecke_to_json(g, kl.element(w));
    json pw = json::object();
    for (const auto& [x, coef] : kl.element(w).terms()) {
      json q = json::array();
      for (const auto& z : kl.kl_polynomial(x, w)) q.push_back(to_string(z));
      pw[g.word_string(x)] = q;
    }
    p[g.word_string(w)] = pw;
  }
  return {json{{"kl", c}, {"P", p}}};
}

// --- decat --------------------------------------------------------------------------------------

Result decat_hom_rank(const Options& o, const std::string& word) {
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, o.max_length, o.element_cap);
  HeckeAlgebra h(g);
  Word w = parse_word(cm, word);
  return {json{{"word", cm.format_word(w)},
               {"tau", laurent_to_json(h.tau(bs_character(h, w)))},
               {"shifts", hom_rank_formula(h, w).shifts}}};
}

Result decat_nw(const Options& o, const std::string& word) {
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, o.max_length, o.element_cap);
  HeckeAlgebra h(g);
  Word w = parse_word(cm, word);
  CharacterTable ct = standard_multiplicities(h, w);
  BigInt total = 0;
  for (const auto& [x, c] : ct.n) total += c;
  return {json{{"word", cm.format_word(w)}, {"n_w", counts_to_json(g, ct.n)}, {"total", total.get_si()},
               {"n1_identity", verify_n1_identity(h, w)}}};
}

Result decat_kl_expand(const Options& o, const std::string& word) {
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, o.max_length, o.element_cap);
  if (!g.is_finite()) throw InputError("the C' expansion needs a finite group");
  HeckeAlgebra h(g);
  KLTable kl(h);
  Word w = parse_word(cm, word);
  KLExpansion ex = bs_in_kl_basis(kl, w);
  json e = json::object();
  for (const auto& [x, c] : ex.coefficients) e[g.word_string(x)] = laurent_to_json(c);
  return {json{{"word", cm.format_word(w)}, {"expansion", e}, {"positive", ex.positive}}};
}

std::vector<Word> word_battery(int rank, int max_len, int random_count, std::uint64_t seed) {
  std::vector<Word> words{{}};
  std::size_t total = 1, layer = 1;
  for (int l = 1; l <= max_len; ++l) {
    layer *= static_cast<std::size_t>(rank);
    total += layer;
    if (total > 20000) break;
  }
  if (total <= 20000) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (static_cast<int>(words[i].size()) == max_len) continue;
      for (int s = 0; s < rank; ++s) {
        Word w = words[i];
        w.push_back(s);
        words.push_back(std::move(w));
      }
    }
    return words;
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    Word w(rng() % static_cast<std::uint64_t>(max_len + 1));
    for (int& s : w) s = static_cast<int>(rng() % static_cast<std::uint64_t>(rank));
    words.push_back(std::move(w));
  }
  return words;
}

std::map<Element, BigInt> brute_force_counts(const GroupTable& g, const Word& w) {
  if (w.size() > 20) throw CapExceeded("subsequence enumeration limited to 20 letters");
  std::map<Element, BigInt> n;
  for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
    Word sub;
    for (std::size_t i = 0; i < w.size(); ++i)
      if ((mask >> i) & 1) sub.push_back(w[i]);
    n[g.evaluate(sub)] += 1;
  }
  return n;
}

Result decat_verify(const Options& o, int max_len, int random_count, int positivity_len) {
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, std::max(o.max_length, max_len), o.element_cap);
  HeckeAlgebra h(g);
  std::optional<KLTable> kl;
  if (g.is_finite()) kl.emplace(h);
  int checked = 0, positivity_checked = 0;
  json failures = json::array();
  for (const Word& w : word_battery(cm.rank(), max_len, random_count, o.seed)) {
    ++checked;
    CharacterTable ct = standard_multiplicities(h, w);
    std::string name = cm.format_word(w);
    if (ct.n != brute_force_counts(g, w)) failures.push_back({{"word", name}, {"check", "dp"}});
    if (!verify_n1_identity(h, w)) failures.push_back({{"word", name}, {"check", "n1"}});
    if (specialize_q1(h, w) != ct.n) failures.push_back({{"word", name}, {"check", "q1"}});
    if (kl && static_cast<int>(w.size()) <= positivity_len) {
      ++positivity_checked;
      if (!bs_in_kl_basis(*kl, w).positive) failures.push_back({{"word", name}, {"check", "positivity"}});
    }
  }
  Result r{json{{"words_checked", checked},
                {"positivity_checked", positivity_checked},
                {"failures", failures},
                {"pass", failures.empty()}}};
  if (!failures.empty()) r.code = kFailed;
  return r;
}

// --- reps ------------------------------------------------------------------------------------------

json rf_to_json(const GroupTable& g, const RFReport& rf) {
  json w = json::array();
  for (Element x : rf.witness) w.push_back(g.word_string(x));
  return {{"holds", rf.holds},           {"inconclusive", rf.inconclusive}, {"faithful", rf.faithful},
          {"witness", w},                {"reason", rf.reason},             {"elements_checked", rf.elements_checked}};
}

Result reps_check(const Options& o, const std::string& rep_spec, const std::string& checks) {
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, o.max_length, o.element_cap);
  Pair p = resolve_pair(rep_spec, cm);
  json r = json::object();
  r["dim"] = p.ambient.dim();
  r["field"] = p.ambient.field().describe();
  std::vector<std::string> wanted;
  std::stringstream ss(checks);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) wanted.push_back(item);
  for (const auto& c : wanted) {
    if (c == "reflections") {
      auto rr = check_reflections(p.ambient);
      json bad = json::array();
      for (int s : rr.offending) bad.push_back(cm.labels()[s]);
      r["reflections"] = {{"ok", rr.ok}, {"offending", bad}};
    } else if (c == "rvf") {
      auto rv = check_rvf(p.ambient, g);
      json w = json::array();
      for (Element x : rv.witness) w.push_back(g.word_string(x));
      r["rvf"] = {{"holds", rv.holds}, {"witness", w}, {"reflections_checked", rv.reflections_checked}};
    } else if (c == "rf") {
      r["rf"] = rf_to_json(g, check_rf(p.ambient, g));
    } else if (c == "goodpair") {
      auto gp = check_good_pair(p.sub, g);
      r["goodpair"] = {{"ok", gp.ok()},
                       {"reflections_on_v", gp.reflections_on_v},
                       {"reflections_on_vprime", gp.reflections_on_vprime},
                       {"stable", gp.stable},
                       {"quotient_trivial", gp.quotient_trivial},
                       {"failures", gp.failures},
                       {"rf", rf_to_json(g, gp.rf)}};
    } else {
      throw InputError("unknown check " + c + " (use reflections, rvf, rf, goodpair)");
    }
  }
  return {r};
}

// --- bimod -------------------------------------------------------------------------------------------

json hom_series_to_json(const HomSeries& hs) {
  json dims = json::object();
  for (int d = hs.lo; d <= hs.hi; ++d) dims[std::to_string(d)] = hs.dim(d);
  return {{"dims", dims}, {"generator_degrees", hs.generators}, {"shifts", hs.shifts()},
          {"free_consistent", hs.free_consistent}};
}

Result bimod_hom_rank(const Options& o, const std::string& rep_spec, const std::string& word,
                      const std::string& target, int max_degree) {
  CoxeterMatrix cm = resolve_coxeter(o);
  Pair p = resolve_pair(rep_spec, cm);
  auto ring = make_ring(p.ambient);
  Word w = parse_word(cm, word);
  BSBimodule src(ring, w), tgt(ring, parse_word(cm, target));
  HomSeries hs = hom_series(src, tgt, hom_min_degree(src, tgt), max_degree, caps_of(o));
  Result r{hom_series_to_json(hs)};
  r.report["word"] = cm.format_word(w);
  r.report["target"] = cm.format_word(tgt.word());
  if (tgt.length() == 0) {
    GroupTable g(cm, std::max(o.max_length, static_cast<int>(w.size())), o.element_cap);
    HeckeAlgebra h(g);
    std::vector<int> predicted = hom_rank_formula(h, w).shifts;
    json pred = json::object();
    bool match = true;
    for (int d = hs.lo; d <= hs.hi; ++d) {
      std::size_t n = 0;
      for (int s : predicted) n += ring_dimension(ring->nvars(), d + s);
      pred[std::to_string(d)] = n;
      if (static_cast<int>(n) != hs.dim(d)) match = false;
    }
    r.report["predicted_dims"] = pred;
    r.report["predicted_shifts"] = predicted;
    r.report["matches_prediction"] = match && hs.shifts() == predicted;
    if (!r.report["matches_prediction"].get<bool>()) r.code = kFailed;
  }
  return r;
}

Result bimod_decompose(const Options& o, const std::string& rep_spec, const std::string& word, int shift) {
  CoxeterMatrix cm = resolve_coxeter(o);
  Pair p = resolve_pair(rep_spec, cm);
  auto ring = make_ring(p.ambient);
  Word w = parse_word(cm, word);
  BSBimodule m(ring, w, shift);
  GroupTable g(cm, std::max(o.max_length, static_cast<int>(w.size())), o.element_cap);
  std::optional<HeckeAlgebra> h;
  std::optional<KLTable> kl;
  if (g.is_finite()) {
    h.emplace(g);
    kl.emplace(*h);
  }
  Decomposition d = decompose_bs(m, kl ? &*kl : nullptr, caps_of(o));
  json summands = json::array();
  for (const auto& s : d.summands)
    summands.push_back({{"rank", s.rank},
                        {"graded_rank", graded_to_json(s.graded_rank)},
                        {"idempotent", morphism_to_json(s.idempotent, ring->nvars())}});
  Result r{json{{"word", cm.format_word(w)},
                {"shift", shift},
                {"end0_dim", d.end0_dim},
                {"radical_dim", d.radical_dim},
                {"summands", summands}}};
  if (d.matches_prediction) {
    json ex = json::object();
    for (const auto& [x, c] : d.kl_expansion) ex[g.word_string(x)] = laurent_to_json(c);
    json pred = json::array();
    for (const auto& gr : d.predicted) pred.push_back(graded_to_json(gr));
    r.report["kl_expansion"] = ex;
    r.report["predicted"] = pred;
    r.report["matches_prediction"] = *d.matches_prediction;
    if (!*d.matches_prediction) r.code = kFailed;
  }
  return r;
}

json good_pair_json(const GroupTable& g, const SubRep& sub, bool& ok) {
  auto gp = check_good_pair(sub, g);
  ok = gp.ok();
  return {{"ok", gp.ok()}, {"failures", gp.failures}, {"rf", gp.rf.holds}};
}

json theorem1_json(const Theorem1Report& t) {
  return {{"shifts", t.shifts}, {"shifts_prime", t.shifts_prime}, {"window", {t.lo, t.hi}},
          {"dims", t.dims},     {"dims_prime", t.dims_prime},     {"free", t.free},
          {"free_prime", t.free_prime}, {"surjective", t.surjective}, {"ok", t.ok()}};
}

json theorem2_json(const Theorem2Report& t) {
  return {{"end0_dim", t.dim},
          {"end0_dim_prime", t.dim_prime},
          {"radical_dim", t.radical_dim},
          {"radical_dim_prime", t.radical_dim_prime},
          {"indecomposable", t.indecomposable},
          {"indecomposable_prime", t.indecomposable_prime},
          {"ranks", t.ranks},
          {"ranks_prime", t.ranks_prime},
          {"idempotents_lift", t.lifted},
          {"ok", t.ok()}};
}

Result bimod_verify(const Options& o, int theorem, const std::string& pair_spec, const std::string& word,
                    const std::string& target, int max_degree) {
  if (theorem != 1 && theorem != 2) throw InputError("--theorem must be 1 or 2");
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, o.max_length, o.element_cap);
  Pair p = resolve_pair(pair_spec, cm);
  bool good = false;
  Result r{json{{"theorem", theorem}, {"good_pair", good_pair_json(g, p.sub, good)}}};
  if (!good) {
    r.code = kFailed;
    return r;
  }
  BaseChange q(p.sub);
  Word w = parse_word(cm, word);
  BSBimodule m(q.source(), w);
  r.report["word"] = cm.format_word(w);
  bool ok = false;
  if (theorem == 1) {
    BSBimodule n(q.source(), parse_word(cm, target));
    r.report["target"] = cm.format_word(n.word());
    auto t = verify_theorem1(m, n, q, max_degree, caps_of(o));
    r.report["report"] = theorem1_json(t);
    ok = t.ok();
  } else {
    auto t = verify_theorem2(m, q, caps_of(o));
    r.report["report"] = theorem2_json(t);
    ok = t.ok();
  }
  r.report["pass"] = ok;
  if (!ok) r.code = kFailed;
  return r;
}

// --- verify-all --------------------------------------------------------------------------------------

Result verify_all(const Options& o, const std::string& pair_spec, int max_degree) {
  CoxeterMatrix cm = resolve_coxeter(o);
  GroupTable g(cm, o.max_length, o.element_cap);
  if (!g.is_finite()) throw InputError("verify-all needs a finite Coxeter group");
  HeckeAlgebra h(g);
  KLTable kl(h);
  Pair p = resolve_pair(pair_spec, cm);
  json checks = json::array();
  int failed = 0;
  auto record = [&](const std::string& name, bool pass, json detail = json::object()) {
    if (!pass) ++failed;
    json c = {{"name", name}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
  };

  bool good = false;
  json gp = good_pair_json(g, p.sub, good);
  record("good pair", good, gp);
  if (!good) return {json{{"checks", checks}, {"passed", 0}, {"failed", failed}}, kFailed};

  BaseChange q(p.sub);
  const auto& ring = q.source();
  const int t = cm.rank() > 1 ? 1 : 0;
  std::vector<Word> words{{0}, {0, t}, {0, t, 0}};
  std::vector<Word> targets{{}, {0}};
  const DegreeCaps caps = caps_of(o);

  for (const auto& w : words)
    for (const auto& n : targets) {
      auto r = verify_theorem1(BSBimodule(ring, w), BSBimodule(ring, n), q, max_degree, caps);
      record("hom base change " + cm.format_word(w) + " -> " + cm.format_word(n), r.ok(),
             {{"shifts", r.shifts}, {"shifts_prime", r.shifts_prime}});
    }
  for (const auto& w : words) {
    auto r = verify_theorem2(BSBimodule(ring, w), q, caps);
    record("indecomposability transfer " + cm.format_word(w), r.ok(),
           {{"end0_dim", r.dim}, {"end0_dim_prime", r.dim_prime}, {"ranks", r.ranks}});
  }
  for (const auto& w : words) {
    auto d = decompose_bs(BSBimodule(ring, w), &kl, caps);
    std::vector<int> ranks;
    for (const auto& s : d.summands) ranks.push_back(s.rank);
    record("decomposition matches C' expansion " + cm.format_word(w), d.matches_prediction.value_or(false),
           {{"ranks", ranks}});
  }
  for (int s = 0; s < cm.rank(); ++s)
    record("exact sequence " + cm.labels()[s], theta_exact_sequence(ring, s, o.poly_cap).ok());

  PointSource points(o.seed);
  auto generic = [&](const std::function<void(const std::vector<Scalar>&)>& body) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      try {
        body(points.next(ring->nvars()));
        return;
      } catch (const NonGenericPoint&) {
      }
    }
    throw VerificationError("no generic point found");
  };
  for (int s = 0; s < cm.rank(); ++s) {
    bool ok = true;
    for (int k = 0; k < 5; ++k) generic([&](const auto& pt) { ok = ok && generic_splitting(*ring, s, pt).ok(); });
    record("splitting at generic points " + cm.labels()[s], ok);
  }
  for (const auto& w : word_battery(cm.rank(), 3, 0, o.seed)) {
    bool ok = true;
    CharacterTable ct = standard_multiplicities(h, w);
    for (int k = 0; k < 2; ++k)
      generic([&](const auto& pt) {
        auto sm = standard_matrix(*ring, g, w, pt);
        std::map<Element, BigInt> labels;
        for (Element x : sm.labels) labels[x] += 1;
        ok = ok && !sm.determinant.is_zero() && labels == ct.n;
      });
    record("standard matrix " + cm.format_word(w), ok);
  }
  for (int s = 0; s < cm.rank(); ++s)
    for (const auto& src : std::vector<Word>{{}, {t}}) {
      bool ok = true;
      for (int d = -2; d <= 2; d += 2)
        ok = ok && check_adjunction(s, BSBimodule(ring, src), BSBimodule(ring, {}), d, caps).ok();
      record("adjunction " + cm.labels()[s] + " on " + cm.format_word(src), ok);
    }
  {
    bool ok = true;
    for (const auto& w : word_battery(cm.rank(), 6, 200, o.seed))
      ok = ok && verify_n1_identity(h, w) && bs_in_kl_basis(kl, w).positive;
    record("character identities and positivity", ok);
  }
  int passed = static_cast<int>(checks.size()) - failed;
  return {json{{"checks", checks}, {"passed", passed}, {"failed", failed}}, failed == 0 ? kOk : kFailed};
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--type", o.type, "Built-in Coxeter type (A1, A2, A3, B2, H2, I2(m), I2(inf))");
  app->add_option("--coxeter", o.coxeter_file, "Coxeter matrix file (overrides --type)");
  app->add_option("--max-length", o.max_length, "Truncation length for infinite groups")->check(CLI::PositiveNumber);
  app->add_option("--element-cap", o.element_cap, "Largest group enumerated")->check(CLI::PositiveNumber);
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app->add_option("--seed", o.seed, "Seed for generic points and random words");
  app->add_option("--poly-cap", o.poly_cap, "Polynomial degree cap")->check(CLI::PositiveNumber);
  app->add_option("--hom-cap", o.hom_max, "Largest Hom degree solved")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Hecke algebras and with Bott-Samelson bimodules", "soergel"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App*, std::function<Result()>>> actions;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_common(sub, o);
    return sub;
  };

  auto* cox = app.add_subcommand("coxeter", "Coxeter groups")->require_subcommand(1);
  auto* cox_build = leaf(cox, "build", "Enumerate a Coxeter group");
  cox_build->add_option("--file", o.coxeter_file, "Coxeter matrix file");
  actions.emplace_back(cox_build, [&] { return coxeter_build(o); });

  auto* hecke = app.add_subcommand("hecke", "Hecke algebra")->require_subcommand(1);
  std::string left, right, basis = "T", word, element, target, rep = "builtin:geom",
                                pair = "builtin:geom-plus-trivial", checks = "reflections,rvf,rf,goodpair";
  auto* hk_mul = leaf(hecke, "mul", "Multiply products of generators");
  hk_mul->add_option("--left", left, "Word for the left factor")->required();
  hk_mul->add_option("--right", right, "Word for the right factor")->required();
  hk_mul->add_option("--basis", basis, "Generators T_s, C'_s or 1+T_s")->check(CLI::IsMember({"T", "C", "BS"}));
  actions.emplace_back(hk_mul, [&] { return hecke_mul(o, left, right, basis); });
  auto* hk_tau = leaf(hecke, "tau", "Coefficient of T_e in a product of generators");
  hk_tau->add_option("--word", word, "Word")->required();
  hk_tau->add_option("--basis", basis, "Generators T_s, C'_s or 1+T_s")->check(CLI::IsMember({"T", "C", "BS"}));
  actions.emplace_back(hk_tau, [&] { return hecke_tau(o, word, basis); });
  auto* hk_kl = leaf(hecke, "kl", "Kazhdan-Lusztig basis");
  hk_kl->add_option("--element", element, "Only this element");
  actions.emplace_back(hk_kl, [&] { return hecke_kl(o, element); });

  auto* decat = app.add_subcommand("decat", "Character-level computations")->require_subcommand(1);
  auto* dc_hom = leaf(decat, "hom-rank", "Predicted shifts of Hom(BS(word), R)");
  dc_hom->add_option("--word", word, "Word")->required();
  actions.emplace_back(dc_hom, [&] { return decat_hom_rank(o, word); });
  auto* dc_nw = leaf(decat, "nw", "Standard multiplicities n_w");
  dc_nw->add_option("--word", word, "Word")->required();
  actions.emplace_back(dc_nw, [&] { return decat_nw(o, word); });
  auto* dc_kl = leaf(decat, "kl-expand", "Expand b_{s_1}...b_{s_k} in the C' basis");
  dc_kl->add_option("--word", word, "Word")->required();
  actions.emplace_back(dc_kl, [&] { return decat_kl_expand(o, word); });
  int max_len = 10, random_count = 500, positivity_len = 6;
  auto* dc_verify = leaf(decat, "verify", "Check multiplicity identities on many words");
  dc_verify->add_option("--max-len", max_len, "Longest word")->check(CLI::NonNegativeNumber);
  dc_verify->add_option("--random", random_count, "Random words when enumeration is too large");
  dc_verify->add_option("--positivity-len", positivity_len, "Longest word for the positivity check");
  actions.emplace_back(dc_verify, [&] { return decat_verify(o, max_len, random_count, positivity_len); });

  auto* reps = app.add_subcommand("reps", "Representations")->require_subcommand(1);
  auto* rp_check = leaf(reps, "check", "Reflection, RVF, RF and good-pair predicates");
  rp_check->add_option("--file,--rep", rep, "Representation file or builtin:geom / builtin:geom-plus-trivial");
  rp_check->add_option("--checks", checks, "Comma-separated checks");
  actions.emplace_back(rp_check, [&] { return reps_check(o, rep, checks); });

  auto* bimod = app.add_subcommand("bimod", "Bott-Samelson bimodules")->require_subcommand(1);
  int max_degree = 8, shift = 0, theorem = 1;
  auto* bm_hom = leaf(bimod, "hom-rank", "Graded dimensions of Hom(BS(word), BS(target))");
  bm_hom->add_option("--rep", rep, "Representation file or built-in name");
  bm_hom->add_option("--word", word, "Source word")->required();
  bm_hom->add_option("--target", target, "Target word (default: R)");
  bm_hom->add_option("--max-degree", max_degree, "Top of the degree window");
  actions.emplace_back(bm_hom, [&] { return bimod_hom_rank(o, rep, word, target, max_degree); });
  auto* bm_dec = leaf(bimod, "decompose", "Split a Bott-Samelson bimodule by primitive idempotents");
  bm_dec->add_option("--rep", rep, "Representation file or built-in name");
  bm_dec->add_option("--word", word, "Word")->required();
  bm_dec->add_option("--shift", shift, "Grading shift");
  actions.emplace_back(bm_dec, [&] { return bimod_decompose(o, rep, word, shift); });
  auto* bm_ver = leaf(bimod, "verify", "Compare a bimodule computation over R and R'");
  bm_ver->add_option("--theorem", theorem, "1: Hom generators, 2: End_0 and indecomposability")->required();
  bm_ver->add_option("--pair", pair, "Pair file (with subspace) or built-in name");
  bm_ver->add_option("--word", word, "Word")->required();
  bm_ver->add_option("--target", target, "Target word for Hom (default: R)");
  bm_ver->add_option("--max-degree", max_degree, "Top of the degree window");
  actions.emplace_back(bm_ver, [&] { return bimod_verify(o, theorem, pair, word, target, max_degree); });

  int all_degree = 6;
  auto* all = leaf(&app, "verify-all", "Run the full verification battery");
  all->add_option("--pair", pair, "Pair file (with subspace) or built-in name");
  all->add_option("--max-degree", all_degree, "Top of the Hom degree window");
  actions.emplace_back(all, [&] { return verify_all(o, pair, all_degree); });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  for (auto& [sub, action] : actions) {
    if (!sub->parsed()) continue;
    try {
      Result r = action();
      json report = {{"schema", "1"}};
      report["command"] = (sub->get_parent() != &app ? sub->get_parent()->get_name() + " " : "") + sub->get_name();
      report.update(r.report);
      emit(report, o.format, out);
      return r.code;
    } catch (const VerificationError& e) {
      err << "verification failed: " << e.what() << "\n";
      return kFailed;
    } catch (const NonSplitQuotient& e) {
      err << "verification failed: " << e.what() << "\n";
      return kFailed;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  err << app.help();
  return kUsage;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace soergel::cli
