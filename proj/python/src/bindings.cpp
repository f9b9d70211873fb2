#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "soergel/cli.hpp"
#include "soergel/soergel_ops.hpp"

namespace py = pybind11;
using namespace soergel;

namespace {

py::int_ to_py(const BigInt& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::dict laurent_to_py(const LaurentPoly& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

struct Context {
  GroupTable g;
  HeckeAlgebra h;
  explicit Context(const std::string& type) : g(builtin_coxeter(type)), h(g) {}
  Word word(const std::string& w) const { return g.matrix().parse_word(w); }
  Element element(const std::string& w) const { return g.evaluate(word(w)); }
};

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

int group_order(const std::string& type) { return GroupTable(builtin_coxeter(type)).size(); }

std::vector<int> hom_rank(const std::string& word, const std::string& type) {
  Context c(type);
  return hom_rank_formula(c.h, c.word(word)).shifts;
}

py::dict standard_counts(const std::string& word, const std::string& type) {
  Context c(type);
  py::dict d;
  for (const auto& [x, n] : standard_multiplicities(c.h, c.word(word)).n) d[py::str(c.g.word_string(x))] = to_py(n);
  return d;
}

py::list kl_polynomial(const std::string& x, const std::string& w, const std::string& type) {
  Context c(type);
  KLTable kl(c.h);
  py::list out;
  for (const BigInt& a : kl.kl_polynomial(c.element(x), c.element(w))) out.append(to_py(a));
  return out;
}

py::dict kl_expand(const std::string& word, const std::string& type) {
  Context c(type);
  KLTable kl(c.h);
  py::dict d;
  for (const auto& [x, p] : bs_in_kl_basis(kl, c.word(word)).coefficients) d[py::str(c.g.word_string(x))] = laurent_to_py(p);
  return d;
}

py::list decompose(const std::string& word, const std::string& type, int shift) {
  Context c(type);
  KLTable kl(c.h);
  auto ring = std::make_shared<const PolyRing>(geometric_rep(c.g.matrix()));
  Decomposition d = decompose_bs(BSBimodule(ring, c.word(word), shift), &kl);
  py::list out;
  for (const auto& s : d.summands) {
    py::dict e;
    e["rank"] = s.rank;
    e["graded_rank"] = s.graded_rank;
    out.append(e);
  }
  return out;
}

py::dict hom_dimensions(const std::string& word, const std::string& target, int lo, int hi, const std::string& type) {
  Context c(type);
  auto ring = std::make_shared<const PolyRing>(geometric_rep(c.g.matrix()));
  HomSeries hs = hom_series(BSBimodule(ring, c.word(word)), BSBimodule(ring, c.word(target)), lo, hi);
  py::dict dims;
  for (int d = lo; d <= hi; ++d) dims[py::int_(d)] = hs.dim(d);
  py::dict out;
  out["dims"] = dims;
  out["shifts"] = hs.shifts();
  out["free"] = hs.free_consistent;
  return out;
}

py::dict compare_pair(const std::string& word, const std::string& target, int max_degree) {
  GroupTable g(builtin_coxeter("A2"));
  BaseChange q(direct_sum_trivial(geometric_rep(g.matrix()), 1).second);
  BSBimodule m(q.source(), g.matrix().parse_word(word));
  auto t1 = verify_theorem1(m, BSBimodule(q.source(), g.matrix().parse_word(target)), q, max_degree);
  auto t2 = verify_theorem2(m, q);
  py::dict out;
  out["shifts"] = t1.shifts;
  out["shifts_prime"] = t1.shifts_prime;
  out["hom_ok"] = t1.ok();
  out["end0_dim"] = t2.dim;
  out["end0_dim_prime"] = t2.dim_prime;
  out["ranks"] = t2.ranks;
  out["indecomposable"] = t2.indecomposable;
  out["end_ok"] = t2.ok();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hecke algebras, Kazhdan-Lusztig bases and Bott-Samelson bimodules";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<NonSplitQuotient>(m, "NonSplitQuotient", PyExc_RuntimeError);
  py::register_exception<OutOfRange>(m, "OutOfRange", PyExc_IndexError);

  m.def("run", &run, py::arg("args"), "Run a CLI command; returns (exit_code, stdout, stderr).");
  m.def("group_order", &group_order, py::arg("type"));
  m.def("hom_rank", &hom_rank, py::arg("word"), py::arg("type") = "A2",
        "Shifts of the free right R-module Hom(BS(word), R).");
  m.def("standard_multiplicities", &standard_counts, py::arg("word"), py::arg("type") = "A2");
  m.def("kl_polynomial", &kl_polynomial, py::arg("x"), py::arg("w"), py::arg("type") = "A2",
        "Coefficients of P_{x,w} in increasing powers of q.");
  m.def("kl_expand", &kl_expand, py::arg("word"), py::arg("type") = "A2",
        "b_{s_1} ... b_{s_k} in the C' basis as {element: {exponent: coefficient}}.");
  m.def("decompose", &decompose, py::arg("word"), py::arg("type") = "A2", py::arg("shift") = 0);
  m.def("hom_dimensions", &hom_dimensions, py::arg("word"), py::arg("target") = "", py::arg("lo") = -6,
        py::arg("hi") = 8, py::arg("type") = "A2");
  m.def("compare_pair", &compare_pair, py::arg("word"), py::arg("target") = "", py::arg("max_degree") = 6,
        "Hom generators and End_0 over the geometric A2 pair with one trivial summand.");
}
