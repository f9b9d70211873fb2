#include "soergel/reps.hpp"

#include <map>
#include <stdexcept>

namespace soergel {

namespace {

const TowerField* common_field(const std::vector<Matrix>& ms) {
  const TowerField* f = &TowerField::rationals();
  for (const Matrix& m : ms)
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) {
        const Scalar& e = m(r, c);
        if (e.is_rational()) continue;
        if (!f->is_rational() && f != &e.field())
          throw std::invalid_argument("representation mixes entries from different fields");
        f = &e.field();
      }
  return f;
}

Matrix power(const Matrix& m, int k) {
  Matrix r = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

std::vector<Scalar> row_of(const Matrix& m, int r) {
  std::vector<Scalar> v(m.cols());
  for (int c = 0; c < m.cols(); ++c) v[c] = m(r, c);
  return v;
}

Matrix minus_identity(const Matrix& m) { return m - Matrix::identity(m.rows()); }
Matrix plus_identity(const Matrix& m) { return m + Matrix::identity(m.rows()); }

bool is_reflection(const Matrix& m) {
  return rank(minus_identity(m)) == 1 && kernel(plus_identity(m)).cols() == 1;
}

std::vector<std::vector<Scalar>> matrix_key(const Matrix& m) {
  std::vector<std::vector<Scalar>> k;
  for (int r = 0; r < m.rows(); ++r) k.push_back(row_of(m, r));
  return k;
}

}  // namespace

Representation::Representation(CoxeterMatrix cm, int dim, std::vector<Matrix> matrices)
    : cm_(std::move(cm)), dim_(dim), m_(std::move(matrices)) {
  if (dim_ < 0) throw std::invalid_argument("dimension must be nonnegative");
  if (static_cast<int>(m_.size()) != cm_.rank())
    throw std::invalid_argument("need one matrix per generator");
  for (const Matrix& m : m_)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("matrix shape does not match dimension");
  field_ = common_field(m_);
  Matrix id = Matrix::identity(dim_);
  for (int s = 0; s < cm_.rank(); ++s) {
    if (!(m_[s] * m_[s] == id))
      throw std::invalid_argument("relation fails: M_" + cm_.labels()[s] + "^2 != 1");
    for (int r = s + 1; r < cm_.rank(); ++r) {
      int m = cm_.m(s, r);
      if (m == kInfinity) continue;
      if (!(power(m_[s] * m_[r], m) == id))
        throw std::invalid_argument("relation fails: (M_" + cm_.labels()[s] + " M_" + cm_.labels()[r] +
                                    ")^" + std::to_string(m) + " != 1");
    }
  }
}

Matrix Representation::element_matrix(const GroupTable& g, Element w) const {
  Matrix r = Matrix::identity(dim_);
  for (int s : g.word(w)) r = r * m_.at(s);
  return r;
}

Representation geometric_rep(const CoxeterMatrix& cm) {
  int n = cm.rank();
  auto cos2 = two_cos_table(cm);
  std::vector<Matrix> ms;
  for (int s = 0; s < n; ++s) {
    Matrix m = Matrix::identity(n);
    m(s, s) = Scalar(-1L);
    for (int r = 0; r < n; ++r)
      if (r != s) m(s, r) = cos2[s][r];
    ms.push_back(std::move(m));
  }
  return Representation(cm, n, std::move(ms));
}

// --- subrepresentations ------------------------------------------------------------

SubRep::SubRep(Representation ambient, Matrix basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.rows() != ambient_.dim()) throw std::invalid_argument("subspace basis has the wrong length");
  if (rank(basis_) != basis_.cols()) throw std::invalid_argument("subspace basis is linearly dependent");
}

bool SubRep::is_stable() const {
  int r = rank(basis_);
  for (const Matrix& m : ambient_.matrices())
    if (rank(hconcat(basis_, m * basis_)) != r) return false;
  return true;
}

bool SubRep::quotient_trivial() const {
  int r = rank(basis_);
  for (const Matrix& m : ambient_.matrices())
    if (rank(hconcat(basis_, minus_identity(m))) != r) return false;
  return true;
}

Representation SubRep::restricted() const {
  std::vector<Matrix> ms;
  for (const Matrix& m : ambient_.matrices()) {
    auto x = solve(basis_, m * basis_);
    if (!x) throw std::invalid_argument("subspace is not stable");
    ms.push_back(std::move(*x));
  }
  return Representation(ambient_.coxeter(), dim(), std::move(ms));
}

Matrix SubRep::annihilator() const { return kernel(basis_.transpose()).transpose(); }

std::pair<Representation, SubRep> direct_sum_trivial(const Representation& rep, int d) {
  if (d < 0) throw std::invalid_argument("number of trivial summands must be nonnegative");
  int n = rep.dim();
  std::vector<Matrix> ms;
  for (const Matrix& m : rep.matrices()) {
    Matrix big = Matrix::identity(n + d);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) big(r, c) = m(r, c);
    ms.push_back(std::move(big));
  }
  Representation ambient(rep.coxeter(), n + d, std::move(ms));
  Matrix basis(n + d, n);
  for (int i = 0; i < n; ++i) basis(i, i) = Scalar(1L);
  SubRep sub(ambient, std::move(basis));
  return {std::move(ambient), std::move(sub)};
}

// --- predicates ------------------------------------------------------------------

ReflectionReport check_reflections(const Representation& rep) {
  ReflectionReport rep_out;
  ReflectionData data;
  for (int s = 0; s < rep.coxeter().rank(); ++s) {
    const Matrix& m = rep.matrix(s);
    Matrix fixed = minus_identity(m);
    Matrix minus = kernel(plus_identity(m));
    if (rank(fixed) != 1 || minus.cols() != 1) {
      rep_out.offending.push_back(s);
      continue;
    }
    std::vector<Scalar> alpha = minus.column(0);
    std::vector<Scalar> x;
    for (int r = 0; r < fixed.rows(); ++r) {
      auto row = row_of(fixed, r);
      for (const auto& e : row)
        if (!e.is_zero()) {
          x = row;
          break;
        }
      if (!x.empty()) break;
    }
    Scalar pairing;
    for (int i = 0; i < rep.dim(); ++i) pairing += x[i] * alpha[i];
    if (pairing.is_zero()) {
      rep_out.offending.push_back(s);
      continue;
    }
    Scalar scale = Scalar(2L) / pairing;
    for (auto& e : x) e *= scale;
    data.alpha.push_back(std::move(alpha));
    data.x.push_back(std::move(x));
  }
  rep_out.ok = rep_out.offending.empty();
  if (rep_out.ok) rep_out.data = std::move(data);
  return rep_out;
}

RVFReport check_rvf(const Representation& rep, const GroupTable& g) {
  RVFReport out;
  std::vector<std::pair<Element, Matrix>> lines;
  for (Element t : g.reflections()) {
    Matrix m = rep.element_matrix(g, t);
    ++out.reflections_checked;
    if (!is_reflection(m)) {
      out.witness = {t};
      return out;
    }
    Matrix line = kernel(plus_identity(m));
    for (const auto& [u, other] : lines)
      if (rank(hconcat(line, other)) == 1) {
        out.witness = {u, t};
        return out;
      }
    lines.emplace_back(t, std::move(line));
  }
  out.holds = true;
  return out;
}

RFReport check_rf(const Representation& rep, const GroupTable& g) {
  RFReport out;
  std::vector<bool> is_ref(g.size(), false);
  for (Element t : g.reflections()) is_ref[t.index] = true;
  std::map<std::vector<std::vector<Scalar>>, Element> seen;
  for (Element w : g.elements()) {
    ++out.elements_checked;
    Matrix m = rep.element_matrix(g, w);
    auto [it, inserted] = seen.emplace(matrix_key(m), w);
    if (!inserted) {
      out.faithful = false;
      out.witness = {it->second, w};
      out.reason = "not faithful: two elements act by the same matrix";
      return out;
    }
    bool codim1 = rank(minus_identity(m)) == 1;
    if (codim1 && !is_ref[w.index]) {
      out.witness = {w};
      out.reason = "non-reflection with a fixed space of codimension one";
      return out;
    }
    if (!codim1 && is_ref[w.index]) {
      out.witness = {w};
      out.reason = "reflection whose fixed space is not of codimension one";
      return out;
    }
  }
  out.holds = true;
  if (!g.is_finite()) {
    out.inconclusive = true;
    out.reason = "inconclusive beyond truncation";
  }
  return out;
}

GoodPairReport check_good_pair(const SubRep& sub, const GroupTable& g) {
  GoodPairReport out;
  const auto& labels = sub.ambient().coxeter().labels();
  auto describe = [&](const std::vector<int>& bad) {
    std::string s;
    for (int i : bad) s += (s.empty() ? "" : ",") + labels[i];
    return s;
  };
  auto rv = check_reflections(sub.ambient());
  out.reflections_on_v = rv.ok;
  if (!rv.ok) out.failures.push_back("simple reflections not acting as reflections on V: " + describe(rv.offending));
  out.stable = sub.is_stable();
  if (!out.stable) out.failures.push_back("V' is not W-stable");
  if (out.stable) {
    auto rvp = check_reflections(sub.restricted());
    out.reflections_on_vprime = rvp.ok;
    if (!rvp.ok)
      out.failures.push_back("simple reflections not acting as reflections on V': " + describe(rvp.offending));
  } else {
    out.failures.push_back("reflections on V' not checked (V' unstable)");
  }
  out.quotient_trivial = sub.quotient_trivial();
  if (!out.quotient_trivial) out.failures.push_back("W does not act trivially on V/V'");
  out.rf = check_rf(sub.ambient(), g);
  return out;
}

}  // namespace soergel
