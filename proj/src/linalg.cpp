#include "soergel/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace soergel {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1L);
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Scalar>>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows) throw std::invalid_argument("ragged columns");
    for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Scalar> Matrix::column(int c) const {
  std::vector<Scalar> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != Scalar(r == c ? 1L : 0L)) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix p(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c)
        if (!o(k, c).is_zero()) p(r, c) += a * o(k, c);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

Matrix Matrix::scaled(const Scalar& x) const {
  Matrix s(*this);
  for (auto& e : s.a_) e *= x;
  return s;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (int c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const Matrix& m) {
  Matrix t(m);
  return static_cast<int>(rref(t).size());
}

Matrix kernel(const Matrix& m) {
  Matrix t(m);
  auto piv = rref(t);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : piv) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = Scalar(1L);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -t(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(basis, m.cols());
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Scalar det(1L);
  int n = m.rows();
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int r = col; r < n; ++r)
      if (!m(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) return Scalar(0L);
    if (sel != col) {
      for (int c = 0; c < n; ++c) std::swap(m(sel, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar f = m(r, col) * inv;
      for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  Matrix aug = hconcat(m, Matrix::identity(n));
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
    throw std::domain_error("matrix is singular");
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  Matrix aug = hconcat(a, b);
  auto piv = rref(aug);
  for (int p : piv)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (int c = 0; c < b.cols(); ++c) x(piv[i], c) = aug(static_cast<int>(i), a.cols() + c);
  return x;
}

std::vector<Scalar> apply(const Matrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

// --- sparse -----------------------------------------------------------------

SparseVector axpy(const SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (a.is_zero()) return y;
  SparseVector out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Scalar v = y[i].second + a * x[j].second;
      if (!v.is_zero()) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector sparse_scaled(const SparseVector& x, const Scalar& a) {
  if (a.is_zero()) return {};
  SparseVector out(x);
  for (auto& e : out) e.second *= a;
  return out;
}

namespace {
const Scalar* find_entry(const SparseVector& v, int col) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const std::pair<int, Scalar>& e, int c) { return e.first < c; });
  if (it == v.end() || it->first != col) return nullptr;
  return &it->second;
}
}  // namespace

SparseVector RowEchelon::reduce(const SparseVector& row) const {
  // Pivot rows are fully reduced, so the values of `row` at pivot columns are
  // exactly the multipliers to subtract.
  std::map<int, Scalar> acc;
  for (const auto& [c, v] : row) acc[c] = v;
  for (const auto& [c, v] : row) {
    auto it = pivots_.find(c);
    if (it == pivots_.end()) continue;
    Scalar f = v;
    for (const auto& [pc, pv] : it->second) {
      auto& slot = acc[pc];
      slot -= f * pv;
    }
  }
  SparseVector out;
  for (auto& [c, v] : acc)
    if (!v.is_zero()) out.emplace_back(c, std::move(v));
  return out;
}

bool RowEchelon::insert(SparseVector row) {
  SparseVector r = reduce(row);
  int lead = -1;
  for (const auto& [c, v] : r)
    if (c < limit_) {
      lead = c;
      break;
    }
  if (lead < 0) return false;
  Scalar inv = find_entry(r, lead)->inverse();
  r = sparse_scaled(r, inv);
  for (auto& [pc, prow] : pivots_) {
    const Scalar* e = find_entry(prow, lead);
    if (e == nullptr) continue;
    Scalar f = -*e;
    prow = axpy(prow, f, r);
  }
  pivots_.emplace(lead, std::move(r));
  return true;
}

bool RowEchelon::in_span(const SparseVector& row) const {
  for (const auto& [c, v] : reduce(row))
    if (c < limit_) return false;
  return true;
}

std::vector<SparseVector> RowEchelon::kernel() const {
  std::vector<SparseVector> out;
  for (int f = 0; f < limit_; ++f) {
    if (pivots_.count(f)) continue;
    std::map<int, Scalar> v;
    v[f] = Scalar(1L);
    for (const auto& [p, prow] : pivots_) {
      const Scalar* e = find_entry(prow, f);
      if (e != nullptr) v[p] = -*e;
    }
    SparseVector sv(v.begin(), v.end());
    out.push_back(std::move(sv));
  }
  return out;
}

CoordinateSolver::CoordinateSolver(const std::vector<SparseVector>& basis, int ncols)
    : ncols_(ncols), dim_(static_cast<int>(basis.size())),
      echelon_(ncols + static_cast<int>(basis.size()), ncols) {
  for (int i = 0; i < dim_; ++i) {
    SparseVector row = basis[i];
    row.emplace_back(ncols_ + i, Scalar(1L));
    if (!echelon_.insert(std::move(row)))
      throw std::invalid_argument("coordinate basis is linearly dependent");
  }
}

std::optional<std::vector<Scalar>> CoordinateSolver::coordinates(const SparseVector& v) const {
  SparseVector r = echelon_.reduce(v);
  std::vector<Scalar> coords(dim_);
  for (const auto& [c, x] : r) {
    if (c < ncols_) return std::nullopt;
    coords[c - ncols_] = -x;
  }
  return coords;
}

}  // namespace soergel
