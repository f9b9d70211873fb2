#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soergel/field.hpp"

namespace soergel {

using Scalar = FieldElement;

/// Dense row-major matrix over a tower field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix from_columns(const std::vector<std::vector<Scalar>>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<Scalar> column(int c) const;
  Matrix transpose() const;
  bool is_identity() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(Matrix& m);
int rank(const Matrix& m);
/// Columns form a basis of {x : m x = 0}.
Matrix kernel(const Matrix& m);
Scalar determinant(Matrix m);
/// Throws std::domain_error for singular input.
Matrix inverse(const Matrix& m);
/// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
Matrix hconcat(const Matrix& a, const Matrix& b);
std::vector<Scalar> apply(const Matrix& m, const std::vector<Scalar>& v);

/// Sparse vector: (column, value) pairs, strictly increasing columns, no zeros.
using SparseVector = std::vector<std::pair<int, Scalar>>;

SparseVector axpy(const SparseVector& y, const Scalar& a, const SparseVector& x);  // y + a x
SparseVector sparse_scaled(const SparseVector& x, const Scalar& a);

/// Incremental reduced row echelon form over sparse rows.
///
/// Rows are kept normalized (leading entry 1) and fully reduced against each
/// other. Columns at or beyond `pivot_limit` never become pivots; they can
/// carry bookkeeping tags through the elimination.
class RowEchelon {
 public:
  explicit RowEchelon(int ncols, int pivot_limit = -1)
      : ncols_(ncols), limit_(pivot_limit < 0 ? ncols : pivot_limit) {}

  /// Returns true when the row was independent of the rows already inserted.
  bool insert(SparseVector row);
  SparseVector reduce(const SparseVector& row) const;
  bool in_span(const SparseVector& row) const;
  int rank() const { return static_cast<int>(pivots_.size()); }
  int ncols() const { return ncols_; }
  /// Basis of the right null space, restricted to columns below the pivot limit.
  std::vector<SparseVector> kernel() const;
  const std::map<int, SparseVector>& pivots() const { return pivots_; }

 private:
  int ncols_;
  int limit_;
  std::map<int, SparseVector> pivots_;
};

/// Coordinates of vectors in a fixed (linearly independent) family.
class CoordinateSolver {
 public:
  CoordinateSolver(const std::vector<SparseVector>& basis, int ncols);
  std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;
  int dimension() const { return dim_; }

 private:
  int ncols_, dim_;
  RowEchelon echelon_;
};

}  // namespace soergel
