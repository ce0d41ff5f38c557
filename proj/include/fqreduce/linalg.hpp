#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fqreduce/poly.hpp"

namespace fqr {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n);
  /// Columns given as vectors of length rows.
  static Matrix from_columns(PrimeField field, const std::vector<std::vector<Felt>>& columns, std::size_t rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Felt& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * cols_ + c]; }
  Felt operator()(std::size_t r, std::size_t c) const noexcept { return a_[r * cols_ + c]; }

  std::vector<Felt> apply(const std::vector<Felt>& v) const;
  /// v^T A, i.e. A^T v.
  std::vector<Felt> apply_transposed(const std::vector<Felt>& v) const;
  bool is_zero() const noexcept;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<Felt> a_;
};

Felt determinant(Matrix m);

/// Characteristic polynomial det(lambda I - A) by similarity reduction to
/// upper Hessenberg form followed by the Hessenberg recurrence. O(n^3),
/// deterministic.
Poly charpoly(Matrix m);

/// g(A) by Paterson-Stockmeyer: about 2 sqrt(deg g) matrix products.
Matrix evaluate_at_matrix(const Poly& g, const Matrix& a);

/// Incremental Gaussian elimination that reports the first vector lying in
/// the span of the ones inserted before it, together with the coefficients
/// expressing it.
class DependencyFinder {
 public:
  DependencyFinder(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

  /// Returns c with v = sum_i c_i v_i over previously inserted v_i, or
  /// nullopt (and records v) if v is independent.
  std::optional<std::vector<Felt>> insert(const std::vector<Felt>& v);
  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  struct Row {
    std::vector<Felt> vec;    // reduced vector, pivot entry is 1
    std::vector<Felt> combo;  // expresses vec in terms of inserted vectors
    std::size_t pivot;
  };
  PrimeField field_;
  std::size_t dim_;
  std::size_t inserted_ = 0;
  std::vector<Row> basis_;
};

/// Minimal polynomial of the sequence v, A v, A^2 v, ... where apply(w) = A w.
/// Deterministic: the first linear dependency among Krylov vectors.
Poly krylov_minpoly(const std::function<std::vector<Felt>(const std::vector<Felt>&)>& apply,
                    const std::vector<Felt>& v, PrimeField field);

/// Minimal polynomial of a square matrix: lcm over basis vectors of their
/// Krylov minimal polynomials.
Poly matrix_minpoly(const Matrix& a);

}  // namespace fqr
