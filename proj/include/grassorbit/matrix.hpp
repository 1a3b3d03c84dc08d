#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "grassorbit/field.hpp"
#include "grassorbit/index_tuple.hpp"

namespace grassorbit {

/// Dense r x c matrix over a finite field, row-major element codes.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Code> entries);
  Matrix(Field field, std::initializer_list<std::initializer_list<Code>> rows);

  static Matrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Code operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Code& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const std::vector<Code>& entries() const { return data_; }

  std::vector<Code> row(std::size_t r) const;
  /// Rows listed in `rows` (0-based), in that order.
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  /// Columns of a 1-based index tuple, i.e. A[j1,...,jk].
  Matrix select_cols(const IndexTuple& cols) const;

  Matrix operator*(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> data_;
};

/// Row vector times matrix.
std::vector<Code> vec_mul(const Field& field, const std::vector<Code>& v, const Matrix& a);

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix pow(const Matrix& a, std::uint64_t e);

struct Rref {
  Matrix reduced;
  std::size_t rank;
  /// 0-based pivot column of each nonzero row.
  std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Throws UsageError for non-square input.
Code det(const Matrix& a);
/// det(A[cols]) for a matrix with |cols| rows.
Code minor(const Matrix& a, const IndexTuple& cols);
/// Throws AlgebraError when singular.
Matrix inverse(const Matrix& a);

/// n x n invertible matrix whose first k rows are U; the remaining rows are
/// the unit vectors at the non-pivot columns of rref(U), ascending.
Matrix complete_to_invertible(const Matrix& u);

/// C(n,k) x C(n,k) matrix with entry (S, T) = det(A_S[T]), tuples in
/// lexicographic order. phi(U A) = phi(U) * compound_matrix(A, k).
Matrix compound_matrix(const Matrix& a, int k);

/// Parses "1,0,0,0;0,1,1,0" (entries are element codes) or, over GF(2),
/// compact bitstring rows "1000;0110".
Matrix parse_matrix(const Field& field, std::string_view text);
std::string format_matrix(const Matrix& a);

}  // namespace grassorbit
