#include "grassorbit/matrix.hpp"

#include <charconv>
#include <sstream>

#include "grassorbit/error.hpp"

namespace grassorbit {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : Matrix(std::move(field), rows, cols, std::vector<Code>(rows * cols, 0)) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw UsageError("matrix dimensions must be positive");
  if (data_.size() != rows_ * cols_) throw UsageError("matrix entry count does not match shape");
  for (Code c : data_) {
    if (!field_.contains(c)) {
      throw UsageError("matrix entry " + std::to_string(c) + " is outside " + field_.name());
    }
  }
}

Matrix::Matrix(Field field, std::initializer_list<std::initializer_list<Code>> rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw UsageError("matrix dimensions must be positive");
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UsageError("ragged matrix rows");
    for (Code c : r) {
      if (!field_.contains(c)) {
        throw UsageError("matrix entry " + std::to_string(c) + " is outside " + field_.name());
      }
      data_.push_back(c);
    }
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Code> Matrix::row(std::size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw UsageError("row index out of range");
    for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(rows[i], c);
  }
  return out;
}

Matrix Matrix::select_cols(const IndexTuple& cols) const {
  cols.check_bound(static_cast<int>(cols_));
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j] - 1);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!(field_ == o.field_)) throw UsageError("matrices over different fields");
  if (cols_ != o.rows_) {
    throw UsageError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " by " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Code a = (*this)(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        out(i, j) = field_.add(out(i, j), field_.mul(a, o(l, j)));
      }
    }
  }
  return out;
}

std::vector<Code> vec_mul(const Field& field, const std::vector<Code>& v, const Matrix& a) {
  if (v.size() != a.rows()) throw UsageError("vector length does not match matrix rows");
  std::vector<Code> out(a.cols(), 0);
  for (std::size_t l = 0; l < v.size(); ++l) {
    if (v[l] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = field.add(out[j], field.mul(v[l], a(l, j)));
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw UsageError("cannot stack matrices of different widths");
  if (!(top.field() == bottom.field())) throw UsageError("matrices over different fields");
  std::vector<Code> data = top.entries();
  data.insert(data.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(data));
}

Matrix pow(const Matrix& a, std::uint64_t e) {
  if (!a.is_square()) throw UsageError("matrix power needs a square matrix");
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Rref rref(const Matrix& a) {
  const Field& f = a.field();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const Code s = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Code factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

Code det(const Matrix& a) {
  if (!a.is_square()) {
    throw UsageError("determinant of a non-square " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " matrix");
  }
  const Field& f = a.field();
  Matrix m = a;
  const std::size_t n = m.rows();
  Code d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, m(c, c));
    const Code s = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Code factor = f.mul(m(i, c), s);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return d;
}

Code minor(const Matrix& a, const IndexTuple& cols) {
  if (cols.size() != a.rows()) {
    throw UsageError("minor needs " + std::to_string(a.rows()) + " columns, got " +
                     to_string(cols));
  }
  return det(a.select_cols(cols));
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw UsageError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw AlgebraError("matrix is singular");
  Matrix out(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  }
  return out;
}

Matrix complete_to_invertible(const Matrix& u) {
  const std::size_t k = u.rows();
  const std::size_t n = u.cols();
  Rref r = rref(u);
  if (r.rank != k) {
    throw AlgebraError("basis of rank " + std::to_string(r.rank) + " has " + std::to_string(k) +
                       " rows");
  }
  Matrix a(u.field(), n, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = u(i, j);
  }
  std::size_t next = k;
  std::size_t pi = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (pi < r.pivots.size() && r.pivots[pi] == c) {
      ++pi;
      continue;
    }
    a(next++, c) = 1;
  }
  return a;
}

Matrix compound_matrix(const Matrix& a, int k) {
  if (!a.is_square()) throw UsageError("compound matrix needs a square matrix");
  const int n = static_cast<int>(a.rows());
  if (k < 1 || k > n) {
    throw UsageError("compound order " + std::to_string(k) + " outside [1, " + std::to_string(n) +
                     "]");
  }
  const auto tuples = lex_tuples(n, k);
  const std::size_t m = tuples.size();
  Matrix out(a.field(), m, m);
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<std::size_t> rows;
    for (int i : tuples[s]) rows.push_back(static_cast<std::size_t>(i - 1));
    const Matrix sub = a.select_rows(rows);
    for (std::size_t t = 0; t < m; ++t) out(s, t) = minor(sub, tuples[t]);
  }
  return out;
}

namespace {

Code parse_code(const Field& field, std::string_view tok, std::string_view text) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  Code v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw UsageError("bad matrix entry '" + std::string(tok) + "' in '" + std::string(text) + "'");
  }
  if (!field.contains(v)) {
    throw UsageError("matrix entry " + std::string(tok) + " is outside " + field.name());
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Matrix parse_matrix(const Field& field, std::string_view text) {
  std::vector<Code> data;
  std::size_t cols = 0;
  const auto rows = split(text, ';');
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string_view row = rows[r];
    std::vector<Code> entries;
    const bool bitstring = row.find(',') == std::string_view::npos && row.size() > 1 &&
                           field.order() == 2 &&
                           row.find_first_not_of("01") == std::string_view::npos;
    if (bitstring) {
      for (char ch : row) entries.push_back(ch == '1' ? 1 : 0);
    } else {
      for (auto tok : split(row, ',')) entries.push_back(parse_code(field, tok, text));
    }
    if (r == 0) cols = entries.size();
    if (entries.size() != cols) {
      throw UsageError("row " + std::to_string(r + 1) + " of '" + std::string(text) + "' has " +
                       std::to_string(entries.size()) + " entries, expected " +
                       std::to_string(cols));
    }
    data.insert(data.end(), entries.begin(), entries.end());
  }
  return Matrix(field, rows.size(), cols, std::move(data));
}

std::string format_matrix(const Matrix& a) {
  std::ostringstream os;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r) os << ';';
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) os << ',';
      os << a(r, c);
    }
  }
  return os.str();
}

}  // namespace grassorbit
