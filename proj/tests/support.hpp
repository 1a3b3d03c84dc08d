#pragma once

// Random generators and brute-force oracles shared by the test suites. The
// oracles deliberately avoid the library's elimination-based routines.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "grassorbit/grassmann.hpp"
#include "grassorbit/polynomial.hpp"

namespace grassorbit::testing {

using Rng = std::mt19937_64;

inline Code random_code(const Field& f, Rng& rng) {
  return std::uniform_int_distribution<Code>(0, f.order() - 1)(rng);
}

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_code(f, rng);
  }
  return m;
}

/// Leibniz formula: sum over permutations with sign.
inline Code leibniz_det(const Matrix& a) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Code total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Code term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, a(i, perm[i]));
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m = random_matrix(f, n, n, rng);
    if (leibniz_det(m) != 0) return m;
  }
}

/// Every vector of the row space.
inline std::set<std::vector<Code>> span_vectors(const Matrix& m) {
  const Field& f = m.field();
  std::set<std::vector<Code>> out;
  std::vector<Code> coeffs(m.rows(), 0);
  while (true) {
    std::vector<Code> v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) v[c] = f.add(v[c], f.mul(coeffs[r], m(r, c)));
    }
    out.insert(v);
    std::size_t i = 0;
    while (i < coeffs.size() && coeffs[i] == f.order() - 1) coeffs[i++] = 0;
    if (i == coeffs.size()) break;
    ++coeffs[i];
  }
  return out;
}

inline int log_q(std::size_t size, Code q) {
  int d = 0;
  while (size > 1) {
    size /= q;
    ++d;
  }
  return d;
}

inline Matrix random_full_rank(const Field& f, std::size_t k, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m = random_matrix(f, k, n, rng);
    if (static_cast<std::size_t>(log_q(span_vectors(m).size(), f.order())) == k) return m;
  }
}

/// d_S from explicit spans: dim U + dim V - 2 dim(U cap V).
inline int distance_by_spans(const Subspace& u, const Subspace& v) {
  const auto su = span_vectors(u.basis());
  const auto sv = span_vectors(v.basis());
  std::size_t common = 0;
  for (const auto& x : su) common += sv.count(x);
  const int q = static_cast<int>(u.field().order());
  return u.dim() + v.dim() - 2 * log_q(common, q);
}

/// Every k-dimensional subspace of GF(q)^n as its set of vectors, found by
/// spanning all k-tuples of vectors.
inline std::set<std::set<std::vector<Code>>> brute_force_grassmannian(const Field& f, int k,
                                                                      int n) {
  std::vector<std::vector<Code>> vectors;
  std::vector<Code> v(n, 0);
  while (true) {
    vectors.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == f.order() - 1) v[i++] = 0;
    if (i == v.size()) break;
    ++v[i];
  }
  std::set<std::set<std::vector<Code>>> out;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Code> data;
    for (auto i : idx) data.insert(data.end(), vectors[i].begin(), vectors[i].end());
    const auto span = span_vectors(Matrix(f, k, n, data));
    if (log_q(span.size(), f.order()) == k) out.insert(span);
    std::size_t i = 0;
    while (i < idx.size() && idx[i] == vectors.size() - 1) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  return out;
}

/// All monic polynomials of exactly degree d over f.
inline std::vector<Polynomial> monic_polynomials(const Field& f, std::size_t d) {
  std::vector<Polynomial> out;
  std::vector<Code> c(d, 0);
  while (true) {
    auto coeffs = c;
    coeffs.push_back(1);
    out.emplace_back(f, coeffs);
    std::size_t i = 0;
    while (i < c.size() && c[i] == f.order() - 1) c[i++] = 0;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

/// Trial division by every monic polynomial of degree 1..deg-1.
inline bool irreducible_by_trial_division(const Polynomial& p) {
  const std::size_t d = *p.degree();
  for (std::size_t e = 1; e < d; ++e) {
    for (const auto& q : monic_polynomials(p.field(), e)) {
      if ((p % q).is_zero()) return false;
    }
  }
  return true;
}

/// Schoolbook long division remainder, coefficient by coefficient.
inline std::vector<Code> long_division_remainder(const Field& f, std::vector<Code> a,
                                                 const std::vector<Code>& monic_b) {
  const std::size_t db = monic_b.size() - 1;
  while (a.size() > db) {
    const Code lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(lead, monic_b[j]));
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace grassorbit::testing
