#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grassorbit/matrix.hpp"

namespace grassorbit {

/// A point of G_q(k, n), stored as its reduced row echelon basis. Two
/// Subspaces are equal iff they are the same subspace.
class Subspace {
 public:
  /// Throws AlgebraError unless rank(u) equals its row count.
  explicit Subspace(const Matrix& u);

  const Matrix& basis() const { return basis_; }
  const Field& field() const { return basis_.field(); }
  int dim() const { return static_cast<int>(basis_.rows()); }
  int ambient() const { return static_cast<int>(basis_.cols()); }

  /// rs(U A) for A in GL_n.
  Subspace operator*(const Matrix& a) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
};

inline Subspace subspace_from_matrix(const Matrix& u) { return Subspace(u); }

/// rs[I_k 0] in GF(q)^n.
Subspace standard_subspace(const Field& field, int k, int n);

/// dim U + dim V - 2 dim(U cap V), computed as 2 rank[U;V] - dim U - dim V.
int subspace_distance(const Subspace& u, const Subspace& v);

/// Projective point with coordinates indexed by the lexicographically
/// ordered k-subsets of [1, n]; the first nonzero coordinate is 1.
class PlueckerPoint {
 public:
  /// Normalizes `coords`; throws AlgebraError if all are zero.
  PlueckerPoint(Field field, int n, int k, std::vector<Code> coords);

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Code>& coords() const { return coords_; }
  Code at(const IndexTuple& t) const { return coords_[lex_rank(t, n_)]; }

  friend bool operator==(const PlueckerPoint& a, const PlueckerPoint& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.coords_ == b.coords_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  int n_;
  int k_;
  std::vector<Code> coords_;
};

/// "[c1:c2:...:cm]".
std::string to_string(const PlueckerPoint& p);

/// Raw minors det(U[T]) of a k x n matrix for every T in lex order.
std::vector<Code> all_minors(const Matrix& u);

/// All k x k minors of the canonical basis, normalized.
PlueckerPoint plucker_direct(const Subspace& u);

/// Every subspace of GF(q)^n of dimension k, once each, grouped by pivot
/// pattern in lex order. Throws UsageError when C(n,k) q^(k(n-k)) exceeds
/// `cap`.
std::vector<Subspace> enumerate_grassmannian(const Field& field, int k, int n,
                                             std::uint64_t cap = 1'000'000);

/// Lexicographic rule: a <= b iff a == b or a is smaller at the first
/// position where they differ.
bool tuple_leq(const IndexTuple& a, const IndexTuple& b);

/// Componentwise rule: a_l <= b_l for every l.
bool tuple_dominated(const IndexTuple& a, const IndexTuple& b);

/// Which order decides the coordinates constrained by a ball around U0.
enum class BallOrder { Componentwise, Lexicographic };

/// (t+1, ..., k, n-t+1, ..., n) with t capped at n-k.
IndexTuple ball_bound_tuple(int k, int n, int t);

/// Whether the coordinate vector (lex order, any scaling) vanishes at
/// every tuple that is not below ball_bound_tuple(k, n, t).
bool ball_constraints_hold(const std::vector<Code>& coords, int k, int n, int t,
                           BallOrder order = BallOrder::Componentwise);

/// V in B_2t(U0), decided from the Plücker coordinates of V.
bool ball_membership_origin(const Subspace& v, int t, BallOrder order = BallOrder::Componentwise);

/// V in B_2t(U): V's coordinates are moved to the U0 frame by the k-th
/// compound of A^{-1}, where U0 A = U, then tested against the U0 ball.
bool ball_membership(const Subspace& u, const Subspace& v, int t);

/// d_S(U, V) <= 2t.
bool ball_membership_by_distance(const Subspace& u, const Subspace& v, int t);

}  // namespace grassorbit
