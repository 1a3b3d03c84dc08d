#include "grassorbit/grassmann.hpp"

#include <algorithm>
#include <sstream>

#include "grassorbit/error.hpp"

namespace grassorbit {

namespace {

Matrix canonical_basis(const Matrix& u) {
  Rref r = rref(u);
  if (r.rank != u.rows()) {
    throw AlgebraError("basis matrix " + format_matrix(u) + " has rank " + std::to_string(r.rank) +
                       " but " + std::to_string(u.rows()) + " rows");
  }
  return std::move(r.reduced);
}

void check_radius(int t, int k) {
  if (t < 0 || t > k) {
    throw UsageError("ball radius parameter t=" + std::to_string(t) + " outside [0, " +
                     std::to_string(k) + "]");
  }
}

}  // namespace

Subspace::Subspace(const Matrix& u) : basis_(canonical_basis(u)) {}

Subspace Subspace::operator*(const Matrix& a) const { return Subspace(basis_ * a); }

Subspace standard_subspace(const Field& field, int k, int n) {
  if (k < 1 || k > n) throw UsageError("no standard subspace of dimension " + std::to_string(k));
  Matrix u(field, k, n);
  for (int i = 0; i < k; ++i) u(i, i) = 1;
  return Subspace(u);
}

int subspace_distance(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) {
    throw UsageError("subspaces live in different ambient spaces (n=" +
                     std::to_string(u.ambient()) + " vs n=" + std::to_string(v.ambient()) + ")");
  }
  const int joint = static_cast<int>(rank(vstack(u.basis(), v.basis())));
  return 2 * joint - u.dim() - v.dim();
}

PlueckerPoint::PlueckerPoint(Field field, int n, int k, std::vector<Code> coords)
    : field_(std::move(field)), n_(n), k_(k), coords_(std::move(coords)) {
  if (coords_.size() != binomial(n, k)) {
    throw UsageError("Plücker vector of length " + std::to_string(coords_.size()) +
                     " does not match C(" + std::to_string(n) + "," + std::to_string(k) + ")");
  }
  auto first = std::find_if(coords_.begin(), coords_.end(), [](Code c) { return c != 0; });
  if (first == coords_.end()) throw AlgebraError("all Plücker coordinates vanish");
  const Code s = field_.inv(*first);
  for (auto& c : coords_) c = field_.mul(c, s);
}

std::string to_string(const PlueckerPoint& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) os << ':';
    os << p.coords()[i];
  }
  os << ']';
  return os.str();
}

std::vector<Code> all_minors(const Matrix& u) {
  const int n = static_cast<int>(u.cols());
  const int k = static_cast<int>(u.rows());
  if (k > n) throw UsageError("more rows than columns");
  std::vector<Code> out;
  for (const auto& t : lex_tuples(n, k)) out.push_back(minor(u, t));
  return out;
}

PlueckerPoint plucker_direct(const Subspace& u) {
  return PlueckerPoint(u.field(), u.ambient(), u.dim(), all_minors(u.basis()));
}

std::vector<Subspace> enumerate_grassmannian(const Field& field, int k, int n, std::uint64_t cap) {
  if (k < 1 || k > n) {
    throw UsageError("no Grassmannian G(" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  // Upper bound C(n,k) q^(k(n-k)), computed without overflow.
  double bound = static_cast<double>(binomial(n, k));
  for (int i = 0; i < k * (n - k); ++i) bound *= field.order();
  if (bound > static_cast<double>(cap)) {
    throw UsageError("Grassmannian G_" + std::to_string(field.order()) + "(" + std::to_string(k) +
                     "," + std::to_string(n) + ") is too large to enumerate");
  }
  std::vector<Subspace> out;
  for (const auto& pivots : lex_tuples(n, k)) {
    // Free positions: right of the row's pivot, outside every pivot column.
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < k; ++r) {
      for (int c = pivots[r]; c < n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c + 1) == pivots.end()) free.emplace_back(r, c);
      }
    }
    std::vector<Code> digits(free.size(), 0);
    while (true) {
      Matrix u(field, k, n);
      for (int r = 0; r < k; ++r) u(r, pivots[r] - 1) = 1;
      for (std::size_t i = 0; i < free.size(); ++i) u(free[i].first, free[i].second) = digits[i];
      out.emplace_back(u);
      std::size_t i = 0;
      while (i < digits.size() && digits[i] == field.order() - 1) digits[i++] = 0;
      if (i == digits.size()) break;
      ++digits[i];
    }
  }
  return out;
}

bool tuple_leq(const IndexTuple& a, const IndexTuple& b) {
  if (a.size() != b.size()) throw UsageError("comparing index tuples of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return true;
}

bool tuple_dominated(const IndexTuple& a, const IndexTuple& b) {
  if (a.size() != b.size()) throw UsageError("comparing index tuples of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

IndexTuple ball_bound_tuple(int k, int n, int t) {
  check_radius(t, k);
  if (k > n) throw UsageError("subspace dimension exceeds ambient dimension");
  // Distances never exceed 2(n-k); past that radius the ball is everything.
  t = std::min(t, n - k);
  std::vector<int> entries;
  for (int i = t + 1; i <= k; ++i) entries.push_back(i);
  for (int i = n - t + 1; i <= n; ++i) entries.push_back(i);
  return IndexTuple(std::move(entries));
}

bool ball_constraints_hold(const std::vector<Code>& coords, int k, int n, int t, BallOrder order) {
  const IndexTuple bound = ball_bound_tuple(k, n, t);
  const auto tuples = lex_tuples(n, k);
  if (coords.size() != tuples.size()) throw UsageError("coordinate vector has the wrong length");
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const bool below = order == BallOrder::Componentwise ? tuple_dominated(tuples[i], bound)
                                                         : tuple_leq(tuples[i], bound);
    if (!below && coords[i] != 0) return false;
  }
  return true;
}

bool ball_membership_origin(const Subspace& v, int t, BallOrder order) {
  check_radius(t, v.dim());
  return ball_constraints_hold(all_minors(v.basis()), v.dim(), v.ambient(), t, order);
}

bool ball_membership(const Subspace& u, const Subspace& v, int t) {
  if (u.ambient() != v.ambient() || u.dim() != v.dim()) {
    throw UsageError("ball center and query must lie in the same Grassmannian");
  }
  if (!(u.field() == v.field())) throw UsageError("subspaces over different fields");
  check_radius(t, u.dim());
  const Matrix a = complete_to_invertible(u.basis());
  const Matrix transport = compound_matrix(inverse(a), u.dim());
  const auto minors = all_minors(v.basis());
  const auto moved = vec_mul(u.field(), minors, transport);
  return ball_constraints_hold(moved, u.dim(), u.ambient(), t);
}

bool ball_membership_by_distance(const Subspace& u, const Subspace& v, int t) {
  check_radius(t, u.dim());
  return subspace_distance(u, v) <= 2 * t;
}

}  // namespace grassorbit
