#include "grassorbit/companion.hpp"

#include "grassorbit/error.hpp"

namespace grassorbit {

Matrix companion_matrix(const Polynomial& f) {
  if (!f.is_monic() || *f.degree() == 0) {
    throw UsageError("companion matrix needs a monic polynomial of positive degree, got " +
                     to_string(f));
  }
  const std::size_t m = *f.degree();
  const Field& field = f.field();
  Matrix p(field, m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) p(i, i + 1) = 1;
  for (std::size_t j = 0; j < m; ++j) p(m - 1, j) = field.neg(f.coeff(j));
  return p;
}

}  // namespace grassorbit
