#pragma once

#include "grassorbit/matrix.hpp"
#include "grassorbit/polynomial.hpp"

namespace grassorbit {

/// m x m companion matrix of a monic f of degree m: ones on the
/// superdiagonal, last row (-f0, ..., -f_{m-1}). Right multiplication of a
/// coefficient row vector by it is multiplication by x modulo f.
Matrix companion_matrix(const Polynomial& f);

}  // namespace grassorbit
