#pragma once

#include <string_view>
#include <vector>

#include "grassorbit/polynomial.hpp"

namespace grassorbit {

/// Accepts a coefficient list low degree first ("1,1,0,1") or the human
/// form ("x^3+x+1", "2x^2 + x - 1"). Coefficients are element codes; '-'
/// negates in the field.
Polynomial parse_polynomial(const Field& field, std::string_view text);

/// ';'-separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(const Field& field, std::string_view text);

}  // namespace grassorbit
