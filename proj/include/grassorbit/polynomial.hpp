#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grassorbit/field.hpp"

namespace grassorbit {

/// Univariate polynomial over a finite field, coefficients low degree first
/// with trailing zeros trimmed. The zero polynomial has no degree.
class Polynomial {
 public:
  explicit Polynomial(Field field);
  Polynomial(Field field, std::vector<Code> coeffs);

  static Polynomial constant(Field field, Code c);
  static Polynomial monomial(Field field, std::size_t degree, Code c = 1);

  const Field& field() const { return field_; }
  const std::vector<Code>& coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  Code coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Code leading() const { return is_zero() ? 0 : coeffs_.back(); }
  Code eval(Code x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(Code c) const;
  /// Scales to leading coefficient 1; the zero polynomial stays zero.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
  }

 private:
  void check_same(const Polynomial& o) const;
  void trim();
  Field field_;
  std::vector<Code> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Throws AlgebraError when the divisor is zero.
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);

/// Rabin-style test: f is irreducible iff gcd(x^(q^i) - x, f) = 1 for all
/// i <= deg f / 2. Requires f monic of degree >= 1.
bool is_irreducible(const Polynomial& f);

/// True when x generates the full unit group of GF(q)[x]/f, i.e. f is
/// irreducible and ord(x) = q^deg - 1.
bool is_primitive(const Polynomial& f);

/// Human form, highest degree first: "x^4+x^2+1". Coefficients other than
/// 1 are printed as their codes ("2x^2"); zero prints as "0".
std::string to_string(const Polynomial& p);
/// Coefficient list, low degree first: "1,0,1,0,1".
std::string to_coeff_list(const Polynomial& p);

/// Element of GF(q)[x]/m(x) for a monic modulus m of degree >= 1.
class ResidueElement {
 public:
  ResidueElement(Polynomial modulus, const Polynomial& value);

  const Polynomial& modulus() const { return modulus_; }
  const Polynomial& value() const { return value_; }
  const Field& field() const { return modulus_.field(); }
  std::size_t modulus_degree() const { return *modulus_.degree(); }
  /// Exactly modulus_degree() coefficients, low degree first.
  std::vector<Code> coeffs() const;

  ResidueElement operator+(const ResidueElement& o) const;
  ResidueElement operator-(const ResidueElement& o) const;
  ResidueElement operator*(const ResidueElement& o) const;
  ResidueElement pow(std::uint64_t e) const;

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const;
  bool is_unit() const;
  /// Least N >= 1 with e^N = 1, found by iteration capped at q^m - 1.
  /// Throws AlgebraError for non-units.
  std::uint64_t multiplicative_order() const;

  friend bool operator==(const ResidueElement& a, const ResidueElement& b) {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }

 private:
  void check_same(const ResidueElement& o) const;
  Polynomial modulus_;
  Polynomial value_;
};

}  // namespace grassorbit
