#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace grassorbit {

/// Element encoding used throughout the library. For GF(p) the code is the
/// residue itself; for GF(p^e) it is the coefficient vector of the element
/// as a polynomial in the modulus root, read as base-p digits with the
/// constant term least significant.
using Code = std::uint32_t;

/// A finite field GF(p) or GF(p^e). Cheap to copy; all copies share the
/// same immutable arithmetic tables.
class Field {
 public:
  static Field prime(Code p);
  /// GF(p^e) with the smallest (by code) monic irreducible modulus of degree e.
  static Field extension(Code p, unsigned e);
  /// GF(p^e) with an explicit modulus given low degree first; must be monic
  /// and irreducible over GF(p).
  static Field extension(Code p, std::vector<Code> modulus);
  /// GF(q) for a prime power q, using the default modulus when q is not prime.
  static Field of_order(Code q);

  Code characteristic() const;
  unsigned degree() const;
  Code order() const;
  /// Monic modulus over GF(p), low degree first; empty for prime fields.
  const std::vector<Code>& modulus() const;

  bool contains(Code a) const { return a < order(); }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  /// Throws AlgebraError for a == 0.
  Code inv(Code a) const;
  Code div(Code a, Code b) const;
  Code pow(Code a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Code from_int(long long v) const;
  std::vector<Code> digits(Code a) const;
  Code from_digits(std::span<const Code> digits) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Data;
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A field element bound to its field; arithmetic between elements of
/// different fields throws UsageError.
class FieldElement {
 public:
  FieldElement(Field field, Code code);

  const Field& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  /// Least N >= 1 with a^N = 1; AlgebraError for zero.
  std::uint64_t multiplicative_order() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }

 private:
  void check_same(const FieldElement& o) const;
  Field field_;
  Code code_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

bool is_prime(std::uint64_t n);

}  // namespace grassorbit
