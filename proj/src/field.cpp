#include "grassorbit/field.hpp"

#include <ostream>
#include <sstream>

#include "grassorbit/error.hpp"
#include "grassorbit/polynomial.hpp"

namespace grassorbit {

namespace {

constexpr Code kMaxPrime = (Code{1} << 31) - 1;
constexpr Code kMaxExtensionOrder = Code{1} << 16;

std::uint64_t checked_order(Code p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxExtensionOrder) {
      throw UsageError("field GF(" + std::to_string(p) + "^" + std::to_string(e) +
                       ") exceeds the supported extension order 2^16");
    }
  }
  return q;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct Field::Data {
  Code p = 0;
  unsigned e = 1;
  Code q = 0;
  std::vector<Code> modulus;
  // Extension fields only: exp_[i] = g^i for a generator g, log_[a] for a != 0.
  std::vector<Code> exp;
  std::vector<Code> log;
};

Field Field::prime(Code p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw UsageError("characteristic " + std::to_string(p) + " is not a supported prime");
  }
  auto d = std::make_shared<Data>();
  d->p = p;
  d->q = p;
  return Field(std::move(d));
}

Field Field::extension(Code p, unsigned e) {
  if (e == 0) throw UsageError("extension degree must be positive");
  if (e == 1) return prime(p);
  Field base = prime(p);
  const std::uint64_t q = checked_order(p, e);
  std::vector<Code> digits(e, 0);
  for (std::uint64_t lower = 0; lower < q; ++lower) {
    std::uint64_t v = lower;
    for (unsigned i = 0; i < e; ++i) {
      digits[i] = static_cast<Code>(v % p);
      v /= p;
    }
    std::vector<Code> coeffs = digits;
    coeffs.push_back(1);
    if (is_irreducible(Polynomial(base, coeffs))) return extension(p, std::move(coeffs));
  }
  throw AlgebraError("no irreducible polynomial found");  // unreachable for prime p
}

Field Field::extension(Code p, std::vector<Code> modulus) {
  Field base = prime(p);
  for (Code c : modulus) {
    if (c >= p) throw UsageError("modulus coefficient " + std::to_string(c) + " is not below p");
  }
  Polynomial f(base, modulus);
  if (!f.is_monic()) throw UsageError("field modulus must be monic");
  const std::size_t e = *f.degree();
  if (e == 0) throw UsageError("field modulus must have positive degree");
  if (e == 1) return base;
  if (!is_irreducible(f)) {
    throw AlgebraError("field modulus " + to_string(f) + " is reducible over GF(" +
                       std::to_string(p) + ")");
  }
  auto d = std::make_shared<Data>();
  d->p = p;
  d->e = static_cast<unsigned>(e);
  d->q = static_cast<Code>(checked_order(p, d->e));
  d->modulus = f.coeffs();

  // Multiply by polynomial arithmetic once to build log/exp tables.
  auto slow_mul = [&](Code a, Code b) {
    std::vector<Code> da(e), db(e);
    for (std::size_t i = 0; i < e; ++i) {
      da[i] = a % p;
      a /= p;
      db[i] = b % p;
      b /= p;
    }
    Polynomial r = (Polynomial(base, da) * Polynomial(base, db)) % f;
    Code out = 0;
    for (std::size_t i = e; i-- > 0;) out = out * p + r.coeff(i);
    return out;
  };
  const Code units = d->q - 1;
  for (Code g = 1; g < d->q; ++g) {
    std::vector<Code> exp(units);
    std::vector<Code> log(d->q, 0);
    Code x = 1;
    Code i = 0;
    bool generates = true;
    for (; i < units; ++i) {
      if (i > 0 && x == 1) {
        generates = false;
        break;
      }
      exp[i] = x;
      log[x] = i;
      x = slow_mul(x, g);
    }
    if (generates && x == 1) {
      d->exp = std::move(exp);
      d->log = std::move(log);
      break;
    }
  }
  return Field(std::move(d));
}

Field Field::of_order(Code q) {
  if (q < 2) throw UsageError("field order must be at least 2");
  for (Code p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned e = 0;
    Code r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1 || !is_prime(p)) break;
    return e == 1 ? prime(p) : extension(p, e);
  }
  throw UsageError("field order " + std::to_string(q) + " is not a prime power");
}

Code Field::characteristic() const { return d_->p; }
unsigned Field::degree() const { return d_->e; }
Code Field::order() const { return d_->q; }
const std::vector<Code>& Field::modulus() const { return d_->modulus; }

Code Field::add(Code a, Code b) const {
  const Code p = d_->p;
  if (d_->e == 1) {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Code>(s >= p ? s - p : s);
  }
  if (p == 2) return a ^ b;
  Code out = 0;
  Code scale = 1;
  for (unsigned i = 0; i < d_->e; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

Code Field::neg(Code a) const {
  const Code p = d_->p;
  if (d_->e == 1) return a == 0 ? 0 : p - a;
  if (p == 2) return a;
  Code out = 0;
  Code scale = 1;
  for (unsigned i = 0; i < d_->e; ++i) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Code Field::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  if (d_->e == 1) return static_cast<Code>(std::uint64_t{a} * b % d_->p);
  const Code units = d_->q - 1;
  return d_->exp[(d_->log[a] + d_->log[b]) % units];
}

Code Field::inv(Code a) const {
  if (a == 0) throw AlgebraError("division by zero in " + name());
  if (d_->e == 1) return pow(a, d_->p - 2);
  const Code units = d_->q - 1;
  return d_->exp[(units - d_->log[a]) % units];
}

Code Field::div(Code a, Code b) const { return mul(a, inv(b)); }

Code Field::pow(Code a, std::uint64_t e) const {
  Code result = 1;
  Code base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Code Field::from_int(long long v) const {
  const long long p = d_->p;
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<Code>(r);
}

std::vector<Code> Field::digits(Code a) const {
  std::vector<Code> out(d_->e);
  for (auto& c : out) {
    c = a % d_->p;
    a /= d_->p;
  }
  return out;
}

Code Field::from_digits(std::span<const Code> digits) const {
  if (digits.size() > d_->e) throw UsageError("too many digits for " + name());
  Code out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= d_->p) throw UsageError("digit out of range for " + name());
    out = out * d_->p + digits[i];
  }
  return out;
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << d_->q << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->p == b.d_->p && a.d_->e == b.d_->e && a.d_->modulus == b.d_->modulus;
}

FieldElement::FieldElement(Field field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_.contains(code_)) {
    throw UsageError("element code " + std::to_string(code_) + " is outside " + field_.name());
  }
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw UsageError("mismatched fields " + field_.name() + " and " + o.field_.name());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.add(code_, o.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.sub(code_, o.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.mul(code_, o.code_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.div(code_, o.code_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(code_)}; }

FieldElement FieldElement::inverse() const { return {field_, field_.inv(code_)}; }

std::uint64_t FieldElement::multiplicative_order() const {
  if (code_ == 0) throw AlgebraError("zero has no multiplicative order");
  Code x = code_;
  for (std::uint64_t n = 1; n < field_.order(); ++n) {
    if (x == 1) return n;
    x = field_.mul(x, code_);
  }
  throw AlgebraError("multiplicative order exceeds q - 1");  // unreachable in a field
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.code(); }

}  // namespace grassorbit
