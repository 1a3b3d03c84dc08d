#include "grassorbit/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "grassorbit/error.hpp"

namespace grassorbit {

Polynomial::Polynomial(Field field) : field_(std::move(field)) {}

Polynomial::Polynomial(Field field, std::vector<Code> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Code c : coeffs_) {
    if (!field_.contains(c)) {
      throw UsageError("coefficient " + std::to_string(c) + " is outside " + field_.name());
    }
  }
  trim();
}

Polynomial Polynomial::constant(Field field, Code c) { return Polynomial(std::move(field), {c}); }

Polynomial Polynomial::monomial(Field field, std::size_t degree, Code c) {
  std::vector<Code> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Polynomial(std::move(field), std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::check_same(const Polynomial& o) const {
  if (!(field_ == o.field_)) {
    throw UsageError("polynomials over different fields " + field_.name() + " and " +
                     o.field_.name());
  }
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Code Polynomial::eval(Code x) const {
  Code acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(o);
  std::vector<Code> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), o.coeff(i));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  std::vector<Code> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                 [this](Code c) { return field_.neg(c); });
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Polynomial(field_);
  std::vector<Code> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::scaled(Code c) const {
  std::vector<Code> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                 [&](Code a) { return field_.mul(a, c); });
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) throw UsageError("polynomials over different fields");
  if (b.is_zero()) throw AlgebraError("polynomial division by zero");
  const Field& f = a.field();
  std::vector<Code> rem = a.coeffs();
  const std::size_t db = *b.degree();
  if (rem.size() <= db) return {Polynomial(f), a};
  std::vector<Code> quot(rem.size() - db, 0);
  const Code lead_inv = f.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const Code c = f.mul(rem[i], lead_inv);
    quot[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs()[j]));
    }
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field(), 1) % modulus;
  Polynomial b = base % modulus;
  while (e > 0) {
    if (e & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Polynomial& f) {
  if (!f.is_monic() || *f.degree() == 0) {
    throw UsageError("irreducibility test needs a monic polynomial of positive degree, got " +
                     to_string(f));
  }
  const std::size_t m = *f.degree();
  const Field& field = f.field();
  const Polynomial x = Polynomial::monomial(field, 1);
  Polynomial h = x % f;
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = pow_mod(h, field.order(), f);
    if (*gcd(h - x, f).degree() != 0) return false;
  }
  return true;
}

bool is_primitive(const Polynomial& f) {
  if (!is_irreducible(f)) return false;
  if (f.coeff(0) == 0) return false;
  std::uint64_t units = 1;
  for (std::size_t i = 0; i < *f.degree(); ++i) units *= f.field().order();
  units -= 1;
  return ResidueElement(f, Polynomial::monomial(f.field(), 1)).multiplicative_order() == units;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Code c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string to_coeff_list(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ',';
    os << p.coeffs()[i];
  }
  return os.str();
}

ResidueElement::ResidueElement(Polynomial modulus, const Polynomial& value)
    : modulus_(std::move(modulus)), value_(modulus_.field()) {
  if (!modulus_.is_monic() || *modulus_.degree() == 0) {
    throw UsageError("residue modulus must be monic of positive degree, got " +
                     to_string(modulus_));
  }
  value_ = value % modulus_;
}

std::vector<Code> ResidueElement::coeffs() const {
  std::vector<Code> out(modulus_degree(), 0);
  std::copy(value_.coeffs().begin(), value_.coeffs().end(), out.begin());
  return out;
}

void ResidueElement::check_same(const ResidueElement& o) const {
  if (!(modulus_ == o.modulus_)) {
    throw UsageError("residues modulo different polynomials " + to_string(modulus_) + " and " +
                     to_string(o.modulus_));
  }
}

ResidueElement ResidueElement::operator+(const ResidueElement& o) const {
  check_same(o);
  return {modulus_, value_ + o.value_};
}

ResidueElement ResidueElement::operator-(const ResidueElement& o) const {
  check_same(o);
  return {modulus_, value_ - o.value_};
}

ResidueElement ResidueElement::operator*(const ResidueElement& o) const {
  check_same(o);
  return {modulus_, value_ * o.value_};
}

ResidueElement ResidueElement::pow(std::uint64_t e) const {
  return {modulus_, pow_mod(value_, e, modulus_)};
}

bool ResidueElement::is_one() const { return value_.coeffs().size() == 1 && value_.coeff(0) == 1; }

bool ResidueElement::is_unit() const { return *gcd(value_, modulus_).degree() == 0; }

std::uint64_t ResidueElement::multiplicative_order() const {
  if (!is_unit()) {
    throw AlgebraError(to_string(value_) + " is not a unit modulo " + to_string(modulus_));
  }
  std::uint64_t cap = 1;
  for (std::size_t i = 0; i < modulus_degree(); ++i) cap *= field().order();
  cap -= 1;
  ResidueElement x = *this;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (x.is_one()) return n;
    x = x * *this;
  }
  throw AlgebraError("multiplicative order exceeds q^m - 1");
}

}  // namespace grassorbit
