#include "grassorbit/wedge.hpp"

#include <algorithm>
#include <sstream>

#include "grassorbit/error.hpp"

namespace grassorbit {

namespace {

struct Entry {
  int index;
  Code coeff;
};

std::vector<Entry> nonzero_entries(const ModuleElement& m) {
  std::vector<Entry> out;
  const auto c = m.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out.push_back({static_cast<int>(i), c[i]});
  }
  return out;
}

// Sorts `key` in place; returns true when the permutation used is odd.
bool sort_with_parity(std::vector<int>& key) {
  bool odd = false;
  for (std::size_t i = 1; i < key.size(); ++i) {
    for (std::size_t j = i; j > 0 && key[j - 1] > key[j]; --j) {
      std::swap(key[j - 1], key[j]);
      odd = !odd;
    }
  }
  return odd;
}

std::string basis_name(const GeneratorSpec& g, int index) {
  std::size_t block = 0;
  while (block + 1 < g.block_count() && g.block_offset(block + 1) <= static_cast<std::size_t>(index)) {
    ++block;
  }
  const std::size_t e = static_cast<std::size_t>(index) - g.block_offset(block);
  std::string name = e == 0 ? "1" : e == 1 ? "x" : "x^" + std::to_string(e);
  if (g.block_count() > 1) name += "_" + std::to_string(block + 1);
  return name;
}

}  // namespace

ModuleElement::ModuleElement(GeneratorSpec g, std::vector<ResidueElement> residues)
    : g_(std::move(g)), residues_(std::move(residues)) {
  if (residues_.size() != g_.block_count()) {
    throw UsageError("module element has " + std::to_string(residues_.size()) +
                     " residues for a generator with " + std::to_string(g_.block_count()) +
                     " blocks");
  }
  for (std::size_t j = 0; j < residues_.size(); ++j) {
    if (!(residues_[j].modulus() == g_.blocks()[j])) {
      throw UsageError("residue " + std::to_string(j + 1) + " is taken modulo the wrong polynomial");
    }
  }
}

ModuleElement ModuleElement::zero(const GeneratorSpec& g) {
  return phi_map(std::vector<Code>(g.n(), 0), g);
}

ModuleElement ModuleElement::one(const GeneratorSpec& g) {
  std::vector<ResidueElement> r;
  for (const auto& p : g.blocks()) r.emplace_back(p, Polynomial::constant(g.field(), 1));
  return {g, std::move(r)};
}

ModuleElement ModuleElement::x_element(const GeneratorSpec& g) {
  std::vector<ResidueElement> r;
  for (const auto& p : g.blocks()) r.emplace_back(p, Polynomial::monomial(g.field(), 1));
  return {g, std::move(r)};
}

ModuleElement ModuleElement::basis(const GeneratorSpec& g, std::size_t i) {
  if (i >= static_cast<std::size_t>(g.n())) throw UsageError("basis index out of range");
  std::vector<Code> v(g.n(), 0);
  v[i] = 1;
  return phi_map(v, g);
}

std::vector<Code> ModuleElement::coefficients() const {
  std::vector<Code> out;
  out.reserve(g_.n());
  for (const auto& r : residues_) {
    const auto c = r.coeffs();
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

void ModuleElement::check_same(const ModuleElement& o) const {
  if (!(g_ == o.g_)) throw UsageError("module elements belong to different generators");
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
  check_same(o);
  std::vector<ResidueElement> r;
  for (std::size_t j = 0; j < residues_.size(); ++j) r.push_back(residues_[j] + o.residues_[j]);
  return {g_, std::move(r)};
}

ModuleElement ModuleElement::operator*(const ModuleElement& o) const {
  check_same(o);
  std::vector<ResidueElement> r;
  for (std::size_t j = 0; j < residues_.size(); ++j) r.push_back(residues_[j] * o.residues_[j]);
  return {g_, std::move(r)};
}

ModuleElement ModuleElement::pow(std::uint64_t e) const {
  std::vector<ResidueElement> r;
  for (const auto& res : residues_) r.push_back(res.pow(e));
  return {g_, std::move(r)};
}

bool ModuleElement::is_zero() const {
  return std::all_of(residues_.begin(), residues_.end(),
                     [](const ResidueElement& r) { return r.is_zero(); });
}

bool ModuleElement::is_unit() const {
  return std::all_of(residues_.begin(), residues_.end(),
                     [](const ResidueElement& r) { return r.is_unit(); });
}

ModuleElement phi_map(const std::vector<Code>& v, const GeneratorSpec& g) {
  if (v.size() != static_cast<std::size_t>(g.n())) {
    throw UsageError("vector of length " + std::to_string(v.size()) +
                     " does not match generator dimension " + std::to_string(g.n()));
  }
  std::vector<ResidueElement> r;
  for (std::size_t j = 0; j < g.block_count(); ++j) {
    const auto first = v.begin() + static_cast<std::ptrdiff_t>(g.block_offset(j));
    const auto last = first + static_cast<std::ptrdiff_t>(g.block_degree(j));
    r.emplace_back(g.blocks()[j], Polynomial(g.field(), std::vector<Code>(first, last)));
  }
  return {g, std::move(r)};
}

std::vector<Code> phi_inverse(const ModuleElement& m) { return m.coefficients(); }

ModuleElement module_mul(const ModuleElement& a, const ModuleElement& b) { return a * b; }

bool commutation_check(const std::vector<Code>& v, const GeneratorSpec& g) {
  const auto moved = vec_mul(g.field(), v, generator_matrix(g));
  return phi_map(moved, g) == phi_map(v, g) * ModuleElement::x_element(g);
}

WedgeElement::WedgeElement(GeneratorSpec g, int k) : g_(std::move(g)), k_(k) {
  if (k_ < 1 || k_ > g_.n()) throw UsageError("wedge degree out of range");
}

Code WedgeElement::coeff(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

void WedgeElement::accumulate(const Key& key, Code c) {
  if (c == 0) return;
  const Field& f = g_.field();
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

WedgeElement WedgeElement::scaled(Code c) const {
  WedgeElement out(g_, k_);
  for (const auto& [key, v] : terms_) out.accumulate(key, g_.field().mul(v, c));
  return out;
}

WedgeElement wedge_expand(std::span<const ModuleElement> rows) {
  if (rows.empty()) throw UsageError("wedge of no elements");
  const GeneratorSpec& g = rows.front().generator();
  for (const auto& r : rows) {
    if (!(r.generator() == g)) throw UsageError("wedge factors belong to different generators");
  }
  const Field& f = g.field();
  const int k = static_cast<int>(rows.size());
  WedgeElement out(g, k);

  std::vector<std::vector<Entry>> entries;
  for (const auto& r : rows) entries.push_back(nonzero_entries(r));

  std::vector<int> chosen(k);
  // Depth-first over one basis index per factor; distinct indices only.
  auto expand = [&](auto&& self, int depth, Code product) -> void {
    if (depth == k) {
      std::vector<int> key = chosen;
      const bool odd = sort_with_parity(key);
      out.accumulate(key, odd ? f.neg(product) : product);
      return;
    }
    for (const auto& e : entries[depth]) {
      if (std::find(chosen.begin(), chosen.begin() + depth, e.index) != chosen.begin() + depth) {
        continue;
      }
      chosen[depth] = e.index;
      self(self, depth + 1, f.mul(product, e.coeff));
    }
  };
  expand(expand, 0, 1);
  return out;
}

WedgeElement wedge_of(const GeneratorSpec& g, const Subspace& u) {
  if (u.ambient() != g.n()) {
    throw UsageError("subspace has " + std::to_string(u.ambient()) +
                     " columns but the generator acts on dimension " + std::to_string(g.n()));
  }
  std::vector<ModuleElement> rows;
  for (std::size_t r = 0; r < u.basis().rows(); ++r) rows.push_back(phi_map(u.basis().row(r), g));
  return wedge_expand(rows);
}

WedgeElement star_multiply(const WedgeElement& w, const ModuleElement& m) {
  if (!(w.generator() == m.generator())) {
    throw UsageError("wedge and multiplier belong to different generators");
  }
  if (!m.is_unit()) throw AlgebraError("star multiplier " + format_module_element(m) + " is not a unit");
  const GeneratorSpec& g = w.generator();
  const Field& f = g.field();

  std::vector<ModuleElement> images;
  for (int i = 0; i < g.n(); ++i) images.push_back(ModuleElement::basis(g, i) * m);

  WedgeElement out(g, w.k());
  std::vector<ModuleElement> factors;
  for (const auto& [key, c] : w.terms()) {
    factors.clear();
    for (int i : key) factors.push_back(images[i]);
    const WedgeElement expanded = wedge_expand(factors);
    for (const auto& [k2, c2] : expanded.terms()) out.accumulate(k2, f.mul(c, c2));
  }
  return out;
}

PlueckerPoint psi_translate(const WedgeElement& w) {
  if (w.is_zero()) throw AlgebraError("the zero wedge is not the image of a subspace");
  const int n = w.generator().n();
  std::vector<Code> coords(binomial(n, w.k()), 0);
  for (const auto& [key, c] : w.terms()) {
    std::vector<int> cols(key.size());
    std::transform(key.begin(), key.end(), cols.begin(), [](int i) { return i + 1; });
    coords[lex_rank(IndexTuple(std::move(cols)), n)] = c;
  }
  return PlueckerPoint(w.generator().field(), n, w.k(), std::move(coords));
}

std::vector<PlueckerPoint> plucker_orbit(const GeneratorSpec& g, const Subspace& seed) {
  if (!(seed.field() == g.field())) throw UsageError("seed and generator over different fields");
  const ModuleElement x = ModuleElement::x_element(g);
  const std::uint64_t order = generator_order(g);
  WedgeElement w = wedge_of(g, seed);
  std::vector<PlueckerPoint> out{psi_translate(w)};
  for (std::uint64_t i = 1; i < order; ++i) {
    w = star_multiply(w, x);
    PlueckerPoint p = psi_translate(w);
    if (p == out.front()) break;
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// Residues read low degree first, "1+x+x^2".
std::string ascending(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Code c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace

std::string format_module_element(const ModuleElement& m) {
  if (m.residues().size() == 1) return ascending(m.residues().front().value());
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < m.residues().size(); ++j) {
    if (j) os << ", ";
    os << ascending(m.residues()[j].value());
  }
  os << ')';
  return os.str();
}

std::string format_wedge_factors(std::span<const ModuleElement> rows) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << " ∧ ";
    os << format_module_element(rows[i]);
  }
  os << ')';
  return os.str();
}

std::string format_wedge(const WedgeElement& w) {
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : w.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c;
    os << '(';
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) os << "∧";
      os << basis_name(w.generator(), key[i]);
    }
    os << ')';
  }
  return os.str();
}

}  // namespace grassorbit
