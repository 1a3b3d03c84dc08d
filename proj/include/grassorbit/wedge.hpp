#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "grassorbit/grassmann.hpp"
#include "grassorbit/orbit_code.hpp"

namespace grassorbit {

/// Element of the block module GF(q)[x]/p1 x ... x GF(q)[x]/pm attached to
/// a generator. Its global basis is x^0..x^{n1-1} of block 1, then block 2,
/// and so on; the coordinates of a vector in GF(q)^n are exactly the
/// coefficients in that basis.
class ModuleElement {
 public:
  ModuleElement(GeneratorSpec g, std::vector<ResidueElement> residues);

  static ModuleElement zero(const GeneratorSpec& g);
  static ModuleElement one(const GeneratorSpec& g);
  /// (x mod p1, ..., x mod pm): the element whose action is the generator.
  static ModuleElement x_element(const GeneratorSpec& g);
  /// Global basis element with 0-based index i.
  static ModuleElement basis(const GeneratorSpec& g, std::size_t i);

  const GeneratorSpec& generator() const { return g_; }
  const std::vector<ResidueElement>& residues() const { return residues_; }
  /// Coefficients over the global basis, length n.
  std::vector<Code> coefficients() const;

  ModuleElement operator+(const ModuleElement& o) const;
  /// Blockwise product modulo each block polynomial.
  ModuleElement operator*(const ModuleElement& o) const;
  ModuleElement pow(std::uint64_t e) const;

  bool is_zero() const;
  bool is_unit() const;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.residues_ == b.residues_ && a.g_ == b.g_;
  }

 private:
  void check_same(const ModuleElement& o) const;
  GeneratorSpec g_;
  std::vector<ResidueElement> residues_;
};

/// Splits v at the block boundaries; block j's slice becomes the residue
/// coefficients modulo p_j. Throws UsageError on a length mismatch.
ModuleElement phi_map(const std::vector<Code>& v, const GeneratorSpec& g);
std::vector<Code> phi_inverse(const ModuleElement& m);
ModuleElement module_mul(const ModuleElement& a, const ModuleElement& b);

/// phi(v P) == phi(v) * x_element.
bool commutation_check(const std::vector<Code>& v, const GeneratorSpec& g);

/// Element of the k-th exterior power of the block module, stored sparsely
/// over sorted global-basis wedges. Keys are strictly increasing 0-based
/// global indices; zero coefficients are never stored.
class WedgeElement {
 public:
  using Key = std::vector<int>;

  WedgeElement(GeneratorSpec g, int k);

  const GeneratorSpec& generator() const { return g_; }
  int k() const { return k_; }
  const std::map<Key, Code>& terms() const { return terms_; }
  Code coeff(const Key& key) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c times the basis wedge `key`, which must already be sorted.
  void accumulate(const Key& key, Code c);
  WedgeElement scaled(Code c) const;

  friend bool operator==(const WedgeElement& a, const WedgeElement& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_ && a.g_ == b.g_;
  }

 private:
  GeneratorSpec g_;
  int k_;
  std::map<Key, Code> terms_;
};

/// Multilinear expansion of rows[0] ^ ... ^ rows[k-1] over the global
/// basis: each sorted tuple collects the signed products of the rows'
/// coefficients over all orderings, repeated indices vanish.
WedgeElement wedge_expand(std::span<const ModuleElement> rows);

/// Wedge of the images of the canonical basis rows of u.
WedgeElement wedge_of(const GeneratorSpec& g, const Subspace& u);

/// (v1 ^ ... ^ vk) * m = (v1 m) ^ ... ^ (vk m), extended linearly. Throws
/// AlgebraError when m is not a unit.
WedgeElement star_multiply(const WedgeElement& w, const ModuleElement& m);

/// Coefficient of global tuple (i1, ..., ik) becomes the Plücker coordinate
/// of column tuple (i1+1, ..., ik+1). Throws AlgebraError for the zero wedge.
PlueckerPoint psi_translate(const WedgeElement& w);

/// Plücker coordinates of seed P^i for each codeword of the cyclic orbit,
/// computed by repeatedly applying * x_element to a single wedge.
std::vector<PlueckerPoint> plucker_orbit(const GeneratorSpec& g, const Subspace& seed);

/// Residue as a polynomial in x ("x+x^2"); several blocks print as a tuple
/// "(x, x+1)".
std::string format_module_element(const ModuleElement& m);
/// Factor form "(1 ∧ x+x^2)".
std::string format_wedge_factors(std::span<const ModuleElement> rows);
/// Expansion over basis wedges "(1∧x) + (1∧x^2)"; with several blocks the
/// basis elements carry the block number, "(1_1∧x_1) + (1_1∧1_2)".
std::string format_wedge(const WedgeElement& w);

}  // namespace grassorbit
