#include "grassorbit/orbit_code.hpp"

#include <algorithm>
#include <numeric>

#include "grassorbit/companion.hpp"
#include "grassorbit/error.hpp"

namespace grassorbit {

GeneratorSpec::GeneratorSpec(Field field, std::vector<Polynomial> blocks)
    : field_(std::move(field)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw UsageError("generator needs at least one block");
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    const Polynomial& p = blocks_[j];
    if (!(p.field() == field_)) throw UsageError("generator block over a different field");
    if (!p.is_monic() || *p.degree() == 0) {
      throw UsageError("generator block " + std::to_string(j + 1) + " (" + to_string(p) +
                       ") must be monic of positive degree");
    }
    if (p.coeff(0) == 0) {
      throw AlgebraError("generator block " + std::to_string(j + 1) + " (" + to_string(p) +
                         ") has zero constant term; the generator is singular");
    }
    offsets_.push_back(static_cast<std::size_t>(n_));
    n_ += static_cast<int>(*p.degree());
  }
}

std::string to_string(ReducibilityClass c) {
  switch (c) {
    case ReducibilityClass::Irreducible:
      return "Irreducible";
    case ReducibilityClass::CompletelyReducible:
      return "CompletelyReducible";
    case ReducibilityClass::NonCompletelyReducible:
      return "NonCompletelyReducible";
  }
  return "?";
}

ReducibilityClass classify(const GeneratorSpec& g) {
  const bool all_irreducible = std::all_of(g.blocks().begin(), g.blocks().end(),
                                           [](const Polynomial& p) { return is_irreducible(p); });
  if (!all_irreducible) return ReducibilityClass::NonCompletelyReducible;
  return g.block_count() == 1 ? ReducibilityClass::Irreducible
                              : ReducibilityClass::CompletelyReducible;
}

Matrix generator_matrix(const GeneratorSpec& g) {
  Matrix p(g.field(), g.n(), g.n());
  for (std::size_t j = 0; j < g.block_count(); ++j) {
    const Matrix c = companion_matrix(g.blocks()[j]);
    const std::size_t off = g.block_offset(j);
    for (std::size_t r = 0; r < c.rows(); ++r) {
      for (std::size_t s = 0; s < c.cols(); ++s) p(off + r, off + s) = c(r, s);
    }
  }
  return p;
}

std::uint64_t generator_order(const GeneratorSpec& g) {
  std::uint64_t order = 1;
  for (const auto& p : g.blocks()) {
    const ResidueElement x(p, Polynomial::monomial(g.field(), 1));
    order = std::lcm(order, x.multiplicative_order());
  }
  return order;
}

OrbitCode orbit(const GeneratorSpec& g, const Subspace& seed) {
  if (seed.ambient() != g.n()) {
    throw UsageError("seed has " + std::to_string(seed.ambient()) +
                     " columns but the generator acts on dimension " + std::to_string(g.n()));
  }
  if (!(seed.field() == g.field())) throw UsageError("seed and generator over different fields");
  const Matrix p = generator_matrix(g);
  const std::uint64_t order = generator_order(g);
  std::vector<Subspace> words{seed};
  Subspace cur = seed * p;
  for (std::uint64_t i = 1; i < order && !(cur == seed); ++i) {
    words.push_back(cur);
    cur = cur * p;
  }
  std::optional<int> dmin;
  for (std::size_t i = 1; i < words.size(); ++i) {
    const int d = subspace_distance(seed, words[i]);
    if (!dmin || d < *dmin) dmin = d;
  }
  const std::size_t len = words.size();
  return OrbitCode{g, seed, std::move(words), len, dmin};
}

std::optional<int> pairwise_min_distance(const std::vector<Subspace>& codewords) {
  std::optional<int> dmin;
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t j = i + 1; j < codewords.size(); ++j) {
      const int d = subspace_distance(codewords[i], codewords[j]);
      if (!dmin || d < *dmin) dmin = d;
    }
  }
  return dmin;
}

}  // namespace grassorbit
