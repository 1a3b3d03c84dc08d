#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grassorbit/grassmann.hpp"
#include "grassorbit/polynomial.hpp"

namespace grassorbit {

/// Generator of a cyclic group in rational canonical form: the block
/// diagonal matrix of companion matrices of `blocks`, in the given order.
class GeneratorSpec {
 public:
  /// Throws UsageError for an empty, non-monic or constant block and
  /// AlgebraError for a block with p(0) = 0 (singular generator).
  GeneratorSpec(Field field, std::vector<Polynomial> blocks);

  const Field& field() const { return field_; }
  const std::vector<Polynomial>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_degree(std::size_t j) const { return *blocks_[j].degree(); }
  /// Global index of the first coordinate of block j.
  std::size_t block_offset(std::size_t j) const { return offsets_[j]; }
  int n() const { return n_; }

  friend bool operator==(const GeneratorSpec& a, const GeneratorSpec& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  Field field_;
  std::vector<Polynomial> blocks_;
  std::vector<std::size_t> offsets_;
  int n_ = 0;
};

enum class ReducibilityClass { Irreducible, CompletelyReducible, NonCompletelyReducible };

std::string to_string(ReducibilityClass c);

ReducibilityClass classify(const GeneratorSpec& g);
Matrix generator_matrix(const GeneratorSpec& g);
/// lcm over blocks of the order of x modulo the block polynomial.
std::uint64_t generator_order(const GeneratorSpec& g);

struct OrbitCode {
  GeneratorSpec generator;
  Subspace seed;
  /// seed P^i for i = 0, 1, ... up to the first repeat.
  std::vector<Subspace> codewords;
  std::size_t orbit_length;
  /// Absent for a single-codeword orbit.
  std::optional<int> min_distance;
};

OrbitCode orbit(const GeneratorSpec& g, const Subspace& seed);

/// Minimum distance over all unordered pairs of distinct codewords.
std::optional<int> pairwise_min_distance(const std::vector<Subspace>& codewords);

}  // namespace grassorbit
