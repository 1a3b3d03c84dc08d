#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace grassorbit {

/// Strictly increasing k-tuple of 1-based column indices in [1, n].
class IndexTuple {
 public:
  IndexTuple() = default;
  explicit IndexTuple(std::vector<int> entries);
  IndexTuple(std::initializer_list<int> entries) : IndexTuple(std::vector<int>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Throws UsageError unless every entry lies in [1, n].
  void check_bound(int n) const;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend std::strong_ordering operator<=>(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const IndexTuple& t);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All k-subsets of [1, n] in lexicographic order.
std::vector<IndexTuple> lex_tuples(int n, int k);

/// Position of t in lex_tuples(n, t.size()).
std::size_t lex_rank(const IndexTuple& t, int n);

}  // namespace grassorbit
