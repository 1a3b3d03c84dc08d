#include "grassorbit/index_tuple.hpp"

#include <sstream>

#include "grassorbit/error.hpp"

namespace grassorbit {

IndexTuple::IndexTuple(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) throw UsageError("index tuple entries are 1-based");
    if (i > 0 && entries_[i] <= entries_[i - 1]) {
      throw UsageError("index tuple " + to_string(*this) + " is not strictly increasing");
    }
  }
}

void IndexTuple::check_bound(int n) const {
  if (!entries_.empty() && entries_.back() > n) {
    throw UsageError("index tuple " + to_string(*this) + " exceeds ambient dimension " +
                     std::to_string(n));
  }
}

std::string to_string(const IndexTuple& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<IndexTuple> lex_tuples(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw UsageError("no " + std::to_string(k) + "-subsets of [1," +
                                                std::to_string(n) + "]");
  std::vector<IndexTuple> out;
  out.reserve(binomial(n, k));
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::size_t lex_rank(const IndexTuple& t, int n) {
  t.check_bound(n);
  const int k = static_cast<int>(t.size());
  std::size_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    // Count tuples that agree before position i and have a smaller entry here.
    for (int v = prev + 1; v < t[i]; ++v) rank += binomial(n - v, k - i - 1);
    prev = t[i];
  }
  return rank;
}

}  // namespace grassorbit
