#include "agree/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace agree {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays exact because result is C(n-k+i-1, i-1).
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    const std::uint64_t a = result / g;
    const std::uint64_t b = num / (static_cast<std::uint64_t>(i) / g);
    if (a != 0 && b > kMax / a) return kMax;
    result = a * b;
  }
  return result;
}

std::uint64_t subset_rank(std::span<const std::uint32_t> subset, int n) {
  // Count the subsets that come later: those agreeing before position i and
  // taking all of positions i.. from above subset[i].
  const int k = static_cast<int>(subset.size());
  std::uint64_t later = 0;
  for (int i = 0; i < k; ++i) {
    later += binomial(n - static_cast<int>(subset[i]), k - i);
  }
  return binomial(n, k) - 1 - later;
}

std::vector<std::uint32_t> subset_unrank(std::uint64_t rank, int n, int k) {
  std::vector<std::uint32_t> out;
  out.reserve(k);
  std::uint32_t v = 1;
  for (int i = 0; i < k; ++i) {
    for (;; ++v) {
      const std::uint64_t block = binomial(n - static_cast<int>(v), k - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(v++);
  }
  return out;
}

bool next_subset(std::span<std::uint32_t> subset, int n) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == static_cast<std::uint32_t>(n - k + i + 1)) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

std::vector<std::vector<std::uint32_t>> all_subsets(int n, int k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (k < 0 || k > n) return out;
  std::vector<std::uint32_t> cur(k);
  std::iota(cur.begin(), cur.end(), 1u);
  do {
    out.push_back(cur);
  } while (next_subset(cur, n));
  return out;
}

}  // namespace agree
