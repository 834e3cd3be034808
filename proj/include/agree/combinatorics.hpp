#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace agree {

// Binomial coefficient; saturates at UINT64_MAX instead of wrapping.
std::uint64_t binomial(int n, int k);

// Lexicographic rank of a strictly increasing k-subset of {1..n}.
std::uint64_t subset_rank(std::span<const std::uint32_t> subset, int n);

// Inverse of subset_rank.
std::vector<std::uint32_t> subset_unrank(std::uint64_t rank, int n, int k);

// Advances a strictly increasing k-subset of {1..n} to its lexicographic
// successor. Returns false (leaving the subset untouched) at the last one.
bool next_subset(std::span<std::uint32_t> subset, int n);

// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<std::uint32_t>> all_subsets(int n, int k);

}  // namespace agree
