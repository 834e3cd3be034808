#pragma once

#include <cstdint>
#include <vector>

#include "agree/model.hpp"
#include "agree/solvers.hpp"

namespace agree::helly {

inline constexpr std::size_t kMaxListed = 100;

struct HellyScanReport {
  int k = 0;
  std::uint64_t subsets_checked = 0;
  std::uint64_t failing_count = 0;
  std::vector<std::vector<Vertex>> failing_subsets;  // first kMaxListed, lexicographic
  bool whole_exists = false;
};

// Decides every k-subset (lexicographic order) and the whole vertex set.
// Requires r <= k <= n; throws Error{BadArity} otherwise.
HellyScanReport scan_subsets(const MarkedHypergraph& h, int k,
                             solvers::Method method = solvers::Method::Structured,
                             int jobs = 1);

// --- marking spaces -------------------------------------------------------
//
// A marking of the (r, n)-clique is a sequence of digits, one per edge in
// lexicographic edge order, each in [0, choices_per_edge). Digit meaning:
//   TwoExtreme: index of the position pair (p < q) in lexicographic order.
//   MinMarked, OneExtreme: position p of the marked vertex.
//   MinMax: index of the ordered pair (p, q), p != q, in lexicographic order;
//           p is the min position, q the max position.
// Positions index the edge's ascending vertex list. An exhaustive index reads
// the digits as a mixed-radix number with edge 0 most significant.

std::uint64_t choices_per_edge(MarkVariant variant, int r);
// choices_per_edge ^ C(n, r), saturating at UINT64_MAX.
std::uint64_t marking_space_size(MarkVariant variant, int r, int n);

Mark decode_mark(MarkVariant variant, const std::vector<Vertex>& verts, std::uint64_t digit);
std::uint64_t encode_mark(MarkVariant variant, const std::vector<Vertex>& verts, const Mark& mark);

std::vector<std::uint32_t> digits_from_index(MarkVariant variant, int r, int n,
                                             std::uint64_t index);
MarkedHypergraph clique_from_digits(MarkVariant variant, int r, int n,
                                    const std::vector<std::uint32_t>& digits);
MarkedHypergraph clique_from_index(MarkVariant variant, int r, int n, std::uint64_t index);

// Digits of random sample s: digit i is scale(SplitMix64::at(seed, s * m + i),
// choices) where m = C(n, r).
std::vector<std::uint32_t> random_digits(MarkVariant variant, int r, int n,
                                         std::uint64_t seed, std::uint64_t sample);

// --- census ----------------------------------------------------------------

enum class CensusMode { Exhaustive, Random };

struct Counterexample {
  std::uint64_t index;  // marking index (exhaustive) or sample number (random)
  std::vector<std::uint32_t> digits;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CensusReport {
  MarkVariant variant = MarkVariant::TwoExtreme;
  int r = 0;
  int n = 0;
  int k = 0;
  CensusMode mode = CensusMode::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  std::uint64_t instances_total = 0;
  std::uint64_t instances_helly_k_pass = 0;
  std::uint64_t instances_whole_pass = 0;
  std::uint64_t counterexample_count = 0;
  std::vector<Counterexample> counterexamples;  // first kMaxListed by index

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

struct CensusOptions {
  std::uint64_t budget = 10'000'000;  // exhaustive instance cap
  solvers::Method method = solvers::Method::Structured;
  int jobs = 1;
};

// Every marking of the (r, n)-clique; a counterexample passes on all
// k-subsets but fails on the whole. Throws Error{BudgetExceeded}.
CensusReport census_exhaustive(MarkVariant variant, int r, int n, int k,
                               CensusOptions opts = {});

CensusReport census_random(MarkVariant variant, int r, int n, int k,
                           std::uint64_t samples, std::uint64_t seed,
                           CensusOptions opts = {});

// Per-instance predicates used by the census.
struct InstanceVerdict {
  bool whole = false;
  bool helly_k = false;
};

InstanceVerdict evaluate_instance(const MarkedHypergraph& h, int k,
                                  solvers::Method method = solvers::Method::Structured);

}  // namespace agree::helly
