#include "agree/helly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "agree/combinatorics.hpp"
#include "agree/error.hpp"
#include "agree/rng.hpp"

namespace agree::helly {

namespace {

void require_k(int r, int n, int k) {
  if (k < r || k > n) {
    throw Error(ErrorKind::BadArity, "k = " + std::to_string(k) + " outside [r, n] = [" +
                                         std::to_string(r) + ", " + std::to_string(n) + "]");
  }
}

bool subset_passes(const MarkedHypergraph& h, const std::vector<Vertex>& subset,
                   solvers::Method method) {
  if (method == solvers::Method::Oracle) return oracle::decide(h, subset).exists;
  return solvers::solve(induced(h, subset).graph, method).exists;
}

constexpr std::int64_t kChunk = 1024;

struct Partial {
  std::uint64_t total = 0;
  std::uint64_t helly = 0;
  std::uint64_t whole = 0;
  std::uint64_t counter = 0;
  std::vector<Counterexample> listed;
};

void merge_into(CensusReport& report, std::vector<Partial>& parts) {
  for (auto& p : parts) {
    report.instances_total += p.total;
    report.instances_helly_k_pass += p.helly;
    report.instances_whole_pass += p.whole;
    report.counterexample_count += p.counter;
    for (auto& c : p.listed) {
      if (report.counterexamples.size() < kMaxListed) report.counterexamples.push_back(std::move(c));
    }
  }
}

// Evaluates instances [0, count) in fixed chunks; results merge in index
// order so the report does not depend on the thread count.
template <typename MakeDigits>
void run_census(CensusReport& report, std::uint64_t count, const CensusOptions& opts,
                MakeDigits&& make_digits) {
  const auto chunks = static_cast<std::int64_t>((count + kChunk - 1) / kChunk);
  std::vector<Partial> parts(static_cast<std::size_t>(chunks));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(opts.jobs, 1)) if (opts.jobs > 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    try {
      auto& part = parts[c];
      const auto begin = static_cast<std::uint64_t>(c) * kChunk;
      const auto end = std::min<std::uint64_t>(count, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        auto digits = make_digits(i);
        const auto h = clique_from_digits(report.variant, report.r, report.n, digits);
        const auto verdict = evaluate_instance(h, report.k, opts.method);
        ++part.total;
        part.helly += verdict.helly_k;
        part.whole += verdict.whole;
        if (verdict.helly_k && !verdict.whole) {
          ++part.counter;
          if (part.listed.size() < kMaxListed) part.listed.push_back({i, std::move(digits)});
        }
      }
    } catch (...) {
#pragma omp critical(agree_census_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  merge_into(report, parts);
}

}  // namespace

HellyScanReport scan_subsets(const MarkedHypergraph& h, int k, solvers::Method method,
                             int jobs) {
  require_k(h.r(), h.n(), k);
  HellyScanReport report;
  report.k = k;
  const auto total = binomial(h.n(), k);
  std::vector<char> pass(total, 0);
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 16) num_threads(std::max(jobs, 1)) if (jobs > 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      const auto subset = subset_unrank(static_cast<std::uint64_t>(i), h.n(), k);
      pass[i] = subset_passes(h, subset, method);
    } catch (...) {
#pragma omp critical(agree_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  report.subsets_checked = total;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (pass[i]) continue;
    ++report.failing_count;
    if (report.failing_subsets.size() < kMaxListed) {
      report.failing_subsets.push_back(subset_unrank(i, h.n(), k));
    }
  }
  report.whole_exists = solvers::solve(h, method, jobs).exists;
  return report;
}

std::uint64_t choices_per_edge(MarkVariant variant, int r) {
  const auto rr = static_cast<std::uint64_t>(r);
  switch (variant) {
    case MarkVariant::TwoExtreme: return rr * (rr - 1) / 2;
    case MarkVariant::MinMarked:
    case MarkVariant::OneExtreme: return rr;
    case MarkVariant::MinMax: return rr * (rr - 1);
  }
  return 0;
}

std::uint64_t marking_space_size(MarkVariant variant, int r, int n) {
  const auto base = choices_per_edge(variant, r);
  const auto edges = binomial(n, r);
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < edges; ++i) {
    if (size > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    size *= base;
  }
  return size;
}

Mark decode_mark(MarkVariant variant, const std::vector<Vertex>& verts, std::uint64_t digit) {
  const auto r = verts.size();
  switch (variant) {
    case MarkVariant::TwoExtreme:
      for (std::size_t p = 0; p < r; ++p) {
        if (digit < r - 1 - p) return {verts[p], verts[p + 1 + digit]};
        digit -= r - 1 - p;
      }
      break;
    case MarkVariant::MinMarked:
    case MarkVariant::OneExtreme:
      if (digit < r) return {verts[digit], 0};
      break;
    case MarkVariant::MinMax: {
      const auto p = digit / (r - 1);
      const auto q0 = digit % (r - 1);
      if (p < r) return {verts[p], verts[q0 < p ? q0 : q0 + 1]};
      break;
    }
  }
  throw Error(ErrorKind::BadArity, "mark digit " + std::to_string(digit) + " out of range");
}

std::uint64_t encode_mark(MarkVariant variant, const std::vector<Vertex>& verts,
                          const Mark& mark) {
  const auto r = verts.size();
  auto pos = [&](Vertex v) {
    return static_cast<std::uint64_t>(std::lower_bound(verts.begin(), verts.end(), v) -
                                      verts.begin());
  };
  switch (variant) {
    case MarkVariant::TwoExtreme: {
      const auto p = pos(mark.first), q = pos(mark.second);
      std::uint64_t digit = 0;
      for (std::uint64_t i = 0; i < p; ++i) digit += r - 1 - i;
      return digit + (q - p - 1);
    }
    case MarkVariant::MinMarked:
    case MarkVariant::OneExtreme:
      return pos(mark.first);
    case MarkVariant::MinMax: {
      const auto p = pos(mark.first), q = pos(mark.second);
      return p * (r - 1) + (q < p ? q : q - 1);
    }
  }
  return 0;
}

std::vector<std::uint32_t> digits_from_index(MarkVariant variant, int r, int n,
                                             std::uint64_t index) {
  const auto base = choices_per_edge(variant, r);
  const auto m = static_cast<std::size_t>(binomial(n, r));
  std::vector<std::uint32_t> digits(m, 0);
  for (std::size_t i = m; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(index % base);
    index /= base;
  }
  return digits;
}

MarkedHypergraph clique_from_digits(MarkVariant variant, int r, int n,
                                    const std::vector<std::uint32_t>& digits) {
  const auto subsets = all_subsets(n, r);
  if (digits.size() != subsets.size()) {
    throw Error(ErrorKind::BadArity, "digit count does not match C(n, r)");
  }
  std::vector<Mark> marks;
  marks.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    marks.push_back(decode_mark(variant, subsets[i], digits[i]));
  }
  return build_clique(n, r, variant, marks);
}

MarkedHypergraph clique_from_index(MarkVariant variant, int r, int n, std::uint64_t index) {
  return clique_from_digits(variant, r, n, digits_from_index(variant, r, n, index));
}

std::vector<std::uint32_t> random_digits(MarkVariant variant, int r, int n,
                                         std::uint64_t seed, std::uint64_t sample) {
  const auto base = choices_per_edge(variant, r);
  const auto m = binomial(n, r);
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(m));
  for (std::uint64_t i = 0; i < m; ++i) {
    digits[i] = static_cast<std::uint32_t>(
        SplitMix64::scale(SplitMix64::at(seed, sample * m + i), base));
  }
  return digits;
}

InstanceVerdict evaluate_instance(const MarkedHypergraph& h, int k, solvers::Method method) {
  InstanceVerdict v;
  v.whole = solvers::solve(h, method).exists;
  // Restrictions of an agreeing order agree, so only failures need a scan.
  if (v.whole || k == h.n()) {
    v.helly_k = v.whole;
    return v;
  }
  v.helly_k = true;
  std::vector<Vertex> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 1u);
  do {
    if (!subset_passes(h, subset, method)) {
      v.helly_k = false;
      break;
    }
  } while (next_subset(subset, h.n()));
  return v;
}

CensusReport census_exhaustive(MarkVariant variant, int r, int n, int k, CensusOptions opts) {
  if (r < 3 || n < r) throw Error(ErrorKind::BadArity, "census needs n >= r >= 3");
  require_k(r, n, k);
  const auto size = marking_space_size(variant, r, n);
  if (size > opts.budget) {
    throw Error(ErrorKind::BudgetExceeded,
                "marking space " +
                    (size == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                        : std::to_string(size)) +
                    " exceeds budget " + std::to_string(opts.budget));
  }
  CensusReport report;
  report.variant = variant;
  report.r = r;
  report.n = n;
  report.k = k;
  report.mode = CensusMode::Exhaustive;
  run_census(report, size, opts, [&](std::uint64_t i) {
    return digits_from_index(variant, r, n, i);
  });
  return report;
}

CensusReport census_random(MarkVariant variant, int r, int n, int k, std::uint64_t samples,
                           std::uint64_t seed, CensusOptions opts) {
  if (r < 3 || n < r) throw Error(ErrorKind::BadArity, "census needs n >= r >= 3");
  require_k(r, n, k);
  if (samples < 1) throw Error(ErrorKind::BadArity, "census needs at least one sample");
  CensusReport report;
  report.variant = variant;
  report.r = r;
  report.n = n;
  report.k = k;
  report.mode = CensusMode::Random;
  report.samples = samples;
  report.seed = seed;
  run_census(report, samples, opts, [&](std::uint64_t s) {
    return random_digits(variant, r, n, seed, s);
  });
  return report;
}

}  // namespace agree::helly
