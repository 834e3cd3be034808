#include "doctest.h"

#include <algorithm>
#include <random>

#include "agree/combinatorics.hpp"
#include "agree/constructions.hpp"
#include "agree/error.hpp"
#include "agree/helly.hpp"
#include "agree/reference.hpp"
#include "agree/rng.hpp"
#include "support.hpp"

using namespace agree;
using namespace agree::helly;

namespace {

std::uint64_t index_of(const MarkedHypergraph& h) {
  std::uint64_t idx = 0;
  const auto c = choices_per_edge(h.variant(), h.r());
  for (const auto& e : h.edges()) idx = idx * c + encode_mark(h.variant(), e.verts, e.mark);
  return idx;
}

std::vector<std::uint64_t> listed(const CensusReport& r) {
  std::vector<std::uint64_t> out;
  for (const auto& c : r.counterexamples) out.push_back(c.index);
  return out;
}

}  // namespace

TEST_CASE("subset scans of the constructions") {
  const auto tight = constructions::gen_two_extreme_tight(3);
  const auto a = scan_subsets(tight, 3);
  CHECK(a.subsets_checked == 4);
  CHECK(a.failing_count == 0);
  CHECK_FALSE(a.whole_exists);
  const auto b = scan_subsets(tight, 4);
  CHECK(b.failing_count == 1);
  CHECK(b.failing_subsets == std::vector<std::vector<Vertex>>{{1, 2, 3, 4}});

  const auto nat = scan_subsets(constructions::gen_natural(3, 6, MarkVariant::TwoExtreme), 4);
  CHECK(nat.subsets_checked == 15);
  CHECK(nat.failing_count == 0);
  CHECK(nat.whole_exists);

  const auto cyc = scan_subsets(constructions::gen_one_extreme_cycle(3, 7), 6, solvers::Method::Oracle);
  CHECK(cyc.subsets_checked == 7);
  CHECK(cyc.failing_count == 0);
  CHECK_FALSE(cyc.whole_exists);

  CHECK_THROWS_AS(scan_subsets(tight, 2), Error);
  CHECK_THROWS_AS(scan_subsets(tight, 5), Error);
}

TEST_CASE("scan results do not depend on method or jobs") {
  std::mt19937_64 rng(51);
  for (auto v : testing::kAllVariants) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto h = testing::planted_clique(v, 3, 6, rng, 2);
      const auto a = scan_subsets(h, 4, solvers::Method::Structured, 1);
      const auto b = scan_subsets(h, 4, solvers::Method::Oracle, 4);
      CHECK(a.failing_count == b.failing_count);
      CHECK(a.failing_subsets == b.failing_subsets);
      CHECK(a.whole_exists == b.whole_exists);
    }
  }
}

TEST_CASE("passing k-subsets implies passing smaller subsets") {
  std::mt19937_64 rng(52);
  for (auto v : testing::kAllVariants) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto h = testing::planted_clique(v, 3, 6, rng, 1 + trial % 2);
      for (int k = 4; k <= 6; ++k)
        if (scan_subsets(h, k).failing_count == 0) CHECK(scan_subsets(h, k - 1).failing_count == 0);
    }
  }
}

TEST_CASE("marking space arithmetic") {
  CHECK(choices_per_edge(MarkVariant::TwoExtreme, 4) == 6);
  CHECK(choices_per_edge(MarkVariant::MinMarked, 4) == 4);
  CHECK(choices_per_edge(MarkVariant::MinMax, 4) == 12);
  CHECK(marking_space_size(MarkVariant::TwoExtreme, 3, 5) == 59049);
  CHECK(marking_space_size(MarkVariant::MinMax, 3, 4) == 1296);
  CHECK(marking_space_size(MarkVariant::MinMax, 4, 9) == UINT64_MAX);

  const std::vector<Vertex> e{2, 5, 7, 9};
  for (auto v : testing::kAllVariants) {
    for (std::uint64_t d = 0; d < choices_per_edge(v, 4); ++d)
      CHECK(encode_mark(v, e, decode_mark(v, e, d)) == d);
  }
  CHECK(decode_mark(MarkVariant::TwoExtreme, e, 0) == Mark{2, 5});
  CHECK(decode_mark(MarkVariant::TwoExtreme, e, 5) == Mark{7, 9});
  CHECK(decode_mark(MarkVariant::MinMax, e, 3) == Mark{5, 2});

  CHECK(digits_from_index(MarkVariant::MinMarked, 3, 4, 5) == std::vector<std::uint32_t>{0, 0, 1, 2});
  for (std::uint64_t i : {0ull, 17ull, 80ull})
    CHECK(index_of(clique_from_index(MarkVariant::MinMarked, 3, 4, i)) == i);
}

TEST_CASE("splitmix64 stream") {
  SplitMix64 g(1234567);
  CHECK(g.next() == 6457827717110365317ull);
  CHECK(g.next() == 3203168211198807973ull);
  CHECK(g.next() == 9817491932198370423ull);
  CHECK(SplitMix64::at(1234567, 2) == 9817491932198370423ull);
  CHECK(SplitMix64::scale(UINT64_MAX, 10) == 9);
  CHECK(SplitMix64::scale(0, 10) == 0);
  CHECK(random_digits(MarkVariant::TwoExtreme, 3, 5, 9, 4) ==
        random_digits(MarkVariant::TwoExtreme, 3, 5, 9, 4));
}

TEST_CASE("exhaustive census on four vertices") {
  const auto two = census_exhaustive(MarkVariant::TwoExtreme, 3, 4, 3);
  CHECK(two.instances_total == 81);
  CHECK(two.instances_helly_k_pass == 81);
  CHECK(two.instances_whole_pass == 12);
  CHECK(two.counterexample_count == 69);
  CHECK(two.counterexamples.size() == 69);
  CHECK(listed(two)[0] == 0);
  CHECK(listed(two)[1] == 2);
  CHECK(listed(two)[2] == 4);
  const auto tight = index_of(constructions::gen_two_extreme_tight(3));
  const auto ids = listed(two);
  CHECK(std::find(ids.begin(), ids.end(), tight) != ids.end());

  const auto min = census_exhaustive(MarkVariant::MinMarked, 3, 4, 3);
  CHECK(min.instances_whole_pass == 12);
  CHECK(min.counterexample_count == 69);
  const auto min_ids = listed(min);
  CHECK(std::vector<std::uint64_t>(min_ids.begin(), min_ids.begin() + 3) ==
        std::vector<std::uint64_t>{3, 4, 5});

  const auto one = census_exhaustive(MarkVariant::OneExtreme, 3, 4, 3);
  CHECK(one.instances_whole_pass == 81);
  CHECK(one.counterexample_count == 0);

  const auto mm = census_exhaustive(MarkVariant::MinMax, 3, 4, 3);
  CHECK(mm.instances_total == 1296);
  CHECK(mm.instances_helly_k_pass == 1296);
  CHECK(mm.instances_whole_pass == 24);
  CHECK(mm.counterexample_count == 1272);
  CHECK(mm.counterexamples.size() == kMaxListed);
  CHECK(listed(mm)[2] == 2);
  CHECK(index_of(constructions::gen_min_max_tight(3)) < 1296);
}

TEST_CASE("census matches the serial reference") {
  for (auto v : testing::kAllVariants) {
    CHECK(census_exhaustive(v, 3, 4, 3) == reference::census_serial(v, 3, 4, 3));
    CHECK(census_exhaustive(v, 3, 4, 3, {.method = solvers::Method::Oracle}) ==
          reference::census_serial(v, 3, 4, 3));
  }
}

TEST_CASE("census output does not depend on jobs") {
  for (auto v : testing::kAllVariants) {
    CHECK(census_exhaustive(v, 3, 4, 3, {.jobs = 1}) == census_exhaustive(v, 3, 4, 3, {.jobs = 4}));
    CHECK(census_random(v, 3, 5, 4, 300, 7, {.jobs = 1}) ==
          census_random(v, 3, 5, 4, 300, 7, {.jobs = 4}));
  }
}

TEST_CASE("random census") {
  const auto a = census_random(MarkVariant::OneExtreme, 3, 5, 4, 2000, 7);
  CHECK(a.mode == CensusMode::Random);
  CHECK(a.instances_total == 2000);
  CHECK(a.counterexample_count > 0);
  for (const auto& c : a.counterexamples) {
    CHECK(c.digits == random_digits(MarkVariant::OneExtreme, 3, 5, 7, c.index));
    const auto h = clique_from_digits(MarkVariant::OneExtreme, 3, 5, c.digits);
    const auto verdict = evaluate_instance(h, 4);
    CHECK(verdict.helly_k);
    CHECK_FALSE(verdict.whole);
  }
  CHECK(census_random(MarkVariant::OneExtreme, 3, 5, 4, 2000, 8) != a);
  CHECK_THROWS_AS(census_random(MarkVariant::OneExtreme, 3, 5, 4, 0, 8), Error);
}

TEST_CASE("census budget") {
  try {
    census_exhaustive(MarkVariant::TwoExtreme, 3, 6, 4);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  CHECK_THROWS_AS(census_exhaustive(MarkVariant::MinMax, 3, 4, 3, {.budget = 1000}), Error);
  CHECK_THROWS_AS(census_exhaustive(MarkVariant::MinMax, 3, 4, 5), Error);
}

TEST_CASE("sampled censuses") {
  const auto two = census_random(MarkVariant::TwoExtreme, 4, 7, 6, 10000, 1);
  CHECK(two.instances_total == 10000);
  CHECK(two.counterexample_count == 0);
  const auto one = census_random(MarkVariant::OneExtreme, 3, 5, 4, 10000, 7);
  CHECK(one.counterexample_count > 0);
}
