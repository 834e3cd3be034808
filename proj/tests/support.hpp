#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "agree/combinatorics.hpp"
#include "agree/helly.hpp"
#include "agree/model.hpp"

namespace agree::testing {

inline std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1u);
  return v;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  auto v = iota_vertices(n);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// Uniform marks on every edge of the (r, n)-clique.
inline MarkedHypergraph random_clique(MarkVariant variant, int r, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> digit(
      0, static_cast<std::uint32_t>(helly::choices_per_edge(variant, r) - 1));
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(binomial(n, r)));
  for (auto& d : digits) d = digit(rng);
  return helly::clique_from_digits(variant, r, n, digits);
}

// Marks read off `order`, so `order` agrees with the result.
inline Mark mark_from_order(MarkVariant variant, const std::vector<Vertex>& verts,
                            const std::vector<int>& pos, std::mt19937_64& rng) {
  auto lo = *std::min_element(verts.begin(), verts.end(),
                              [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
  auto hi = *std::max_element(verts.begin(), verts.end(),
                              [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
  switch (variant) {
    case MarkVariant::TwoExtreme: return {std::min(lo, hi), std::max(lo, hi)};
    case MarkVariant::MinMarked: return {lo, 0};
    case MarkVariant::OneExtreme: return {(rng() & 1) ? lo : hi, 0};
    case MarkVariant::MinMax: return {lo, hi};
  }
  return {};
}

inline std::vector<int> positions(const std::vector<Vertex>& order, int n) {
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return pos;
}

// Clique agreeing with a random order, then `perturb` edges re-marked at random.
inline MarkedHypergraph planted_clique(MarkVariant variant, int r, int n, std::mt19937_64& rng,
                                       int perturb = 0) {
  const auto order = random_permutation(n, rng);
  const auto pos = positions(order, n);
  const auto subsets = all_subsets(n, r);
  std::vector<Mark> marks;
  for (const auto& s : subsets) marks.push_back(mark_from_order(variant, s, pos, rng));
  std::uniform_int_distribution<std::size_t> pick(0, subsets.size() - 1);
  std::uniform_int_distribution<std::uint64_t> digit(0, helly::choices_per_edge(variant, r) - 1);
  for (int i = 0; i < perturb; ++i) {
    const auto e = pick(rng);
    marks[e] = helly::decode_mark(variant, subsets[e], digit(rng));
  }
  return build_clique(n, r, variant, marks);
}

// `edges` distinct random r-subsets of {1..n} with random marks.
inline MarkedHypergraph random_hypergraph(MarkVariant variant, int r, int n, int edges,
                                          std::mt19937_64& rng) {
  const auto total = binomial(n, r);
  std::vector<std::uint64_t> ranks(total);
  std::iota(ranks.begin(), ranks.end(), 0);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  ranks.resize(std::min<std::uint64_t>(total, static_cast<std::uint64_t>(edges)));
  std::uniform_int_distribution<std::uint64_t> digit(0, helly::choices_per_edge(variant, r) - 1);
  std::vector<MarkedEdge> out;
  for (auto rank : ranks) {
    auto verts = subset_unrank(rank, n, r);
    const auto mark = helly::decode_mark(variant, verts, digit(rng));
    out.push_back({std::move(verts), mark});
  }
  return MarkedHypergraph::make(n, r, variant, std::move(out), false);
}

// Hypergraph built from a random order plus perturbations, not complete.
inline MarkedHypergraph planted_hypergraph(MarkVariant variant, int r, int n, int edges,
                                           std::mt19937_64& rng, int perturb = 0) {
  auto h = random_hypergraph(variant, r, n, edges, rng);
  const auto order = random_permutation(n, rng);
  const auto pos = positions(order, n);
  std::vector<MarkedEdge> out(h.edges().begin(), h.edges().end());
  for (auto& e : out) e.mark = mark_from_order(variant, e.verts, pos, rng);
  std::uniform_int_distribution<std::size_t> pick(0, out.size() - 1);
  std::uniform_int_distribution<std::uint64_t> digit(0, helly::choices_per_edge(variant, r) - 1);
  for (int i = 0; i < perturb && !out.empty(); ++i) {
    auto& e = out[pick(rng)];
    e.mark = helly::decode_mark(variant, e.verts, digit(rng));
  }
  return MarkedHypergraph::make(n, r, variant, std::move(out), false);
}

// One-extreme instance on alpha=1, beta=2, gamma=3, chi=4, xi=5 with edges
// e={1,2,3}, f={1,2,5}, g={2,3,5}, h={2,3,4}, j={1,3,4}.
inline std::vector<MarkedEdge> five_named_edges() {
  return {{{1, 2, 3}, {1, 0}},
          {{1, 2, 5}, {2, 0}},
          {{2, 3, 5}, {2, 0}},
          {{2, 3, 4}, {3, 0}},
          {{1, 3, 4}, {3, 0}}};
}

inline MarkedHypergraph five_edge_one_extreme() {
  return MarkedHypergraph::make(5, 3, MarkVariant::OneExtreme, five_named_edges(), false);
}

// Same five edges completed to the clique; the other triples mark their least id.
inline MarkedHypergraph five_edge_one_extreme_clique() {
  const auto named = five_named_edges();
  std::vector<Mark> marks;
  for (const auto& s : all_subsets(5, 3)) {
    Mark m{s[0], 0};
    for (const auto& e : named)
      if (e.verts == s) m = e.mark;
    marks.push_back(m);
  }
  return build_clique(5, 3, MarkVariant::OneExtreme, marks);
}

inline constexpr MarkVariant kAllVariants[] = {MarkVariant::TwoExtreme, MarkVariant::MinMarked,
                                               MarkVariant::OneExtreme, MarkVariant::MinMax};

}  // namespace agree::testing
