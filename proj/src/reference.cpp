#include "agree/reference.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "agree/combinatorics.hpp"
#include "agree/error.hpp"

namespace agree::reference {

oracle::OracleResult brute_force(const MarkedHypergraph& h, std::span<const Vertex> subset) {
  std::vector<Vertex> perm(subset.begin(), subset.end());
  std::sort(perm.begin(), perm.end());
  oracle::OracleResult result;
  std::uint64_t count = 0;
  do {
    LinearOrder order(perm);
    if (check_order(h, order).agrees) {
      if (count++ == 0) {
        result.exists = true;
        result.order = order;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  result.count = count;
  return result;
}

oracle::OracleResult brute_force(const MarkedHypergraph& h) {
  std::vector<Vertex> all(static_cast<std::size_t>(h.n()));
  std::iota(all.begin(), all.end(), 1u);
  return brute_force(h, all);
}

std::vector<incidence::PatternHit> dense_scan(const MarkedHypergraph& h,
                                              incidence::PatternKind kind) {
  using incidence::PatternKind;
  const auto n = static_cast<std::size_t>(h.n());
  const auto m = h.edge_count();
  std::vector<std::vector<int>> dense(m, std::vector<int>(n + 1, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex v : h.edge(i).verts) dense[i][v] = v == h.edge(i).mark.first ? -1 : 1;
  }
  using Block = std::array<int, 4>;  // row-major {e_a, e_b, f_a, f_b}
  auto permutations = [](Block b) {
    return std::array<Block, 4>{b, Block{b[1], b[0], b[3], b[2]}, Block{b[2], b[3], b[0], b[1]},
                                Block{b[3], b[2], b[1], b[0]}};
  };
  const Block base = [&] {
    switch (kind) {
      case PatternKind::Forbidden:
      case PatternKind::F: return Block{-1, 1, 1, -1};
      case PatternKind::S: return Block{1, -1, 1, -1};
      case PatternKind::Precedence: return Block{-1, 1, 0, -1};
    }
    return Block{};
  }();
  const auto shapes = permutations(base);

  std::vector<incidence::PatternHit> hits;
  for (std::uint32_t e = 0; e < m; ++e) {
    for (std::uint32_t f = e + 1; f < m; ++f) {
      for (Vertex a = 1; a <= n; ++a) {
        for (Vertex b = a + 1; b <= n; ++b) {
          const Block block{dense[e][a], dense[e][b], dense[f][a], dense[f][b]};
          if (std::find(shapes.begin(), shapes.end(), block) == shapes.end()) continue;
          if (kind != PatternKind::Precedence) {
            hits.push_back({kind, e, f, a, b});
            continue;
          }
          // The column holding the 0 is the vertex forced to come first.
          const bool zero_in_a = block[0] == 0 || block[2] == 0;
          hits.push_back(zero_in_a ? incidence::PatternHit{kind, e, f, a, b}
                                   : incidence::PatternHit{kind, e, f, b, a});
        }
      }
    }
  }
  return hits;
}

helly::CensusReport census_serial(MarkVariant variant, int r, int n, int k) {
  helly::CensusReport report;
  report.variant = variant;
  report.r = r;
  report.n = n;
  report.k = k;
  const auto size = helly::marking_space_size(variant, r, n);
  for (std::uint64_t i = 0; i < size; ++i) {
    auto digits = helly::digits_from_index(variant, r, n, i);
    const auto h = helly::clique_from_digits(variant, r, n, digits);
    const bool whole = brute_force(h).exists;
    bool all_k = true;
    for (const auto& subset : all_subsets(n, k)) {
      if (!brute_force(h, subset).exists) {
        all_k = false;
        break;
      }
    }
    ++report.instances_total;
    report.instances_helly_k_pass += all_k;
    report.instances_whole_pass += whole;
    if (all_k && !whole) {
      ++report.counterexample_count;
      if (report.counterexamples.size() < helly::kMaxListed) {
        report.counterexamples.push_back({i, std::move(digits)});
      }
    }
  }
  return report;
}

}  // namespace agree::reference
