#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "agree/model.hpp"

namespace agree::oracle {

struct OracleResult {
  bool exists = false;
  std::optional<LinearOrder> order;   // lexicographically least agreeing order
  std::optional<std::uint64_t> count; // set only by count()
};

// Decides whether some permutation of `subset` agrees with every edge
// contained in it. `jobs` > 1 splits the search on the first placed vertex.
OracleResult decide(const MarkedHypergraph& h, std::span<const Vertex> subset,
                    int jobs = 1);
OracleResult decide(const MarkedHypergraph& h, int jobs = 1);

// All agreeing permutations of `subset` in lexicographic order.
std::vector<LinearOrder> enumerate(const MarkedHypergraph& h,
                                   std::span<const Vertex> subset,
                                   std::optional<std::size_t> limit = std::nullopt,
                                   int jobs = 1);

// Number of agreeing permutations; exists/order are filled as in decide().
OracleResult count(const MarkedHypergraph& h, std::span<const Vertex> subset,
                   int jobs = 1);
OracleResult count(const MarkedHypergraph& h, int jobs = 1);

std::vector<Vertex> all_vertices(const MarkedHypergraph& h);

}  // namespace agree::oracle
