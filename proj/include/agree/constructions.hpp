#pragma once

#include <optional>
#include <string_view>

#include "agree/model.hpp"

namespace agree::constructions {

enum class Family {
  TwoExtremeTight,
  MinMaxTight,
  OneExtremeCycle,
  SparseMinMarkedCycle,
  NaturalMarking,
};

std::string_view to_token(Family family);
std::optional<Family> family_from_token(std::string_view token);

struct FamilyParams {
  Family family;
  int r = 3;
  int n = 0;  // OneExtremeCycle, NaturalMarking
  int m = 0;  // SparseMinMarkedCycle
  MarkVariant variant = MarkVariant::TwoExtreme;  // NaturalMarking
};

// Two-extreme clique on 2r - 2 vertices with no agreeing order whose
// (2r - 3)-vertex subsets all have one.
MarkedHypergraph gen_two_extreme_tight(int r);

// Min&max analogue of gen_two_extreme_tight.
MarkedHypergraph gen_min_max_tight(int r);

// One-extreme clique (n - r even, n >= r + 1) with no agreeing order whose
// (n - 1)-vertex subsets all have one. Throws Error{BadParity, BadArity}.
MarkedHypergraph gen_one_extreme_cycle(int r, int n);

// Min-marked cycle of m edges e_i = {u_i, u_{i+1}, v^i_1..v^i_{r-2}} with
// A(e_i) = u_i. Vertex u_i has id i; v^i_j has id m + (i - 1)(r - 2) + j.
MarkedHypergraph gen_sparse_min_marked_cycle(int r, int m);

// Clique whose marks are read off the identity order.
MarkedHypergraph gen_natural(int r, int n, MarkVariant variant);

MarkedHypergraph generate(const FamilyParams& params);

}  // namespace agree::constructions
