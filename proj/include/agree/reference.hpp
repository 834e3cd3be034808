#pragma once

#include <span>
#include <vector>

#include "agree/helly.hpp"
#include "agree/incidence.hpp"
#include "agree/model.hpp"
#include "agree/oracle.hpp"

// Deliberately naive serial versions of the library kernels, kept as
// independent ground truth for tests and as the baseline in benchmarks.
namespace agree::reference {

// Filters all |U|! permutations through check_order. Fills exists, the
// lexicographically least order, and count.
oracle::OracleResult brute_force(const MarkedHypergraph& h, std::span<const Vertex> subset);
oracle::OracleResult brute_force(const MarkedHypergraph& h);

// Every 2x2 submatrix of the dense incidence matrix, compared against the
// pattern's permutations. Same reporting convention as the sparse scans.
std::vector<incidence::PatternHit> dense_scan(const MarkedHypergraph& h,
                                              incidence::PatternKind kind);

// Single loop over the marking space, every predicate evaluated in full
// with the brute-force decider.
helly::CensusReport census_serial(MarkVariant variant, int r, int n, int k);

}  // namespace agree::reference
