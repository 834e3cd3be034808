#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "agree/model.hpp"
#include "agree/oracle.hpp"

namespace agree::solvers {

using oracle::OracleResult;

enum class DigraphOrigin { DGraph, AB, MinMax };

struct PrecedenceDigraph {
  DigraphOrigin origin = DigraphOrigin::MinMax;
  std::vector<Vertex> nodes;                      // ascending
  std::vector<std::pair<Vertex, Vertex>> arcs;    // sorted, unique, no loops

  // Lexicographically least topological order, or nullopt on a cycle.
  std::optional<std::vector<Vertex>> topological_order() const;
  bool acyclic() const { return topological_order().has_value(); }
};

// Nodes are the classes of edges sharing a marked vertex, each labelled by
// that vertex; A(e) -> A(f) whenever A(f) lies in e.
PrecedenceDigraph d_graph(const MarkedHypergraph& h);

// Arcs A(e) -> y and y -> B(e) for every edge e and y in e.
PrecedenceDigraph min_max_digraph(const MarkedHypergraph& h);

enum class EdgeColor : std::uint8_t { A, B };

// A-colored edges want their mark first, B-colored edges want it last.
PrecedenceDigraph ab_graph(const MarkedHypergraph& h, const std::vector<EdgeColor>& colors);

// Edge graph of a one-extreme hypergraph with S-edges contracted.
struct SFGraph {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> s_edges;  // edge pairs, first < second
  std::vector<std::pair<std::uint32_t, std::uint32_t>> f_edges;
  // S-classes, numbered by their least edge index; members ascending.
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> class_of;  // edge -> class
  // F-adjacency between distinct classes, first < second, deduplicated.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> compound_adjacency;
  bool f_loop = false;  // some F-edge joins two edges of one class

  bool bipartite = false;
  // Connected components of the contracted graph, numbered by least class.
  std::uint32_t component_count = 0;
  std::vector<std::uint32_t> component_of;  // class -> component
  std::vector<std::uint8_t> side;           // class -> 0/1, component root is 0
};

SFGraph sf_graph(const MarkedHypergraph& h, int jobs = 1);

struct ExtremalReport {
  std::vector<Vertex> extremal_vertices;  // ascending
};

ExtremalReport extremal_vertices(const MarkedHypergraph& h);

struct SimilarityClasses {
  Vertex pivot = 0;
  std::vector<std::vector<Vertex>> classes;  // ordered by least member
};

// Requires a TwoExtreme clique with r = 3. Uses the transitive closure of
// the pairwise relation, so more than two classes can be reported.
SimilarityClasses similarity_classes(const MarkedHypergraph& h, Vertex pivot);

struct SolveOptions {
  int jobs = 1;
  int max_components = 20;  // one-extreme coloring cap
};

OracleResult solve_min_marked(const MarkedHypergraph& h);
OracleResult solve_min_max(const MarkedHypergraph& h);

struct OneExtremeSolution {
  OracleResult result;
  std::vector<EdgeColor> coloring;  // empty when no order exists
};

// Throws Error{ColoringSpaceTooLarge} past opts.max_components components.
OneExtremeSolution solve_one_extreme_colored(const MarkedHypergraph& h,
                                             SolveOptions opts = {});
OracleResult solve_one_extreme(const MarkedHypergraph& h, SolveOptions opts = {});

// Requires a TwoExtreme clique. Always returns the oracle's verdict.
OracleResult solve_two_extreme(const MarkedHypergraph& h, int jobs = 1);

std::uint64_t count_agreeing(const MarkedHypergraph& h, int jobs = 1);

enum class Method { Structured, Oracle };

// Variant dispatch; structured solvers fall back to the oracle wherever
// their preconditions do not hold.
OracleResult solve(const MarkedHypergraph& h, Method method = Method::Structured,
                   int jobs = 1);

}  // namespace agree::solvers
