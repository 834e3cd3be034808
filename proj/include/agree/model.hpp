#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace agree {

// Vertices are dense 1-based ids; 0 is never a valid vertex.
using Vertex = std::uint32_t;

enum class MarkVariant { TwoExtreme, MinMarked, OneExtreme, MinMax };

// Kebab-case token used in files and on the command line.
std::string_view to_token(MarkVariant variant);
std::optional<MarkVariant> variant_from_token(std::string_view token);

// Marks of one edge. Interpretation depends on the variant:
//   TwoExtreme: {first, second} is the boundary pair, stored ascending.
//   MinMarked / OneExtreme: first is the single marked vertex, second = 0.
//   MinMax: first is the required minimum, second the required maximum.
struct Mark {
  Vertex first = 0;
  Vertex second = 0;

  friend bool operator==(const Mark&, const Mark&) = default;
};

struct MarkedEdge {
  std::vector<Vertex> verts;  // strictly increasing
  Mark mark;

  bool contains(Vertex v) const;
  friend bool operator==(const MarkedEdge&, const MarkedEdge&) = default;
};

// Immutable, validated r-uniform hypergraph with per-edge marks. Edges are
// kept in lexicographic order of their vertex sets.
class MarkedHypergraph {
 public:
  // Validates and canonicalizes (sorts edges, orders TwoExtreme pairs).
  // Throws Error{BadArity, MarkNotInEdge, DuplicateBoundary, DuplicateEdge}.
  static MarkedHypergraph make(int n, int r, MarkVariant variant,
                               std::vector<MarkedEdge> edges, bool is_clique);

  int n() const { return n_; }
  int r() const { return r_; }
  MarkVariant variant() const { return variant_; }
  bool is_clique() const { return is_clique_; }
  std::span<const MarkedEdge> edges() const { return edges_; }
  const MarkedEdge& edge(std::size_t i) const { return edges_[i]; }
  std::size_t edge_count() const { return edges_.size(); }

  // Indices of the edges containing v, ascending.
  std::span<const std::uint32_t> edges_of(Vertex v) const;

  friend bool operator==(const MarkedHypergraph& a, const MarkedHypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.variant_ == b.variant_ &&
           a.is_clique_ == b.is_clique_ && a.edges_ == b.edges_;
  }

 private:
  MarkedHypergraph() = default;

  int n_ = 0;
  int r_ = 0;
  MarkVariant variant_ = MarkVariant::TwoExtreme;
  bool is_clique_ = false;
  std::vector<MarkedEdge> edges_;
  std::vector<std::uint32_t> incidence_offsets_;  // size n + 2
  std::vector<std::uint32_t> incidence_;
};

// Complete hypergraph on {1..n}; marks[i] belongs to the i-th r-subset in
// lexicographic order.
MarkedHypergraph build_clique(int n, int r, MarkVariant variant,
                              std::span<const Mark> marks);

// Permutation of a vertex subset with O(1) rank lookup.
class LinearOrder {
 public:
  LinearOrder() = default;
  // Throws Error{OrderNotOverSubset} on a repeated or zero id.
  explicit LinearOrder(std::vector<Vertex> seq);

  std::span<const Vertex> seq() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  bool empty() const { return seq_.empty(); }
  bool contains(Vertex v) const { return position(v) >= 0; }
  // Position of v, or -1 when v is not ordered.
  int position(Vertex v) const {
    return v < rank_.size() ? rank_[v] : -1;
  }
  Vertex max_vertex() const { return rank_.empty() ? 0 : static_cast<Vertex>(rank_.size() - 1); }

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.seq_ == b.seq_;
  }
  friend auto operator<=>(const LinearOrder& a, const LinearOrder& b) {
    return a.seq_ <=> b.seq_;
  }

 private:
  std::vector<Vertex> seq_;
  std::vector<int> rank_;
};

LinearOrder dual(const LinearOrder& order);

// Keeps only the vertices of `keep`, preserving relative order.
LinearOrder restrict_order(const LinearOrder& order, std::span<const Vertex> keep);

struct AgreeVerdict {
  bool agrees = true;
  std::optional<MarkedEdge> witness_edge;  // first violated edge in edge order
};

// Does a single edge, all of whose vertices are ordered, satisfy its rule?
bool edge_agrees(MarkVariant variant, const MarkedEdge& edge,
                 const LinearOrder& order);

// Edges not fully inside the ordered subset are ignored.
// Throws Error{OrderNotOverSubset} when the order names a vertex > n.
AgreeVerdict check_order(const MarkedHypergraph& h, const LinearOrder& order);

// Sub-hypergraph induced on a vertex subset, relabelled to {1..|U|} in
// ascending order of the original ids. labels[i - 1] is the original id of i.
struct Induced {
  MarkedHypergraph graph;
  std::vector<Vertex> labels;

  LinearOrder lift(const LinearOrder& local) const;
};

Induced induced(const MarkedHypergraph& h, std::span<const Vertex> subset);

// Same graph with vertex v removed.
Induced remove_vertex(const MarkedHypergraph& h, Vertex v);

}  // namespace agree
