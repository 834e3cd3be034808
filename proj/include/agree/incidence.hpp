#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "agree/model.hpp"

namespace agree::incidence {

struct Entry {
  Vertex col;
  std::int8_t value;  // -1 at the marked vertex, +1 elsewhere in the edge
};

// Sparse {-1, 0, 1} edge x vertex matrix of a single-mark hypergraph. Rows
// follow the hypergraph's edge order, columns are vertex ids 1..n.
class IncidenceMatrix {
 public:
  // Throws Error{WrongVariant} unless the variant is MinMarked or OneExtreme.
  explicit IncidenceMatrix(const MarkedHypergraph& h);

  std::size_t rows() const { return rows_.size(); }
  int cols() const { return n_; }
  int r() const { return r_; }
  MarkVariant variant() const { return variant_; }
  bool is_clique() const { return clique_; }

  std::span<const Entry> row(std::size_t i) const { return rows_[i]; }
  // Column holding the -1 of row i.
  Vertex marked(std::size_t i) const { return marked_[i]; }
  int at(std::size_t i, Vertex col) const;
  // Rows with a nonzero in column `col`, ascending.
  std::span<const std::uint32_t> rows_with(Vertex col) const { return by_col_[col]; }

 private:
  int n_ = 0;
  int r_ = 0;
  MarkVariant variant_;
  bool clique_ = false;
  std::vector<std::vector<Entry>> rows_;
  std::vector<Vertex> marked_;
  std::vector<std::vector<std::uint32_t>> by_col_;
};

inline IncidenceMatrix build_matrix(const MarkedHypergraph& h) {
  return IncidenceMatrix(h);
}

enum class PatternKind { Forbidden, Precedence, S, F };

// A 2x2 submatrix {row_e, row_f} x {col_a, col_b}, row_e < row_f. Symmetric
// patterns report col_a < col_b; Precedence reports col_a as the vertex
// forced to come first.
struct PatternHit {
  PatternKind kind;
  std::uint32_t row_e;
  std::uint32_t row_f;
  Vertex col_a;
  Vertex col_b;

  friend bool operator==(const PatternHit&, const PatternHit&) = default;
};

struct ScanOptions {
  // Scan only edge pairs with |e u f| = r + 1 (cliques with n >= r + 1).
  bool localized = false;
  // Stop after the first hit in scan order.
  bool first_only = false;
  int jobs = 1;
};

// [-1 1; 1 -1] up to row/column permutation. Requires a MinMarked matrix.
std::vector<PatternHit> find_forbidden(const IncidenceMatrix& m, ScanOptions opts = {});

// [-1 1; 0 -1] up to permutation. Requires a MinMarked matrix.
std::vector<PatternHit> find_precedence(const IncidenceMatrix& m, ScanOptions opts = {});

// S: [1 -1; 1 -1], F: [-1 1; 1 -1], up to permutation. Requires OneExtreme.
std::vector<PatternHit> find_sf(const IncidenceMatrix& m, ScanOptions opts = {});

}  // namespace agree::incidence
