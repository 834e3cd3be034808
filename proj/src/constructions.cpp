#include "agree/constructions.hpp"

#include <algorithm>
#include <string>

#include "agree/combinatorics.hpp"
#include "agree/error.hpp"

namespace agree::constructions {

namespace {

void require_arity(int r) {
  if (r < 3) throw Error(ErrorKind::BadArity, "r must be at least 3");
}

Mark natural_mark(MarkVariant variant, const std::vector<Vertex>& verts) {
  switch (variant) {
    case MarkVariant::TwoExtreme:
    case MarkVariant::MinMax:
      return {verts.front(), verts.back()};
    case MarkVariant::MinMarked:
    case MarkVariant::OneExtreme:
      return {verts.front(), 0};
  }
  return {};
}

// e0 = {1..r} gets (1, r - 1); every other edge its own (min, max).
std::vector<Mark> tight_marks(int r) {
  const int n = 2 * r - 2;
  std::vector<Mark> marks;
  for (const auto& s : all_subsets(n, r)) {
    const bool e0 = s.back() == static_cast<Vertex>(r);
    marks.push_back(e0 ? Mark{1, static_cast<Vertex>(r - 1)} : Mark{s.front(), s.back()});
  }
  return marks;
}

// The r = 3 cyclic construction on {1..n0}, n0 odd: triples {i, i+1, i+2}
// (mod n0) are marked at i + 1, all other triples at their least element.
Vertex cyclic_triple_mark(int n0, const std::vector<Vertex>& t) {
  for (int i = 1; i <= n0; ++i) {
    auto wrap = [n0](int x) { return static_cast<Vertex>((x - 1) % n0 + 1); };
    std::vector<Vertex> tri{wrap(i), wrap(i + 1), wrap(i + 2)};
    std::sort(tri.begin(), tri.end());
    if (tri == t) return wrap(i + 1);
  }
  return t.front();
}

}  // namespace

std::string_view to_token(Family family) {
  switch (family) {
    case Family::TwoExtremeTight: return "two-extreme-tight";
    case Family::MinMaxTight: return "min-max-tight";
    case Family::OneExtremeCycle: return "one-extreme-cycle";
    case Family::SparseMinMarkedCycle: return "sparse-cycle";
    case Family::NaturalMarking: return "natural";
  }
  return "";
}

std::optional<Family> family_from_token(std::string_view token) {
  for (auto f : {Family::TwoExtremeTight, Family::MinMaxTight, Family::OneExtremeCycle,
                 Family::SparseMinMarkedCycle, Family::NaturalMarking}) {
    if (to_token(f) == token) return f;
  }
  return std::nullopt;
}

MarkedHypergraph gen_two_extreme_tight(int r) {
  require_arity(r);
  const auto marks = tight_marks(r);
  return build_clique(2 * r - 2, r, MarkVariant::TwoExtreme, marks);
}

MarkedHypergraph gen_min_max_tight(int r) {
  require_arity(r);
  const auto marks = tight_marks(r);
  return build_clique(2 * r - 2, r, MarkVariant::MinMax, marks);
}

MarkedHypergraph gen_one_extreme_cycle(int r, int n) {
  require_arity(r);
  if (n < r + 1) throw Error(ErrorKind::BadArity, "one-extreme cycle needs n >= r + 1");
  if ((n - r) % 2 != 0) throw Error(ErrorKind::BadParity, "one-extreme cycle needs n - r even");
  // W = {n0 + 1 .. n} is appended to every triple of the base construction.
  const int n0 = n - r + 3;
  std::vector<Mark> marks;
  for (const auto& s : all_subsets(n, r)) {
    std::vector<Vertex> core;
    for (Vertex v : s) {
      if (v <= static_cast<Vertex>(n0)) core.push_back(v);
    }
    const Vertex mark = core.size() == 3 ? cyclic_triple_mark(n0, core) : core.front();
    marks.push_back({mark, 0});
  }
  return build_clique(n, r, MarkVariant::OneExtreme, marks);
}

MarkedHypergraph gen_sparse_min_marked_cycle(int r, int m) {
  require_arity(r);
  if (m <= 2) throw Error(ErrorKind::BadArity, "sparse cycle needs m > 2");
  const int n = m + m * (r - 2);
  std::vector<MarkedEdge> edges;
  for (int i = 1; i <= m; ++i) {
    const auto u = static_cast<Vertex>(i);
    const auto next = static_cast<Vertex>(i % m + 1);
    MarkedEdge e;
    e.verts = {u, next};
    for (int j = 1; j <= r - 2; ++j) {
      e.verts.push_back(static_cast<Vertex>(m + (i - 1) * (r - 2) + j));
    }
    std::sort(e.verts.begin(), e.verts.end());
    e.mark = {u, 0};
    edges.push_back(std::move(e));
  }
  return MarkedHypergraph::make(n, r, MarkVariant::MinMarked, std::move(edges), false);
}

MarkedHypergraph gen_natural(int r, int n, MarkVariant variant) {
  require_arity(r);
  if (n < r) throw Error(ErrorKind::BadArity, "natural clique needs n >= r");
  std::vector<Mark> marks;
  for (const auto& s : all_subsets(n, r)) marks.push_back(natural_mark(variant, s));
  return build_clique(n, r, variant, marks);
}

MarkedHypergraph generate(const FamilyParams& params) {
  switch (params.family) {
    case Family::TwoExtremeTight: return gen_two_extreme_tight(params.r);
    case Family::MinMaxTight: return gen_min_max_tight(params.r);
    case Family::OneExtremeCycle: return gen_one_extreme_cycle(params.r, params.n);
    case Family::SparseMinMarkedCycle: return gen_sparse_min_marked_cycle(params.r, params.m);
    case Family::NaturalMarking: return gen_natural(params.r, params.n, params.variant);
  }
  throw Error(ErrorKind::BadArity, "unknown family");
}

}  // namespace agree::constructions
