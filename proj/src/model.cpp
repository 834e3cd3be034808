#include "agree/model.hpp"

#include <algorithm>
#include <string>

#include "agree/combinatorics.hpp"
#include "agree/error.hpp"

namespace agree {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MarkNotInEdge: return "MarkNotInEdge";
    case ErrorKind::DuplicateBoundary: return "DuplicateBoundary";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::BadParity: return "BadParity";
    case ErrorKind::WrongVariant: return "WrongVariant";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::OrderNotOverSubset: return "OrderNotOverSubset";
    case ErrorKind::ColoringSpaceTooLarge: return "ColoringSpaceTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_token(MarkVariant variant) {
  switch (variant) {
    case MarkVariant::TwoExtreme: return "two-extreme";
    case MarkVariant::MinMarked: return "min-marked";
    case MarkVariant::OneExtreme: return "one-extreme";
    case MarkVariant::MinMax: return "min-max";
  }
  return "";
}

std::optional<MarkVariant> variant_from_token(std::string_view token) {
  for (auto v : {MarkVariant::TwoExtreme, MarkVariant::MinMarked,
                 MarkVariant::OneExtreme, MarkVariant::MinMax}) {
    if (to_token(v) == token) return v;
  }
  return std::nullopt;
}

bool MarkedEdge::contains(Vertex v) const {
  return std::binary_search(verts.begin(), verts.end(), v);
}

namespace {

std::string describe(const MarkedEdge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.verts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e.verts[i]);
  }
  return s + "}";
}

void validate_edge(int n, int r, MarkVariant variant, MarkedEdge& e) {
  if (static_cast<int>(e.verts.size()) != r) {
    throw Error(ErrorKind::BadArity, "edge " + describe(e) + " does not have r = " +
                                         std::to_string(r) + " vertices");
  }
  for (std::size_t i = 0; i < e.verts.size(); ++i) {
    if (e.verts[i] < 1 || e.verts[i] > static_cast<Vertex>(n)) {
      throw Error(ErrorKind::BadArity, "edge " + describe(e) + " has a vertex outside 1.." +
                                           std::to_string(n));
    }
    if (i && e.verts[i] <= e.verts[i - 1]) {
      throw Error(ErrorKind::BadArity,
                  "edge " + describe(e) + " is not strictly increasing");
    }
  }
  auto require_member = [&](Vertex v) {
    if (!e.contains(v)) {
      throw Error(ErrorKind::MarkNotInEdge,
                  "mark " + std::to_string(v) + " not in edge " + describe(e));
    }
  };
  switch (variant) {
    case MarkVariant::TwoExtreme:
      require_member(e.mark.first);
      require_member(e.mark.second);
      if (e.mark.first == e.mark.second) {
        throw Error(ErrorKind::DuplicateBoundary,
                    "boundary of " + describe(e) + " is not a pair");
      }
      if (e.mark.first > e.mark.second) std::swap(e.mark.first, e.mark.second);
      break;
    case MarkVariant::MinMarked:
    case MarkVariant::OneExtreme:
      require_member(e.mark.first);
      e.mark.second = 0;
      break;
    case MarkVariant::MinMax:
      require_member(e.mark.first);
      require_member(e.mark.second);
      if (e.mark.first == e.mark.second) {
        throw Error(ErrorKind::DuplicateBoundary,
                    "min and max of " + describe(e) + " coincide");
      }
      break;
  }
}

}  // namespace

MarkedHypergraph MarkedHypergraph::make(int n, int r, MarkVariant variant,
                                        std::vector<MarkedEdge> edges,
                                        bool is_clique) {
  if (r < 3) throw Error(ErrorKind::BadArity, "r must be at least 3");
  if (n < 0) throw Error(ErrorKind::BadArity, "negative vertex count");
  for (auto& e : edges) validate_edge(n, r, variant, e);
  std::sort(edges.begin(), edges.end(),
            [](const MarkedEdge& a, const MarkedEdge& b) { return a.verts < b.verts; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].verts == edges[i - 1].verts) {
      throw Error(ErrorKind::DuplicateEdge, "repeated edge " + describe(edges[i]));
    }
  }
  // Sorted and duplicate-free, so the count alone certifies completeness.
  if (is_clique && edges.size() != binomial(n, r)) {
    throw Error(ErrorKind::BadArity, "clique on " + std::to_string(n) +
                                         " vertices needs all " +
                                         std::to_string(binomial(n, r)) + " edges");
  }

  MarkedHypergraph h;
  h.n_ = n;
  h.r_ = r;
  h.variant_ = variant;
  h.is_clique_ = is_clique;
  h.edges_ = std::move(edges);

  h.incidence_offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
  for (const auto& e : h.edges_) {
    for (Vertex v : e.verts) ++h.incidence_offsets_[v + 1];
  }
  for (std::size_t i = 1; i < h.incidence_offsets_.size(); ++i) {
    h.incidence_offsets_[i] += h.incidence_offsets_[i - 1];
  }
  h.incidence_.resize(h.incidence_offsets_.back());
  std::vector<std::uint32_t> fill(h.incidence_offsets_.begin(),
                                  h.incidence_offsets_.end() - 1);
  for (std::uint32_t i = 0; i < h.edges_.size(); ++i) {
    for (Vertex v : h.edges_[i].verts) h.incidence_[fill[v]++] = i;
  }
  return h;
}

std::span<const std::uint32_t> MarkedHypergraph::edges_of(Vertex v) const {
  if (v < 1 || v > static_cast<Vertex>(n_)) return {};
  return std::span<const std::uint32_t>(incidence_).subspan(
      incidence_offsets_[v], incidence_offsets_[v + 1] - incidence_offsets_[v]);
}

MarkedHypergraph build_clique(int n, int r, MarkVariant variant,
                              std::span<const Mark> marks) {
  if (r < 3 || n < r) {
    throw Error(ErrorKind::BadArity, "clique requires n >= r >= 3");
  }
  const auto subsets = all_subsets(n, r);
  if (marks.size() != subsets.size()) {
    throw Error(ErrorKind::BadArity, "expected " + std::to_string(subsets.size()) +
                                         " marks, got " + std::to_string(marks.size()));
  }
  std::vector<MarkedEdge> edges;
  edges.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    edges.push_back({subsets[i], marks[i]});
  }
  return MarkedHypergraph::make(n, r, variant, std::move(edges), true);
}

LinearOrder::LinearOrder(std::vector<Vertex> seq) : seq_(std::move(seq)) {
  Vertex top = 0;
  for (Vertex v : seq_) top = std::max(top, v);
  rank_.assign(seq_.empty() ? 0 : static_cast<std::size_t>(top) + 1, -1);
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    const Vertex v = seq_[i];
    if (v == 0 || rank_[v] != -1) {
      throw Error(ErrorKind::OrderNotOverSubset,
                  "vertex " + std::to_string(v) + " is invalid or repeated");
    }
    rank_[v] = static_cast<int>(i);
  }
}

LinearOrder dual(const LinearOrder& order) {
  std::vector<Vertex> seq(order.seq().rbegin(), order.seq().rend());
  return LinearOrder(std::move(seq));
}

LinearOrder restrict_order(const LinearOrder& order, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> seq;
  for (Vertex v : order.seq()) {
    if (std::binary_search(sorted.begin(), sorted.end(), v)) seq.push_back(v);
  }
  return LinearOrder(std::move(seq));
}

bool edge_agrees(MarkVariant variant, const MarkedEdge& edge,
                 const LinearOrder& order) {
  Vertex lo = edge.verts.front();
  Vertex hi = lo;
  int lo_pos = order.position(lo);
  int hi_pos = lo_pos;
  for (Vertex v : edge.verts) {
    const int p = order.position(v);
    if (p < lo_pos) lo_pos = p, lo = v;
    if (p > hi_pos) hi_pos = p, hi = v;
  }
  switch (variant) {
    case MarkVariant::TwoExtreme:
      return std::min(lo, hi) == edge.mark.first && std::max(lo, hi) == edge.mark.second;
    case MarkVariant::MinMarked:
      return lo == edge.mark.first;
    case MarkVariant::OneExtreme:
      return lo == edge.mark.first || hi == edge.mark.first;
    case MarkVariant::MinMax:
      return lo == edge.mark.first && hi == edge.mark.second;
  }
  return false;
}

AgreeVerdict check_order(const MarkedHypergraph& h, const LinearOrder& order) {
  if (order.max_vertex() > static_cast<Vertex>(h.n())) {
    throw Error(ErrorKind::OrderNotOverSubset,
                "order names vertex " + std::to_string(order.max_vertex()) +
                    " but n = " + std::to_string(h.n()));
  }
  for (const auto& e : h.edges()) {
    const bool inside = std::all_of(e.verts.begin(), e.verts.end(),
                                    [&](Vertex v) { return order.contains(v); });
    if (inside && !edge_agrees(h.variant(), e, order)) return {false, e};
  }
  return {};
}

LinearOrder Induced::lift(const LinearOrder& local) const {
  std::vector<Vertex> seq;
  seq.reserve(local.size());
  for (Vertex v : local.seq()) seq.push_back(labels.at(v - 1));
  return LinearOrder(std::move(seq));
}

Induced induced(const MarkedHypergraph& h, std::span<const Vertex> subset) {
  std::vector<Vertex> labels(subset.begin(), subset.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<Vertex> local(static_cast<std::size_t>(h.n()) + 1, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || labels[i] > static_cast<Vertex>(h.n())) {
      throw Error(ErrorKind::OrderNotOverSubset,
                  "vertex " + std::to_string(labels[i]) + " outside the hypergraph");
    }
    local[labels[i]] = static_cast<Vertex>(i + 1);
  }
  auto map = [&](Vertex v) { return local[v]; };
  std::vector<MarkedEdge> edges;
  for (const auto& e : h.edges()) {
    if (!std::all_of(e.verts.begin(), e.verts.end(), [&](Vertex v) { return local[v] != 0; })) {
      continue;
    }
    MarkedEdge out;
    out.verts.reserve(e.verts.size());
    for (Vertex v : e.verts) out.verts.push_back(map(v));
    out.mark.first = map(e.mark.first);
    out.mark.second = e.mark.second ? map(e.mark.second) : 0;
    edges.push_back(std::move(out));
  }
  return {MarkedHypergraph::make(static_cast<int>(labels.size()), h.r(), h.variant(),
                                 std::move(edges), h.is_clique()),
          std::move(labels)};
}

Induced remove_vertex(const MarkedHypergraph& h, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex u = 1; u <= static_cast<Vertex>(h.n()); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced(h, keep);
}

}  // namespace agree
