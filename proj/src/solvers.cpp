#include "agree/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <queue>

#include "agree/combinatorics.hpp"
#include "agree/error.hpp"
#include "agree/incidence.hpp"
#include "agree/union_find.hpp"

namespace agree::solvers {

namespace {

void require_variant(const MarkedHypergraph& h, MarkVariant variant, const char* who) {
  if (h.variant() != variant) {
    throw Error(ErrorKind::WrongVariant, std::string(who) + " needs a " +
                                             std::string(to_token(variant)) +
                                             " hypergraph, got " +
                                             std::string(to_token(h.variant())));
  }
}

void normalize(PrecedenceDigraph& g) {
  std::sort(g.arcs.begin(), g.arcs.end());
  g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
}

std::vector<Vertex> vertex_range(int n) {
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i + 1);
  return all;
}

OracleResult found(LinearOrder order) {
  OracleResult r;
  r.exists = true;
  r.order = std::move(order);
  return r;
}

// Final gate for every structured answer.
OracleResult verified(const MarkedHypergraph& h, LinearOrder order) {
  if (!check_order(h, order).agrees) {
    throw std::logic_error("structured solver produced a non-agreeing order");
  }
  return found(std::move(order));
}

std::size_t clique_edge_index(const MarkedHypergraph& h, std::vector<Vertex> verts) {
  std::sort(verts.begin(), verts.end());
  return static_cast<std::size_t>(subset_rank(verts, h.n()));
}

}  // namespace

std::optional<std::vector<Vertex>> PrecedenceDigraph::topological_order() const {
  const std::size_t count = nodes.size();
  auto index_of = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  std::vector<std::vector<std::size_t>> out(count);
  std::vector<std::size_t> indegree(count, 0);
  for (const auto& [from, to] : arcs) {
    const auto a = index_of(from), b = index_of(to);
    out[a].push_back(b);
    ++indegree[b];
  }
  // Node indices follow vertex order, so a min-heap yields the least order.
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < count; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<Vertex> order;
  order.reserve(count);
  while (!ready.empty()) {
    const auto i = ready.top();
    ready.pop();
    order.push_back(nodes[i]);
    for (auto j : out[i]) {
      if (--indegree[j] == 0) ready.push(j);
    }
  }
  if (order.size() != count) return std::nullopt;
  return order;
}

PrecedenceDigraph d_graph(const MarkedHypergraph& h) {
  require_variant(h, MarkVariant::MinMarked, "d_graph");
  PrecedenceDigraph g;
  g.origin = DigraphOrigin::DGraph;
  std::vector<char> is_marked(static_cast<std::size_t>(h.n()) + 1, 0);
  for (const auto& e : h.edges()) is_marked[e.mark.first] = 1;
  for (Vertex v = 1; v <= static_cast<Vertex>(h.n()); ++v) {
    if (is_marked[v]) g.nodes.push_back(v);
  }
  for (const auto& e : h.edges()) {
    for (Vertex v : e.verts) {
      if (v != e.mark.first && is_marked[v]) g.arcs.emplace_back(e.mark.first, v);
    }
  }
  normalize(g);
  return g;
}

PrecedenceDigraph min_max_digraph(const MarkedHypergraph& h) {
  require_variant(h, MarkVariant::MinMax, "min_max_digraph");
  PrecedenceDigraph g;
  g.origin = DigraphOrigin::MinMax;
  g.nodes = vertex_range(h.n());
  for (const auto& e : h.edges()) {
    for (Vertex v : e.verts) {
      if (v != e.mark.first) g.arcs.emplace_back(e.mark.first, v);
      if (v != e.mark.second) g.arcs.emplace_back(v, e.mark.second);
    }
  }
  normalize(g);
  return g;
}

PrecedenceDigraph ab_graph(const MarkedHypergraph& h, const std::vector<EdgeColor>& colors) {
  require_variant(h, MarkVariant::OneExtreme, "ab_graph");
  PrecedenceDigraph g;
  g.origin = DigraphOrigin::AB;
  g.nodes = vertex_range(h.n());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    const Vertex mark = e.mark.first;
    for (Vertex v : e.verts) {
      if (v == mark) continue;
      if (colors[i] == EdgeColor::A) {
        g.arcs.emplace_back(mark, v);
      } else {
        g.arcs.emplace_back(v, mark);
      }
    }
  }
  normalize(g);
  return g;
}

SFGraph sf_graph(const MarkedHypergraph& h, int jobs) {
  require_variant(h, MarkVariant::OneExtreme, "sf_graph");
  const incidence::IncidenceMatrix m(h);
  incidence::ScanOptions opts;
  opts.jobs = jobs;
  SFGraph g;
  for (const auto& hit : incidence::find_sf(m, opts)) {
    auto& list = hit.kind == incidence::PatternKind::S ? g.s_edges : g.f_edges;
    if (list.empty() || list.back() != std::pair{hit.row_e, hit.row_f}) {
      list.emplace_back(hit.row_e, hit.row_f);
    }
  }

  const auto edges = static_cast<std::uint32_t>(h.edge_count());
  UnionFind uf(edges);
  for (const auto& [a, b] : g.s_edges) uf.unite(a, b);
  g.class_of.assign(edges, 0);
  std::vector<std::int64_t> class_of_root(edges, -1);
  for (std::uint32_t e = 0; e < edges; ++e) {
    const auto root = uf.find(e);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<std::int64_t>(g.classes.size());
      g.classes.emplace_back();
    }
    g.class_of[e] = static_cast<std::uint32_t>(class_of_root[root]);
    g.classes[g.class_of[e]].push_back(e);
  }

  for (const auto& [a, b] : g.f_edges) {
    auto ca = g.class_of[a], cb = g.class_of[b];
    if (ca == cb) {
      g.f_loop = true;
      continue;
    }
    if (ca > cb) std::swap(ca, cb);
    g.compound_adjacency.emplace_back(ca, cb);
  }
  std::sort(g.compound_adjacency.begin(), g.compound_adjacency.end());
  g.compound_adjacency.erase(
      std::unique(g.compound_adjacency.begin(), g.compound_adjacency.end()),
      g.compound_adjacency.end());

  // Two-coloring by BFS; an F-loop is an odd cycle of length one.
  const auto classes = g.classes.size();
  std::vector<std::vector<std::uint32_t>> adj(classes);
  for (const auto& [a, b] : g.compound_adjacency) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  g.bipartite = !g.f_loop;
  g.component_of.assign(classes, 0);
  g.side.assign(classes, 0);
  std::vector<char> seen(classes, 0);
  for (std::uint32_t root = 0; root < classes; ++root) {
    if (seen[root]) continue;
    const auto comp = g.component_count++;
    std::deque<std::uint32_t> queue{root};
    seen[root] = 1;
    g.component_of[root] = comp;
    while (!queue.empty()) {
      const auto c = queue.front();
      queue.pop_front();
      for (auto d : adj[c]) {
        if (!seen[d]) {
          seen[d] = 1;
          g.component_of[d] = comp;
          g.side[d] = g.side[c] ^ 1;
          queue.push_back(d);
        } else if (g.side[d] == g.side[c]) {
          g.bipartite = false;
        }
      }
    }
  }
  return g;
}

ExtremalReport extremal_vertices(const MarkedHypergraph& h) {
  require_variant(h, MarkVariant::TwoExtreme, "extremal_vertices");
  std::vector<char> interior(static_cast<std::size_t>(h.n()) + 1, 0);
  for (const auto& e : h.edges()) {
    for (Vertex v : e.verts) {
      if (v != e.mark.first && v != e.mark.second) interior[v] = 1;
    }
  }
  ExtremalReport report;
  for (Vertex v = 1; v <= static_cast<Vertex>(h.n()); ++v) {
    if (!interior[v]) report.extremal_vertices.push_back(v);
  }
  return report;
}

SimilarityClasses similarity_classes(const MarkedHypergraph& h, Vertex pivot) {
  require_variant(h, MarkVariant::TwoExtreme, "similarity_classes");
  if (h.r() != 3) throw Error(ErrorKind::WrongArity, "similarity classes need r = 3");
  if (!h.is_clique()) throw Error(ErrorKind::WrongVariant, "similarity classes need a clique");
  if (pivot < 1 || pivot > static_cast<Vertex>(h.n())) {
    throw Error(ErrorKind::OrderNotOverSubset, "pivot outside the vertex set");
  }
  const auto n = static_cast<Vertex>(h.n());
  UnionFind uf(static_cast<std::size_t>(n) + 1);
  for (Vertex u = 1; u <= n; ++u) {
    if (u == pivot) continue;
    for (Vertex v = u + 1; v <= n; ++v) {
      if (v == pivot) continue;
      const auto& e = h.edge(clique_edge_index(h, {pivot, u, v}));
      // Not similar exactly when the pivot sits between u and v.
      if (!(e.mark.first == u && e.mark.second == v)) uf.unite(u, v);
    }
  }
  SimilarityClasses out;
  out.pivot = pivot;
  std::vector<std::int64_t> slot(static_cast<std::size_t>(n) + 1, -1);
  for (Vertex v = 1; v <= n; ++v) {
    if (v == pivot) continue;
    const auto root = uf.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(out.classes.size());
      out.classes.emplace_back();
    }
    out.classes[slot[root]].push_back(v);
  }
  return out;
}

OracleResult solve_min_marked(const MarkedHypergraph& h) {
  const auto g = d_graph(h);
  const auto topo = g.topological_order();
  if (!topo) return {};
  std::vector<Vertex> seq = *topo;
  std::vector<char> marked(static_cast<std::size_t>(h.n()) + 1, 0);
  for (Vertex v : seq) marked[v] = 1;
  for (Vertex v = 1; v <= static_cast<Vertex>(h.n()); ++v) {
    if (!marked[v]) seq.push_back(v);
  }
  return verified(h, LinearOrder(std::move(seq)));
}

OracleResult solve_min_max(const MarkedHypergraph& h) {
  const auto topo = min_max_digraph(h).topological_order();
  if (!topo) return {};
  return verified(h, LinearOrder(*topo));
}

OneExtremeSolution solve_one_extreme_colored(const MarkedHypergraph& h, SolveOptions opts) {
  const auto sf = sf_graph(h, opts.jobs);
  OneExtremeSolution out;
  if (!sf.bipartite) return out;
  const auto c = sf.component_count;
  if (c > static_cast<std::uint32_t>(opts.max_components) || c >= 63) {
    throw Error(ErrorKind::ColoringSpaceTooLarge,
                std::to_string(c) + " components exceed the cap of " +
                    std::to_string(opts.max_components));
  }

  // Component 0 is the most significant digit; digit 0 keeps the root's
  // class on color A.
  auto coloring = [&](std::uint64_t mask) {
    std::vector<EdgeColor> colors(h.edge_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      const auto cls = sf.class_of[e];
      const auto comp = sf.component_of[cls];
      const auto flip = static_cast<std::uint8_t>((mask >> (c - 1 - comp)) & 1u);
      colors[e] = (sf.side[cls] ^ flip) ? EdgeColor::B : EdgeColor::A;
    }
    return colors;
  };

  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << c);
  std::atomic<std::int64_t> best{total};
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(opts.jobs, 1)) if (opts.jobs > 1)
  for (std::int64_t mask = 0; mask < total; ++mask) {
    if (mask > best.load()) continue;
    if (ab_graph(h, coloring(static_cast<std::uint64_t>(mask))).acyclic()) {
      auto cur = best.load();
      while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
      }
    }
  }
  if (best.load() == total) return out;
  out.coloring = coloring(static_cast<std::uint64_t>(best.load()));
  out.result = verified(h, LinearOrder(*ab_graph(h, out.coloring).topological_order()));
  return out;
}

OracleResult solve_one_extreme(const MarkedHypergraph& h, SolveOptions opts) {
  return solve_one_extreme_colored(h, opts).result;
}

namespace {

std::optional<LinearOrder> oracle_order(const MarkedHypergraph& h, int jobs) {
  return oracle::decide(h, jobs).order;
}

// Definitive: nullopt means no agreeing order exists. Falls back to the
// oracle whenever a constructive step does not apply.
std::optional<LinearOrder> construct_two_extreme(const MarkedHypergraph& h, int jobs) {
  const int n = h.n();
  const int r = h.r();
  if (n <= 2 * r - 2) return oracle_order(h, jobs);

  // The ends of any agreeing order are extremal.
  const auto ext = extremal_vertices(h).extremal_vertices;
  if (ext.size() < 2) return std::nullopt;

  if (r == 3) {
    Vertex pivot = 0;
    for (Vertex v = 1; v <= static_cast<Vertex>(n); ++v) {
      if (!std::binary_search(ext.begin(), ext.end(), v)) {
        pivot = v;
        break;
      }
    }
    const auto sim = similarity_classes(h, pivot);
    if (sim.classes.size() != 2) return oracle_order(h, jobs);

    std::vector<std::vector<Vertex>> halves;
    for (const auto& cls : sim.classes) {
      std::vector<Vertex> part = cls;
      part.push_back(pivot);
      const auto sub = induced(h, part);
      auto local = construct_two_extreme(sub.graph, jobs);
      if (!local) return std::nullopt;
      const auto lifted = sub.lift(*local);
      halves.emplace_back(lifted.seq().begin(), lifted.seq().end());
    }
    // Pivot last in the first half and first in the second.
    auto& left = halves[0];
    auto& right = halves[1];
    if (left.front() == pivot) std::reverse(left.begin(), left.end());
    if (right.back() == pivot) std::reverse(right.begin(), right.end());
    if (left.back() != pivot || right.front() != pivot) return oracle_order(h, jobs);
    left.insert(left.end(), right.begin() + 1, right.end());
    LinearOrder joined(std::move(left));
    if (check_order(h, joined).agrees) return joined;
    return oracle_order(h, jobs);
  }

  // Peel the smaller extremal vertex off as the global minimum.
  const Vertex low = ext.front();
  const Vertex high = ext.back();
  const auto sub = remove_vertex(h, low);
  auto local = construct_two_extreme(sub.graph, jobs);
  if (!local) return std::nullopt;
  const auto lifted = sub.lift(*local);
  std::vector<Vertex> seq(lifted.seq().begin(), lifted.seq().end());
  if (seq.front() == high) std::reverse(seq.begin(), seq.end());
  if (seq.back() != high) return oracle_order(h, jobs);
  seq.insert(seq.begin(), low);
  LinearOrder peeled(std::move(seq));
  if (check_order(h, peeled).agrees) return peeled;
  return oracle_order(h, jobs);
}

}  // namespace

OracleResult solve_two_extreme(const MarkedHypergraph& h, int jobs) {
  require_variant(h, MarkVariant::TwoExtreme, "solve_two_extreme");
  if (!h.is_clique()) {
    throw Error(ErrorKind::WrongVariant, "solve_two_extreme needs a clique");
  }
  auto order = construct_two_extreme(h, jobs);
  if (!order) return {};
  return verified(h, std::move(*order));
}

std::uint64_t count_agreeing(const MarkedHypergraph& h, int jobs) {
  return *oracle::count(h, jobs).count;
}

OracleResult solve(const MarkedHypergraph& h, Method method, int jobs) {
  if (method == Method::Oracle) return oracle::decide(h, jobs);
  switch (h.variant()) {
    case MarkVariant::MinMarked:
      return solve_min_marked(h);
    case MarkVariant::MinMax:
      return solve_min_max(h);
    case MarkVariant::OneExtreme:
      try {
        SolveOptions opts;
        opts.jobs = jobs;
        return solve_one_extreme(h, opts);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::ColoringSpaceTooLarge) throw;
        return oracle::decide(h, jobs);
      }
    case MarkVariant::TwoExtreme:
      if (h.is_clique()) return solve_two_extreme(h, jobs);
      return oracle::decide(h, jobs);
  }
  return oracle::decide(h, jobs);
}

}  // namespace agree::solvers
