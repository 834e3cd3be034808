#include "agree/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "agree/error.hpp"

namespace agree::oracle {

namespace {

// Left-to-right placement search. A vertex may be appended to the prefix only
// if no edge inside the subset is already violated; with all remaining
// members of an edge coming later, the per-variant tests below are exact.
class Search {
 public:
  Search(const MarkedHypergraph& h, std::span<const Vertex> subset)
      : h_(h), in_subset_(static_cast<std::size_t>(h.n()) + 1, 0) {
    for (Vertex v : subset) {
      if (v < 1 || v > static_cast<Vertex>(h.n()) || in_subset_[v]) {
        throw Error(ErrorKind::OrderNotOverSubset,
                    "subset vertex " + std::to_string(v) + " invalid or repeated");
      }
      in_subset_[v] = 1;
    }
    for (Vertex v = 1; v <= static_cast<Vertex>(h.n()); ++v) {
      if (in_subset_[v]) candidates_.push_back(v);
    }
    relevant_.assign(h.edge_count(), 0);
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      const auto& verts = h.edge(i).verts;
      relevant_[i] = std::all_of(verts.begin(), verts.end(),
                                 [&](Vertex v) { return in_subset_[v] != 0; });
    }
    incident_.resize(static_cast<std::size_t>(h.n()) + 1);
    for (Vertex v : candidates_) {
      for (auto e : h.edges_of(v)) {
        if (relevant_[e]) incident_[v].push_back(e);
      }
    }
    placed_count_.assign(h.edge_count(), 0);
    placed_.assign(static_cast<std::size_t>(h.n()) + 1, 0);
  }

  std::span<const Vertex> candidates() const { return candidates_; }

  // Visits every agreeing permutation whose first vertex is `first` (or all,
  // when first == 0) in lexicographic order; stops when visit returns false.
  void run(Vertex first, const std::function<bool(const LinearOrder&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    prefix_.clear();
    if (candidates_.empty()) {
      emit();
      return;
    }
    if (first != 0) {
      if (try_place(first)) {
        extend();
        unplace(first);
      }
    } else {
      extend();
    }
  }

 private:
  bool admissible(Vertex v) const {
    const int r = h_.r();
    for (auto e : incident_[v]) {
      const int cnt = placed_count_[e];
      const Mark& m = h_.edge(e).mark;
      switch (h_.variant()) {
        case MarkVariant::TwoExtreme: {
          const bool boundary = v == m.first || v == m.second;
          if (cnt == 0) {
            if (!boundary) return false;
          } else if (boundary && cnt != r - 1) {
            return false;
          }
          break;
        }
        case MarkVariant::MinMarked:
          if (cnt == 0 && v != m.first) return false;
          break;
        case MarkVariant::OneExtreme:
          if (v == m.first && cnt != 0 && cnt != r - 1) return false;
          break;
        case MarkVariant::MinMax:
          if (cnt == 0 && v != m.first) return false;
          if (v == m.second && cnt != r - 1) return false;
          break;
      }
    }
    return true;
  }

  bool try_place(Vertex v) {
    if (!admissible(v)) return false;
    for (auto e : incident_[v]) ++placed_count_[e];
    placed_[v] = 1;
    prefix_.push_back(v);
    return true;
  }

  void unplace(Vertex v) {
    prefix_.pop_back();
    placed_[v] = 0;
    for (auto e : incident_[v]) --placed_count_[e];
  }

  void emit() {
    LinearOrder order(prefix_);
    // Pruning only affects speed; this check alone decides what is reported.
    if (!check_order(h_, order).agrees) return;
    if (!(*visit_)(order)) stopped_ = true;
  }

  void extend() {
    if (prefix_.size() == candidates_.size()) {
      emit();
      return;
    }
    for (Vertex v : candidates_) {
      if (stopped_) return;
      if (placed_[v] || !try_place(v)) continue;
      extend();
      unplace(v);
    }
  }

  const MarkedHypergraph& h_;
  std::vector<char> in_subset_;
  std::vector<Vertex> candidates_;
  std::vector<char> relevant_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<int> placed_count_;
  std::vector<char> placed_;
  std::vector<Vertex> prefix_;
  const std::function<bool(const LinearOrder&)>* visit_ = nullptr;
  bool stopped_ = false;
};

// Runs `body(branch_index, first_vertex)` for each first-vertex branch.
template <typename Body>
void for_each_branch(std::span<const Vertex> candidates, int jobs, Body&& body) {
  const int branches = static_cast<int>(candidates.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(jobs, 1)) if (jobs > 1)
  for (int b = 0; b < branches; ++b) {
    try {
      body(b, candidates[b]);
    } catch (...) {
#pragma omp critical(agree_oracle_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<Vertex> all_vertices(const MarkedHypergraph& h) {
  std::vector<Vertex> all(static_cast<std::size_t>(h.n()));
  std::iota(all.begin(), all.end(), 1u);
  return all;
}

OracleResult decide(const MarkedHypergraph& h, std::span<const Vertex> subset, int jobs) {
  Search probe(h, subset);
  const auto candidates = std::vector<Vertex>(probe.candidates().begin(),
                                              probe.candidates().end());
  if (candidates.empty() || jobs <= 1) {
    OracleResult result;
    probe.run(0, [&](const LinearOrder& order) {
      result.exists = true;
      result.order = order;
      return false;
    });
    return result;
  }

  // Lowest successful branch wins; branches above it give up early.
  std::atomic<int> best{static_cast<int>(candidates.size())};
  std::vector<std::optional<LinearOrder>> found(candidates.size());
  for_each_branch(candidates, jobs, [&](int b, Vertex first) {
    if (b > best.load()) return;
    Search search(h, subset);
    search.run(first, [&](const LinearOrder& order) {
      found[b] = order;
      int cur = best.load();
      while (b < cur && !best.compare_exchange_weak(cur, b)) {
      }
      return false;
    });
  });
  OracleResult result;
  for (auto& f : found) {
    if (f) {
      result.exists = true;
      result.order = std::move(f);
      break;
    }
  }
  return result;
}

OracleResult decide(const MarkedHypergraph& h, int jobs) {
  const auto all = all_vertices(h);
  return decide(h, all, jobs);
}

std::vector<LinearOrder> enumerate(const MarkedHypergraph& h,
                                   std::span<const Vertex> subset,
                                   std::optional<std::size_t> limit, int jobs) {
  Search probe(h, subset);
  const auto candidates = std::vector<Vertex>(probe.candidates().begin(),
                                              probe.candidates().end());
  const std::size_t cap = limit.value_or(static_cast<std::size_t>(-1));
  if (cap == 0) return {};
  std::vector<std::vector<LinearOrder>> per_branch(std::max<std::size_t>(candidates.size(), 1));
  if (candidates.empty()) {
    probe.run(0, [&](const LinearOrder& order) {
      per_branch[0].push_back(order);
      return true;
    });
  } else {
    for_each_branch(candidates, jobs, [&](int b, Vertex first) {
      Search search(h, subset);
      search.run(first, [&](const LinearOrder& order) {
        per_branch[b].push_back(order);
        return per_branch[b].size() < cap;
      });
    });
  }
  std::vector<LinearOrder> out;
  for (auto& branch : per_branch) {
    for (auto& order : branch) {
      if (out.size() == cap) return out;
      out.push_back(std::move(order));
    }
  }
  return out;
}

OracleResult count(const MarkedHypergraph& h, std::span<const Vertex> subset, int jobs) {
  Search probe(h, subset);
  const auto candidates = std::vector<Vertex>(probe.candidates().begin(),
                                              probe.candidates().end());
  std::vector<std::uint64_t> counts(std::max<std::size_t>(candidates.size(), 1), 0);
  std::vector<std::optional<LinearOrder>> firsts(counts.size());
  auto tally = [&](std::size_t b) {
    return [&, b](const LinearOrder& order) {
      if (counts[b]++ == 0) firsts[b] = order;
      return true;
    };
  };
  if (candidates.empty()) {
    probe.run(0, tally(0));
  } else {
    for_each_branch(candidates, jobs, [&](int b, Vertex first) {
      Search search(h, subset);
      search.run(first, tally(static_cast<std::size_t>(b)));
    });
  }
  OracleResult result;
  result.count = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  for (auto& f : firsts) {
    if (f) {
      result.exists = true;
      result.order = std::move(f);
      break;
    }
  }
  return result;
}

OracleResult count(const MarkedHypergraph& h, int jobs) {
  const auto all = all_vertices(h);
  return count(h, all, jobs);
}

}  // namespace agree::oracle
