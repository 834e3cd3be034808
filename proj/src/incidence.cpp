#include "agree/incidence.hpp"

#include <algorithm>
#include <tuple>

#include "agree/combinatorics.hpp"
#include "agree/error.hpp"

namespace agree::incidence {

IncidenceMatrix::IncidenceMatrix(const MarkedHypergraph& h)
    : n_(h.n()), r_(h.r()), variant_(h.variant()), clique_(h.is_clique()) {
  if (variant_ != MarkVariant::MinMarked && variant_ != MarkVariant::OneExtreme) {
    throw Error(ErrorKind::WrongVariant,
                "incidence matrix needs a min-marked or one-extreme hypergraph");
  }
  rows_.reserve(h.edge_count());
  marked_.reserve(h.edge_count());
  by_col_.resize(static_cast<std::size_t>(n_) + 1);
  for (std::uint32_t i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    std::vector<Entry> row;
    row.reserve(e.verts.size());
    for (Vertex v : e.verts) {
      row.push_back({v, static_cast<std::int8_t>(v == e.mark.first ? -1 : 1)});
      by_col_[v].push_back(i);
    }
    rows_.push_back(std::move(row));
    marked_.push_back(e.mark.first);
  }
}

int IncidenceMatrix::at(std::size_t i, Vertex col) const {
  const auto& row = rows_[i];
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& a, Vertex c) { return a.col < c; });
  return it != row.end() && it->col == col ? it->value : 0;
}

namespace {

bool in_row(const IncidenceMatrix& m, std::size_t row, Vertex col) {
  return m.at(row, col) != 0;
}

void require(const IncidenceMatrix& m, MarkVariant variant, const char* what) {
  if (m.variant() != variant) {
    throw Error(ErrorKind::WrongVariant, std::string(what) + " requires a " +
                                             std::string(to_token(variant)) + " matrix");
  }
}

// Partner rows f > e that may form a pattern with e. Every pattern handled
// here contains the -1 of row e inside row f, so the partners of e are the
// rows with a nonzero in column marked(e). The localized variant instead
// walks the r(n - r) neighbours e - x + y of a clique row.
template <typename Visit>
void for_each_partner(const IncidenceMatrix& m, std::uint32_t e, bool localized,
                      std::vector<std::uint32_t>& scratch, Visit&& visit) {
  if (!localized) {
    for (auto f : m.rows_with(m.marked(e))) {
      if (f > e) visit(f);
    }
    return;
  }
  // Every caller needs marked(e) in f, so it is never the dropped vertex.
  const int n = m.cols();
  const int r = m.r();
  thread_local std::vector<Vertex> verts, swapped;
  thread_local std::vector<std::uint64_t> choose;  // choose[a * (r + 1) + b] = C(a, b)
  if (choose.size() != static_cast<std::size_t>((n + 1) * (r + 1))) {
    choose.assign(static_cast<std::size_t>((n + 1) * (r + 1)), 0);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= r; ++b) choose[a * (r + 1) + b] = binomial(a, b);
  }
  verts.clear();
  for (const auto& entry : m.row(e)) verts.push_back(entry.col);
  scratch.clear();
  for (std::size_t drop = 0; drop < verts.size(); ++drop) {
    if (verts[drop] == m.marked(e)) continue;
    for (Vertex y = 1; y <= static_cast<Vertex>(n); ++y) {
      if (std::binary_search(verts.begin(), verts.end(), y)) continue;
      swapped.assign(verts.begin(), verts.end());
      swapped.erase(swapped.begin() + static_cast<std::ptrdiff_t>(drop));
      swapped.insert(std::upper_bound(swapped.begin(), swapped.end(), y), y);
      std::uint64_t later = 0;
      for (int i = 0; i < r; ++i) later += choose[(n - static_cast<int>(swapped[i])) * (r + 1) + r - i];
      const auto f = static_cast<std::uint32_t>(choose[n * (r + 1) + r] - 1 - later);
      if (f > e) scratch.push_back(f);
    }
  }
  std::sort(scratch.begin(), scratch.end());
  for (auto f : scratch) visit(f);
}

template <typename RowScan>
std::vector<PatternHit> scan_rows(const IncidenceMatrix& m, ScanOptions opts,
                                  RowScan&& scan_row) {
  if (opts.localized) {
    if (!m.is_clique() || m.cols() < m.r() + 1) {
      throw Error(ErrorKind::WrongVariant,
                  "localized scan needs a clique with n >= r + 1");
    }
  }
  const auto rows = static_cast<std::int64_t>(m.rows());
  if (opts.first_only) {
    std::vector<std::uint32_t> scratch;
    std::vector<PatternHit> hits;
    for (std::int64_t e = 0; e < rows; ++e) {
      scan_row(static_cast<std::uint32_t>(e), scratch, hits);
      if (!hits.empty()) return {hits.front()};
    }
    return {};
  }
  std::vector<std::vector<PatternHit>> per_row(m.rows());
#pragma omp parallel num_threads(std::max(opts.jobs, 1)) if (opts.jobs > 1)
  {
    std::vector<std::uint32_t> scratch;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t e = 0; e < rows; ++e) {
      scan_row(static_cast<std::uint32_t>(e), scratch, per_row[e]);
    }
  }
  std::vector<PatternHit> out;
  for (auto& hits : per_row) out.insert(out.end(), hits.begin(), hits.end());
  return out;
}

bool hit_less(const PatternHit& a, const PatternHit& b) {
  return std::tie(a.row_e, a.row_f, a.col_a, a.col_b, a.kind) <
         std::tie(b.row_e, b.row_f, b.col_a, b.col_b, b.kind);
}

}  // namespace

std::vector<PatternHit> find_forbidden(const IncidenceMatrix& m, ScanOptions opts) {
  require(m, MarkVariant::MinMarked, "find_forbidden");
  return scan_rows(m, opts, [&](std::uint32_t e, std::vector<std::uint32_t>& scratch,
                                std::vector<PatternHit>& hits) {
    const Vertex a = m.marked(e);
    for_each_partner(m, e, opts.localized, scratch, [&](std::uint32_t f) {
      const Vertex b = m.marked(f);
      if (a != b && in_row(m, f, a) && in_row(m, e, b)) {
        hits.push_back({PatternKind::Forbidden, e, f, std::min(a, b), std::max(a, b)});
      }
    });
  });
}

std::vector<PatternHit> find_precedence(const IncidenceMatrix& m, ScanOptions opts) {
  require(m, MarkVariant::MinMarked, "find_precedence");
  // Precedence pairs need not share marked(e), so scan every later row.
  if (opts.localized) {
    throw Error(ErrorKind::WrongVariant, "precedence scan has no localized form");
  }
  return scan_rows(m, opts, [&](std::uint32_t e, std::vector<std::uint32_t>&,
                                std::vector<PatternHit>& hits) {
    const Vertex a = m.marked(e);
    for (std::uint32_t f = e + 1; f < m.rows(); ++f) {
      const Vertex b = m.marked(f);
      if (a == b) continue;
      const bool b_in_e = in_row(m, e, b);
      const bool a_in_f = in_row(m, f, a);
      // Row e reads (-1, 1) on (a, b) and row f reads (0, -1): a before b.
      if (b_in_e && !a_in_f) hits.push_back({PatternKind::Precedence, e, f, a, b});
      if (a_in_f && !b_in_e) hits.push_back({PatternKind::Precedence, e, f, b, a});
    }
  });
}

std::vector<PatternHit> find_sf(const IncidenceMatrix& m, ScanOptions opts) {
  require(m, MarkVariant::OneExtreme, "find_sf");
  return scan_rows(m, opts, [&](std::uint32_t e, std::vector<std::uint32_t>& scratch,
                                std::vector<PatternHit>& hits) {
    const Vertex a = m.marked(e);
    const auto before = hits.size();
    for_each_partner(m, e, opts.localized, scratch, [&](std::uint32_t f) {
      const Vertex b = m.marked(f);
      if (a == b) {
        for (const auto& entry : m.row(e)) {
          if (entry.col != a && in_row(m, f, entry.col)) {
            hits.push_back({PatternKind::S, e, f, std::min(a, entry.col),
                            std::max(a, entry.col)});
          }
        }
      } else if (in_row(m, f, a) && in_row(m, e, b)) {
        hits.push_back({PatternKind::F, e, f, std::min(a, b), std::max(a, b)});
      }
    });
    std::sort(hits.begin() + static_cast<std::ptrdiff_t>(before), hits.end(), hit_less);
  });
}

}  // namespace agree::incidence
