#include "agree/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "agree/error.hpp"

namespace agree::io {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<std::uint64_t> to_uint(std::string_view token) {
  std::uint64_t value = 0;
  if (token.empty()) return std::nullopt;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

int keyed_int(std::string_view token, std::string_view key, std::size_t line) {
  if (token.substr(0, key.size()) != key) fail(line, "expected " + std::string(key));
  const auto v = to_uint(token.substr(key.size()));
  if (!v || *v > 1'000'000) fail(line, "bad value in '" + std::string(token) + "'");
  return static_cast<int>(*v);
}

Vertex to_vertex(std::string_view token, std::size_t line) {
  const auto v = to_uint(token);
  if (!v || *v == 0 || *v > 0xFFFFFFFFull) fail(line, "bad vertex '" + std::string(token) + "'");
  return static_cast<Vertex>(*v);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_edge(const MarkedEdge& edge, MarkVariant variant) {
  std::string out;
  for (Vertex v : edge.verts) {
    out += std::to_string(v);
    out += ' ';
  }
  out += "| ";
  out += std::to_string(edge.mark.first);
  if (variant == MarkVariant::TwoExtreme || variant == MarkVariant::MinMax) {
    out += ' ';
    out += std::to_string(edge.mark.second);
  }
  return out;
}

std::string serialize_instance(const MarkedHypergraph& h) {
  std::string out = "mh1 ";
  out += to_token(h.variant());
  out += " r=" + std::to_string(h.r()) + " n=" + std::to_string(h.n()) +
         " complete=" + (h.is_clique() ? "1" : "0") + "\n";
  for (const auto& e : h.edges()) {
    out += format_edge(e, h.variant());
    out += '\n';
  }
  return out;
}

MarkedHypergraph parse_instance(std::string_view text) {
  if (text.find('\r') != std::string_view::npos) fail(1, "CR line endings are not allowed");
  auto lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) fail(1, "empty file");

  const auto header = split(lines[0], ' ');
  if (header.size() != 5 || header[0] != "mh1") fail(1, "malformed header");
  const auto variant = variant_from_token(header[1]);
  if (!variant) fail(1, "unknown variant '" + std::string(header[1]) + "'");
  const int r = keyed_int(header[2], "r=", 1);
  const int n = keyed_int(header[3], "n=", 1);
  if (header[4] != "complete=0" && header[4] != "complete=1") fail(1, "bad complete flag");
  const bool complete = header[4] == "complete=1";
  const std::size_t mark_count =
      (*variant == MarkVariant::TwoExtreme || *variant == MarkVariant::MinMax) ? 2 : 1;

  std::vector<MarkedEdge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tokens = split(lines[i], ' ');
    const auto bar = std::find(tokens.begin(), tokens.end(), "|");
    if (bar == tokens.end()) fail(i + 1, "missing '|'");
    MarkedEdge e;
    for (auto it = tokens.begin(); it != bar; ++it) e.verts.push_back(to_vertex(*it, i + 1));
    const auto marks = static_cast<std::size_t>(tokens.end() - bar - 1);
    if (marks != mark_count) {
      fail(i + 1, "expected " + std::to_string(mark_count) + " mark(s)");
    }
    e.mark.first = to_vertex(*(bar + 1), i + 1);
    if (mark_count == 2) e.mark.second = to_vertex(*(bar + 2), i + 1);
    std::sort(e.verts.begin(), e.verts.end());
    edges.push_back(std::move(e));
  }
  try {
    return MarkedHypergraph::make(n, r, *variant, std::move(edges), complete);
  } catch (const Error& err) {
    throw Error(ErrorKind::ParseError, err.what());
  }
}

std::string format_order(const LinearOrder& order) {
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(order.seq()[i]);
  }
  return out;
}

LinearOrder parse_order(std::string_view text) {
  std::vector<Vertex> seq;
  if (!text.empty()) {
    for (auto token : split(text, ',')) seq.push_back(to_vertex(token, 1));
  }
  return LinearOrder(std::move(seq));
}

std::string format_verdict(const oracle::OracleResult& result) {
  std::string out = std::string("EXISTS ") + yes_no(result.exists) + "\n";
  if (result.exists && result.order) out += "ORDER " + format_order(*result.order) + "\n";
  if (result.count) out += "COUNT " + std::to_string(*result.count) + "\n";
  return out;
}

std::string format_agreement(const AgreeVerdict& verdict, MarkVariant variant) {
  std::string out = std::string("AGREES ") + yes_no(verdict.agrees) + "\n";
  if (verdict.witness_edge) out += "WITNESS " + format_edge(*verdict.witness_edge, variant) + "\n";
  return out;
}

std::string format_scan_report(const helly::HellyScanReport& report) {
  std::ostringstream out;
  out << "SUBSETS " << report.subsets_checked << " FAIL " << report.failing_count
      << " WHOLE " << yes_no(report.whole_exists) << '\n';
  for (const auto& subset : report.failing_subsets) {
    out << "FAILING ";
    for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? "," : "") << subset[i];
    out << '\n';
  }
  return out.str();
}

std::string format_census_report(const helly::CensusReport& report) {
  std::ostringstream out;
  out << "CENSUS " << to_token(report.variant) << " r=" << report.r << " n=" << report.n
      << " k=" << report.k;
  if (report.mode == helly::CensusMode::Exhaustive) {
    out << " mode=exhaustive\n";
  } else {
    out << " mode=random samples=" << report.samples << " seed=" << report.seed << '\n';
  }
  out << "INSTANCES " << report.instances_total << '\n'
      << "HELLY_PASS " << report.instances_helly_k_pass << '\n'
      << "WHOLE_PASS " << report.instances_whole_pass << '\n'
      << "COUNTEREXAMPLES " << report.counterexample_count << '\n';
  for (const auto& c : report.counterexamples) {
    out << "COUNTEREXAMPLE " << c.index << ' ';
    for (std::size_t i = 0; i < c.digits.size(); ++i) out << (i ? "," : "") << c.digits[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace agree::io
