#pragma once

#include <string>
#include <string_view>

#include "agree/helly.hpp"
#include "agree/model.hpp"
#include "agree/oracle.hpp"

namespace agree::io {

// Instance file:
//   mh1 <variant> r=<r> n=<n> complete=<0|1>
//   <v_1> ... <v_r> | <mark> [<mark>]
// One line per edge in lexicographic order, LF endings, single spaces.
// Two-extreme marks are written ascending, min-max marks as (A, B).
std::string serialize_instance(const MarkedHypergraph& h);

// Accepts edges in any order and two-extreme marks in either order; anything
// else malformed, and any structural violation, throws Error{ParseError}.
MarkedHypergraph parse_instance(std::string_view text);

std::string format_order(const LinearOrder& order);      // "3,1,2"
LinearOrder parse_order(std::string_view text);           // ParseError / OrderNotOverSubset
std::string format_edge(const MarkedEdge& edge, MarkVariant variant);  // "1 2 3 | 1 3"

// "EXISTS yes\nORDER 1,2,3\n" or "EXISTS no\n".
std::string format_verdict(const oracle::OracleResult& result);
// "AGREES yes\n" or "AGREES no\nWITNESS <edge>\n".
std::string format_agreement(const AgreeVerdict& verdict, MarkVariant variant);

std::string format_scan_report(const helly::HellyScanReport& report);
std::string format_census_report(const helly::CensusReport& report);

}  // namespace agree::io
