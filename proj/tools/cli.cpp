#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "agree/constructions.hpp"
#include "agree/error.hpp"
#include "agree/helly.hpp"
#include "agree/io.hpp"
#include "agree/oracle.hpp"
#include "agree/solvers.hpp"

namespace agree::cli {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

MarkVariant parse_variant(const std::string& token) {
  const auto v = variant_from_token(token);
  if (!v) throw Error(ErrorKind::ParseError, "unknown variant '" + token + "'");
  return *v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Agreeing linear orders of marked uniform hypergraphs"};
  app.require_subcommand(1);

  std::string path;
  int jobs = 1;

  auto* solve = app.add_subcommand("solve", "Decide whether an agreeing order exists");
  bool use_oracle = false;
  bool use_structured = false;
  bool count = false;
  solve->add_option("path", path, "Instance file")->required();
  auto* oracle_flag = solve->add_flag("--oracle", use_oracle, "Use the backtracking oracle");
  solve->add_flag("--structured", use_structured, "Use the variant's structured solver (default)")
      ->excludes(oracle_flag);
  solve->add_flag("--count", count, "Also count all agreeing orders");
  solve->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Check an order against an instance");
  std::string order_text;
  check->add_option("path", path, "Instance file")->required();
  check->add_option("--order", order_text, "Comma-separated vertex ids")->required();

  auto* gen = app.add_subcommand("gen", "Generate a construction family instance");
  std::string family_name;
  std::string variant_name = "two-extreme";
  std::string out_path;
  int r = 0;
  int n = 0;
  int m = 0;
  gen->add_option("--family", family_name,
                  "two-extreme-tight | min-max-tight | one-extreme-cycle | sparse-cycle | natural")
      ->required();
  gen->add_option("--r", r, "Uniformity")->required();
  gen->add_option("--n", n, "Vertex count (one-extreme-cycle, natural)");
  gen->add_option("--m", m, "Cycle length (sparse-cycle)");
  gen->add_option("--variant", variant_name, "Mark variant (natural)");
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  auto* helly_cmd = app.add_subcommand("helly", "Scan all k-subsets of an instance");
  int k = 0;
  std::string report_path;
  bool helly_oracle = false;
  helly_cmd->add_option("path", path, "Instance file")->required();
  helly_cmd->add_option("--k", k, "Subset size")->required();
  helly_cmd->add_option("--report", report_path, "Write the report here instead of stdout");
  helly_cmd->add_flag("--oracle", helly_oracle, "Decide subsets with the oracle");
  helly_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* census = app.add_subcommand("census", "Helly census over clique markings");
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = helly::CensusOptions{}.budget;
  census->add_option("--variant", variant_name, "Mark variant")->required();
  census->add_option("--r", r, "Uniformity")->required();
  census->add_option("--n", n, "Vertex count")->required();
  census->add_option("--k", k, "Subset size")->required();
  auto* samples_opt = census->add_option("--samples", samples, "Random samples (default: exhaustive)");
  census->add_option("--seed", seed, "Sampling seed")->needs(samples_opt);
  census->add_option("--budget", budget, "Exhaustive instance cap");
  census->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (solve->parsed()) {
      const auto h = io::parse_instance(read_file(path));
      const auto method = use_oracle ? solvers::Method::Oracle : solvers::Method::Structured;
      auto result = solvers::solve(h, method, jobs);
      if (count) result.count = oracle::count(h, jobs).count;
      out << io::format_verdict(result);
      return result.exists ? kYes : kNo;
    }
    if (check->parsed()) {
      const auto h = io::parse_instance(read_file(path));
      const auto verdict = check_order(h, io::parse_order(order_text));
      out << io::format_agreement(verdict, h.variant());
      return verdict.agrees ? kYes : kNo;
    }
    if (gen->parsed()) {
      const auto family = constructions::family_from_token(family_name);
      if (!family) throw Error(ErrorKind::ParseError, "unknown family '" + family_name + "'");
      constructions::FamilyParams params{*family, r, n, m, parse_variant(variant_name)};
      const auto text = io::serialize_instance(constructions::generate(params));
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
      return kYes;
    }
    if (helly_cmd->parsed()) {
      const auto h = io::parse_instance(read_file(path));
      const auto method = helly_oracle ? solvers::Method::Oracle : solvers::Method::Structured;
      const auto text = io::format_scan_report(helly::scan_subsets(h, k, method, jobs));
      if (report_path.empty()) {
        out << text;
      } else {
        write_file(report_path, text);
      }
      return kYes;
    }
    if (census->parsed()) {
      const auto variant = parse_variant(variant_name);
      helly::CensusOptions opts;
      opts.budget = budget;
      opts.jobs = jobs;
      const auto report = samples_opt->count() > 0
                              ? helly::census_random(variant, r, n, k, samples, seed, opts)
                              : helly::census_exhaustive(variant, r, n, k, opts);
      out << io::format_census_report(report);
      return kYes;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace agree::cli
