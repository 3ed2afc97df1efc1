// Copyright 2026 The indlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// indlab: independence polynomials of trees from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 `analyze` found log-concavity breaks, 130 interrupted search.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "indlab/claims.hpp"
#include "indlab/indpoly.hpp"
#include "indlab/search.hpp"
#include "indlab/seqlab.hpp"
#include "indlab/treekit.hpp"

namespace {

using namespace indlab;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBroken = 3;
constexpr int kExitInterrupted = 130;

std::atomic<bool> g_stop{false};

extern "C" void on_interrupt(int) { g_stop.store(true); }

struct TreeInput {
  std::string spec;
  std::string edges_file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("spec", spec, "family spec, e.g. Tmt1:4,3 or SST:2,2,1");
    cmd->add_option("--edges", edges_file, "edge list file, one 'u v' per line");
  }

  RootedTree load() const {
    if (spec.empty() == edges_file.empty()) {
      throw std::invalid_argument("give exactly one of a family spec or --edges FILE");
    }
    if (!spec.empty()) return build_family(FamilySpec::parse(spec));
    std::ifstream in(edges_file);
    if (!in) throw std::invalid_argument("cannot read " + edges_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

int cmd_poly(const TreeInput& input) {
  const auto poly = indpoly_tree(input.load());
  const auto digits = poly.decimal_coeffs();
  for (std::size_t k = 0; k < digits.size(); ++k) std::cout << k << ": " << digits[k] << "\n";
  return kExitOk;
}

int cmd_analyze(const TreeInput& input, const std::string& json_path) {
  const auto report = analyze(input.load());
  std::cout << "n: " << report.n << "\n"
            << "alpha: " << report.alpha << "\n"
            << "breaks: " << join(report.breaks) << "\n"
            << "log-concave: " << (report.is_log_concave ? "yes" : "no") << "\n"
            << "unimodal: " << (report.is_unimodal ? "yes" : "no");
  if (report.modes) std::cout << " (mode " << report.modes->lo << ".." << report.modes->hi << ")";
  std::cout << "\n"
            << "tail decreasing from " << report.tail_start << ": "
            << (report.tail_monotone ? "yes" : "no") << "\n";
  if (!json_path.empty()) write_file(json_path, report_to_json(report) + "\n");
  return report.is_log_concave ? kExitOk : kExitBroken;
}

int report_checks(const std::vector<CheckResult>& results, const std::string& json_path) {
  std::cout << format_checks(results);
  if (!json_path.empty()) write_file(json_path, checks_to_json(results) + "\n");
  return all_passed(results) ? kExitOk : kExitFailed;
}

int cmd_oracle(const TreeInput& input) {
  const auto tree = input.load();
  if (tree.size() > kOracleMaxVertices) {
    std::cerr << "oracle: " << tree.size() << " vertices exceeds the budget of "
              << kOracleMaxVertices << "\n";
    return kExitUsage;
  }
  const auto dp = indpoly_tree(tree);
  const auto brute = indpoly_oracle(tree);
  std::cout << "dp:     " << to_string(dp) << "\n"
            << "oracle: " << to_string(brute) << "\n"
            << (dp == brute ? "MATCH" : "MISMATCH") << "\n";
  return dp == brute ? kExitOk : kExitFailed;
}

int cmd_search(const SearchOptions& opts, const std::string& out_path) {
  check_options(opts);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    out = &file;
  }
  std::signal(SIGINT, on_interrupt);
  std::signal(SIGTERM, on_interrupt);
  const auto summary = run_search(
      opts,
      [&](const SearchRecord& r) {
        *out << record_to_json(r) << "\n";
        out->flush();
      },
      &g_stop);
  std::cerr << "evaluated " << summary.evaluated << " samples, " << summary.found
            << " non-log-concave\n";
  return summary.interrupted ? kExitInterrupted : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence polynomials of trees"};
  app.require_subcommand(1);

  TreeInput poly_in, analyze_in, oracle_in;
  std::string json_path;

  auto* poly = app.add_subcommand("poly", "print the independence polynomial coefficients");
  poly_in.add_to(poly);

  auto* analyze_cmd = app.add_subcommand("analyze", "log-concavity, unimodality and tail report");
  analyze_in.add_to(analyze_cmd);
  analyze_cmd->add_option("--json", json_path, "write the report as JSON");

  auto* reproduce = app.add_subcommand("reproduce", "rerun the fixed computational claim suite");
  reproduce->add_option("--json", json_path, "write a JSON summary");

  std::size_t t_max = 300, grid_max = 8;
  auto* verify = app.add_subcommand("verify", "check the closed forms and proof inequalities");
  verify->add_option("--t-max", t_max, "largest spider size")->check(CLI::PositiveNumber);
  verify->add_option("--grid-max", grid_max, "largest m and t in grid sweeps")
      ->check(CLI::PositiveNumber);
  verify->add_option("--json", json_path, "write a JSON summary");

  SearchOptions search_opts;
  search_opts.threads = std::max(1u, std::thread::hardware_concurrency());
  std::string out_path;
  auto* search = app.add_subcommand("search", "seeded random search for non-log-concave trees");
  search->add_option("--n-min", search_opts.n_min, "smallest vertex count")->required();
  search->add_option("--n-max", search_opts.n_max, "largest vertex count (default: n-min)");
  search->add_option("--samples", search_opts.samples, "number of random trees")->required();
  search->add_option("--seed", search_opts.seed, "master seed");
  search->add_option("--out", out_path, "JSONL output file (default: stdout)");
  search->add_option("--threads", search_opts.threads, "worker threads");

  auto* oracle = app.add_subcommand("oracle", "compare the DP against brute-force enumeration");
  oracle_in.add_to(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poly) return cmd_poly(poly_in);
    if (*analyze_cmd) return cmd_analyze(analyze_in, json_path);
    if (*reproduce) return report_checks(run_reproduce_suite(), json_path);
    if (*verify) return report_checks(run_verify_suite(t_max, grid_max), json_path);
    if (*search) {
      if (search->count("--n-max") == 0) search_opts.n_max = search_opts.n_min;
      return cmd_search(search_opts, out_path);
    }
    if (*oracle) return cmd_oracle(oracle_in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
