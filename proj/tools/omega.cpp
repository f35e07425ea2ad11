// Copyright 2026 The Omega Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "omega/omega.hpp"

namespace {

omega::Rat parse_tol(const std::string& text) {
  omega::Rat tol = omega::parse_rat(text);
  if (tol <= 0) omega::fail(omega::ErrorKind::InvalidArgument, "--tol must be positive");
  return tol;
}

std::vector<std::string> read_queries(const std::string& path) {
  std::ifstream in(path);
  if (!in) omega::fail(omega::ErrorKind::FileUnreadable, "cannot read '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (in.bad()) omega::fail(omega::ErrorKind::FileUnreadable, "error while reading '" + path + "'");
  return lines;
}

/// Evaluates every line; results land in input order whatever the job count.
std::vector<omega::LineOutcome> run_batch(const std::vector<std::string>& lines,
                                          const omega::EvalConfig& cfg, unsigned jobs) {
  std::vector<omega::LineOutcome> out(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) out[i] = omega::run_line(lines[i], cfg);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(lines.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

int report_error(const omega::Error& e) {
  std::cerr << "error: " << omega::to_string(e.kind()) << ": " << e.what() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact set classification, outer measure and Hausdorff distance queries"};
  app.require_subcommand(1);

  std::string tol_text = "1/1000000";
  unsigned max_depth = 40;
  bool json = false;

  auto* eval = app.add_subcommand("eval", "Evaluate one query");
  std::string query;
  eval->add_option("query", query, "Query text")->required();
  eval->add_flag("--json", json, "Emit JSON");
  eval->add_option("--tol", tol_text, "Tolerance as a rational, e.g. 1/1000");
  eval->add_option("--max-depth", max_depth, "Refinement depth cap")->check(CLI::PositiveNumber);

  auto* batch = app.add_subcommand("batch", "Evaluate one query per line of FILE");
  std::string path;
  unsigned jobs = 1;
  batch->add_option("file", path, "Query file")->required();
  batch->add_flag("--json", json, "Emit JSON lines");
  batch->add_option("--tol", tol_text, "Tolerance as a rational");
  batch->add_option("--max-depth", max_depth, "Refinement depth cap")->check(CLI::PositiveNumber);
  batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run a seeded property suite");
  std::string suite;
  std::uint64_t samples = 200, seed = 42;
  verify->add_option("--suite", suite, "outer-measure, hausdorff, classify or strategic-pair")
      ->required();
  verify->add_option("--samples", samples, "Sample count");
  verify->add_option("--seed", seed, "Generator seed");
  verify->add_flag("--json", json, "Emit the report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    omega::EvalConfig cfg;
    cfg.tol = parse_tol(tol_text);
    cfg.max_depth = max_depth;
    cfg.json = json;

    if (*eval) {
      omega::LineOutcome r = omega::run_line(query, cfg);
      std::cout << r.text << "\n";
      return r.ok ? 0 : 1;
    }
    if (*batch) {
      bool all_ok = true;
      for (const auto& r : run_batch(read_queries(path), cfg, jobs)) {
        std::cout << r.text << "\n";
        all_ok = all_ok && r.ok;
      }
      return all_ok ? 0 : 1;
    }
    omega::VerifyReport report = omega::run_verify(suite, samples, seed, cfg.tol, cfg.max_depth);
    if (json)
      std::cout << report.json().dump() << "\n";
    else
      std::cout << report.text();
    return report.ok() ? 0 : 1;
  } catch (const omega::Error& e) {
    return report_error(e);
  }
}
