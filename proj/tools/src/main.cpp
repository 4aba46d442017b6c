// Copyright 2026 The sextic-index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sextic_cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Index of sextic number fields defined by x^6 + a x^5 + b"};
  app.require_subcommand(1);

  std::string a, b;
  sextic::cli::ClassifyOptions copts;
  auto* classify = app.add_subcommand("classify", "Index report for one field as JSON");
  classify->add_option("A", a)->required();
  classify->add_option("B", b)->required();
  classify->add_flag("--explain", copts.explain, "Polygons, residuals and valuations");
  classify->add_flag("--verify", copts.verify, "Run the oracle cross-checks");

  sextic::cli::ScanOptions sopts;
  std::string out_path;
  auto* scan = app.add_subcommand("scan", "CSV over a box of (a, b)");
  scan->add_option("AMIN", sopts.a_min)->required();
  scan->add_option("AMAX", sopts.a_max)->required();
  scan->add_option("BMIN", sopts.b_min)->required();
  scan->add_option("BMAX", sopts.b_max)->required();
  scan->add_flag("--verify", sopts.verify, "Run the oracle cross-checks per row");
  scan->add_option("--jobs", sopts.jobs, "Worker threads, 0 for all cores");
  scan->add_option("--out", out_path, "Write CSV here instead of stdout");

  std::string pa, pb, phi;
  std::uint32_t p = 2;
  auto* polygon = app.add_subcommand("polygon", "Newton polygon of F at phi and p");
  polygon->add_option("A", pa)->required();
  polygon->add_option("B", pb)->required();
  polygon->add_option("P", p)->required();
  polygon->add_option("PHI", phi)->required();

  bool everify = false;
  std::vector<std::string> expect_args;
  auto* examples = app.add_subcommand("examples", "Replay the six worked examples");
  examples->add_flag("--verify", everify, "Also run the oracle cross-checks");
  examples->add_option("--expect", expect_args, "Override an expected index: N=INDEX")
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  if (*classify) return sextic::cli::cmd_classify(a, b, copts, std::cout, std::cerr);
  if (*polygon) return sextic::cli::cmd_polygon(pa, pb, p, phi, std::cout, std::cerr);
  if (*examples) {
    std::map<int, unsigned> expect;
    for (const auto& arg : expect_args) {
      const auto eq = arg.find('=');
      try {
        if (eq == std::string::npos) throw std::invalid_argument(arg);
        expect[std::stoi(arg.substr(0, eq))] = static_cast<unsigned>(std::stoul(arg.substr(eq + 1)));
      } catch (const std::exception&) {
        std::cerr << "error: --expect wants N=INDEX, got '" << arg << "'\n";
        return 2;
      }
    }
    return sextic::cli::cmd_examples(everify, expect, std::cout, std::cerr);
  }
  if (sopts.a_min > sopts.a_max || sopts.b_min > sopts.b_max) {
    std::cerr << "error: empty range\n";
    return 2;
  }
  if (out_path.empty()) return sextic::cli::run_scan(sopts, std::cout);
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << "\n";
    return 5;
  }
  const int rc = sextic::cli::run_scan(sopts, file);
  file.flush();
  if (!file) {
    std::cerr << "error: write failed for " << out_path << "\n";
    return 5;
  }
  return rc;
}
