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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sextic_cli/commands.hpp"

using namespace sextic;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SEXTIC_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SEXTIC_CLI_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("classify golden documents") {
  std::ostringstream out, err;
  CHECK((cli::cmd_classify("18", "33", {}, out, err) == 0));
  CHECK(out.str() == golden("classify_18_33.json"));
  std::ostringstream out2;
  CHECK((cli::cmd_classify("-42", "-1258", {true, false}, out2, err) == 0));
  CHECK(out2.str() == golden("classify_-42_-1258_explain.json"));
}

TEST_CASE("classify exit codes") {
  std::ostringstream out, err;
  CHECK((cli::cmd_classify("0", "1", {}, out, err) == 2));
  CHECK((cli::cmd_classify("abc", "1", {}, out, err) == 2));
  CHECK((cli::cmd_classify("3", "0", {}, out, err) == 2));
  CHECK(cli::exit_code(ErrorKind::FragmentMiss) == 3);
  CHECK(cli::exit_code(ErrorKind::OutsidePaperScope) == 3);
  CHECK(cli::exit_code(ErrorKind::IndeterminateCondition) == 3);
  CHECK(cli::exit_code(ErrorKind::IrrelevantModulus) == 2);
  std::ostringstream v;
  CHECK((cli::cmd_classify("360", "35", {false, true}, v, err) == 0));
  CHECK(v.str().find("\"index\": 12") != std::string::npos);
  CHECK(v.str().find("\"all_agree\": true") != std::string::npos);
}

TEST_CASE("scan golden and ordering") {
  std::ostringstream out;
  cli::ScanOptions o{-3, 3, -10, 10, false, 1};
  CHECK(cli::run_scan(o, out) == 0);
  CHECK(out.str() == golden("scan_-3_3_-10_10.csv"));

  std::ostringstream one;
  CHECK((cli::run_scan({18, 18, 33, 33, false, 1}, one) == 0));
  CHECK(one.str().find("\n18,33,1,0,0,2,") != std::string::npos);
  CHECK(one.str().find("# rows 1\n") != std::string::npos);

  std::ostringstream tiny;
  CHECK((cli::run_scan({-1, 1, -1, 1, false, 1}, tiny) == 0));
  CHECK(tiny.str().find("\n0,") == std::string::npos);
  CHECK(tiny.str().find("# rows 4\n") != std::string::npos);
}

TEST_CASE("parallel scans are byte-identical to the serial scan") {
  std::ostringstream serial;
  cli::run_scan({-12, 12, -40, 40, false, 1}, serial);
  for (unsigned jobs : {2u, 3u, 8u, 0u}) {
    std::ostringstream par;
    cli::run_scan({-12, 12, -40, 40, false, jobs}, par);
    CHECK(par.str() == serial.str());
  }
}

TEST_CASE("verified scan agrees everywhere") {
  std::ostringstream out;
  CHECK((cli::run_scan({-20, 20, -20, 20, true, 2}, out) == 0));
  CHECK(out.str().find(",disagree\n") == std::string::npos);
  CHECK(out.str().find(",unverified\n") == std::string::npos);
  CHECK(out.str().find("# disagreements 0\n") != std::string::npos);
}

TEST_CASE("polygon rendering") {
  std::ostringstream out, err;
  CHECK(cli::cmd_polygon("18", "33", 2, "x-3", out, err) == 0);
  CHECK(out.str() == golden("polygon_18_33_2_x-3.txt"));
  std::ostringstream o3;
  CHECK(cli::cmd_polygon("-42", "-1258", 3, "x-8", o3, err) == 0);
  CHECK(o3.str().find("vertices: [(0,8),(1,4),(2,1),(3,0)]") != std::string::npos);
  std::ostringstream o4;
  CHECK(cli::cmd_polygon("18", "33", 2, "x", o4, err) == 2);
  CHECK(cli::cmd_polygon("18", "33", 4, "x-3", o4, err) == 2);
}

TEST_CASE("examples table") {
  std::ostringstream out, err;
  CHECK((cli::cmd_examples(false, {}, out, err) == 0));
  CHECK(out.str().find("6/6 pass") != std::string::npos);
  std::ostringstream bad;
  CHECK((cli::cmd_examples(false, {{2, 5}}, bad, err) == 1));
  std::ostringstream ver;
  CHECK((cli::cmd_examples(true, {}, ver, err) == 0));
  CHECK(ver.str().find("6/6 oracle agreement") != std::string::npos);
}

TEST_CASE("binary exit codes") {
  CHECK(run_binary("examples") == 0);
  CHECK(run_binary("examples --expect 2=5") == 1);
  CHECK(run_binary("classify 18 33") == 0);
  CHECK(run_binary("classify 0 1") == 2);
  CHECK(run_binary("classify -42 -1258") == 0);
  CHECK(run_binary("polygon 18 33 2 x") == 2);
  CHECK(run_binary("scan 18 18 33 33") == 0);
}
