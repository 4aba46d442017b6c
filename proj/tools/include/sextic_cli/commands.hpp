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

#ifndef SEXTIC_CLI_COMMANDS_HPP
#define SEXTIC_CLI_COMMANDS_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include "sextic/error.hpp"

namespace sextic::cli {

// 2: the input itself is unusable.  3: outside what the classifier covers.
int exit_code(ErrorKind kind);

struct ClassifyOptions {
  bool explain = false;
  bool verify = false;
};

int cmd_classify(const std::string& a, const std::string& b, const ClassifyOptions& opts,
                 std::ostream& out, std::ostream& err);

struct ScanOptions {
  std::int64_t a_min = 0;
  std::int64_t a_max = 0;
  std::int64_t b_min = 0;
  std::int64_t b_max = 0;
  bool verify = false;
  // 0 picks the hardware concurrency.
  unsigned jobs = 1;
};

inline constexpr const char* kScanHeader =
    "a,b,nu2,nu3,nu5,index,matched_rules,maximal_order_is_Zalpha,verify_status";

// Whole CSV document including header and footer.  Rows are in (a, b) order
// for every job count.  Returns 0, 1 if a verification disagreed, or 3 if
// some row could not be classified.
int run_scan(const ScanOptions& opts, std::ostream& out);

int cmd_polygon(const std::string& a, const std::string& b, std::uint32_t p,
                const std::string& phi, std::ostream& out, std::ostream& err);

// Expected indices may be overridden by example number (1-6).
int cmd_examples(bool verify, const std::map<int, unsigned>& expect_override, std::ostream& out,
                 std::ostream& err);

}  // namespace sextic::cli

#endif  // SEXTIC_CLI_COMMANDS_HPP
