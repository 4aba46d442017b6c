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

#ifndef SEXTIC_CLI_REPORT_JSON_HPP
#define SEXTIC_CLI_REPORT_JSON_HPP

#include <json.hpp>

#include "sextic/classifier.hpp"
#include "sextic/oracle.hpp"

namespace sextic::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Valuation& v);
Json to_json(const SplittingType& s);
Json to_json(const OreOutcome& o);
Json to_json(const PhiReport& r);
Json to_json(const oracle::OracleVerdict& v);

// Keys: input, nu2, nu3, nu5, index, matched_rules, splitting_at,
// maximal_order_is_Zalpha, monogenic_obstruction, then "explain" if asked.
Json to_json(const IndexReport& report, bool explain);

}  // namespace sextic::cli

#endif  // SEXTIC_CLI_REPORT_JSON_HPP
