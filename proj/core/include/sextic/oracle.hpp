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

#ifndef SEXTIC_ORACLE_HPP
#define SEXTIC_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sextic/classifier.hpp"
#include "sextic/newton.hpp"
#include "sextic/trinomial.hpp"
#include "sextic/zpoly.hpp"

// Slow, independent reimplementations used by tests and --verify.  Nothing
// here shares code with the fast paths beyond the integer/polynomial types.
namespace sextic::oracle {

// Dedekind's criterion: p divides (Z_K : Z[alpha]).
bool dedekind_divides(const ZPoly& f, std::uint32_t p);

// Lower hull by checking every pair of finite points as a supporting line.
NewtonPolygon hull_bruteforce(const std::vector<Valuation>& points);

// Counts the qualifying lattice points of the bounding box one by one.
std::uint64_t lattice_index_bruteforce(const NewtonPolygon& polygon, unsigned deg_phi);

// -Res(F, F') by rational Gaussian elimination on the Sylvester matrix.
Integer discriminant_resultant(const Trinomial& t);

// Exhaustive count of monic irreducibles of degree f.  Throws TooLarge when
// p^f > 5^6.
std::uint64_t irreducible_count_bruteforce(std::uint32_t p, unsigned f);

struct OracleVerdict {
  bool agrees = false;
  std::string fast_value;
  std::string oracle_value;
  std::string context;
};

// Cross-checks every fast-path quantity behind a report.
std::vector<OracleVerdict> verify_report(const IndexReport& report);

bool all_agree(const std::vector<OracleVerdict>& verdicts);

}  // namespace sextic::oracle

#endif  // SEXTIC_ORACLE_HPP
