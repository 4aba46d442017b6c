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

#include <random>

#include "sextic/classifier.hpp"
#include "sextic/error.hpp"
#include "sextic/fp_poly.hpp"
#include "sextic/oracle.hpp"

using namespace sextic;

namespace {

ZPoly trinomial(long a, long b) { return Trinomial(Integer(a), Integer(b)).polynomial(); }

std::vector<Valuation> vals(std::initializer_list<long> v) {
  std::vector<Valuation> out;
  for (long x : v) out.push_back(x < 0 ? Valuation::infinity() : Valuation(static_cast<std::uint64_t>(x)));
  return out;
}

}  // namespace

TEST_CASE("dedekind criterion") {
  CHECK(oracle::dedekind_divides(trinomial(288, 154), 3));
  CHECK(oracle::dedekind_divides(trinomial(18, 33), 2));
  CHECK_FALSE(oracle::dedekind_divides(trinomial(1, 2), 2));
  CHECK_FALSE(oracle::dedekind_divides(trinomial(18, 33), 3));
  // Large prime path: 16891951 || disc of (-20, -15).
  CHECK_FALSE(oracle::dedekind_divides(trinomial(-20, -15), 16891951));
}

TEST_CASE("all-pairs hull") {
  auto h = oracle::hull_bruteforce(vals({3, -1, -1, -1, -1, -1, 0}));
  REQUIRE(h.sides.size() == 1);
  CHECK(h.vertex_string() == "[(0,3),(6,0)]");
  h = oracle::hull_bruteforce(vals({8, 4, 1, 0}));
  CHECK(h.sides.size() == 3);
  CHECK((oracle::hull_bruteforce(vals({0, -1, -1, -1, -1, -1, 0})).empty()));
  CHECK((oracle::hull_bruteforce(vals({5})).empty()));
}

TEST_CASE("lattice count") {
  CHECK((oracle::lattice_index_bruteforce(oracle::hull_bruteforce(vals({3, -1, -1, -1, -1, -1, 0})), 1) == 6));
  CHECK((oracle::lattice_index_bruteforce(NewtonPolygon{}, 1) == 0));
  CHECK((oracle::lattice_index_bruteforce(oracle::hull_bruteforce(vals({8, 4, 1, 0})), 1) == 5));
}

TEST_CASE("resultant discriminant") {
  CHECK(oracle::discriminant_resultant(Trinomial(0, 1)) == -46656);
  CHECK(oracle::discriminant_resultant(Trinomial(1, 1)) == -43531);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    const long a = d(rng), b = d(rng);
    if (b == 0) continue;
    const Trinomial t{Integer(a), Integer(b)};
    CHECK(discriminant(t) - oracle::discriminant_resultant(t) == 0);
  }
}

TEST_CASE("irreducible counts by enumeration") {
  CHECK(oracle::irreducible_count_bruteforce(2, 2) == 1);
  CHECK(oracle::irreducible_count_bruteforce(2, 1) == 2);
  CHECK(oracle::irreducible_count_bruteforce(3, 2) == 3);
  CHECK(oracle::irreducible_count_bruteforce(5, 6) == count_monic_irreducibles(5, 6));
  try {
    oracle::irreducible_count_bruteforce(7, 5);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("verification facade agrees on the examples") {
  for (auto [a, b] : {std::pair{288L, 154L}, {18L, 33L}, {-42L, -1258L}, {144L, 399L}, {54L, 377L},
                      {360L, 35L}}) {
    const auto r = index_of_field(Trinomial(Integer(a), Integer(b)));
    const auto v = oracle::verify_report(r);
    CHECK(v.size() > 5);
    for (const auto& x : v) {
      INFO(x.context << ": " << x.fast_value << " vs " << x.oracle_value);
      CHECK(x.agrees);
    }
  }
}
