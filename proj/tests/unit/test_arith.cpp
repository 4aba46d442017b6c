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

#include "sextic/arith.hpp"
#include "sextic/error.hpp"
#include "sextic/valuation.hpp"

using namespace sextic;

TEST_CASE("valuation of integers") {
  CHECK(valuation(3, Integer(-1215)) == 5);
  CHECK(valuation(2, Integer(1)) == 0);
  CHECK(valuation(5, Integer(0)).is_infinite());
  CHECK_THROWS_AS(valuation(4, Integer(8)), Error);
  CHECK_THROWS_AS(valuation(1, Integer(8)), Error);
}

TEST_CASE("unit part keeps the sign") {
  CHECK(unit_part(3, Integer(-1215)) == -5);
  CHECK(unit_part(2, Integer(7)) == 7);
  CHECK(unit_part(3, Integer(-216)) == -8);
  try {
    unit_part(3, Integer(0));
    FAIL("expected ZeroInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroInput);
  }
}

TEST_CASE("valuation is additive and unit part reconstructs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 2000; ++i) {
    const Integer m(d(rng)), n(d(rng));
    if (m == 0 || n == 0) continue;
    for (std::uint64_t p : {2, 3, 5, 7}) {
      CHECK(valuation(p, m * n) == valuation(p, m) + valuation(p, n));
      Integer pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, valuation(p, m).value());
      CHECK(pk * unit_part(p, m) == m);
      CHECK(residue(unit_part(p, m), p) != 0);
    }
  }
}

TEST_CASE("valuation saturates at infinity") {
  const Valuation inf = Valuation::infinity();
  CHECK((inf + Valuation(3)).is_infinite());
  CHECK(Valuation(3) < inf);
  CHECK(Valuation(2) + Valuation(3) == 5);
  CHECK(inf.to_string() == "inf");
  CHECK_THROWS_AS(inf.value(), Error);
}

TEST_CASE("residues are least nonnegative") {
  CHECK(residue(Integer(-1), 8) == 7);
  CHECK(residue(Integer(-81), 81) == 0);
  CHECK(residue(Integer(170), 72) == 26);
}

TEST_CASE("primes") {
  CHECK((primes_up_to(30) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  const auto first = first_primes(25);
  REQUIRE(first.size() == 25);
  CHECK(first.back() == 97);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime(16891951));
}

TEST_CASE("integer factorization") {
  const auto f = factor_integer(Integer(-60032));
  REQUIRE(f);
  REQUIRE(f->size() == 3);
  CHECK((*f)[0].prime == 2);
  CHECK((*f)[0].exponent == 7);
  CHECK((*f)[1].prime == 7);
  CHECK((*f)[2].prime == 67);

  // Two primes above the trial-division range.
  const Integer big = Integer("1000003") * Integer("1000033") * 4;
  const auto g = factor_integer(big);
  REQUIRE(g);
  CHECK(g->size() == 3);
  CHECK(is_squarefree(big) == false);
  CHECK(is_squarefree(Integer("1000003") * Integer("1000033")) == true);
  CHECK(is_perfect_square(Integer("1000003") * Integer("1000003")));
  CHECK_FALSE(is_perfect_square(Integer(-4)));
}

TEST_CASE("positive divisors are sorted") {
  const auto d = positive_divisors(Integer(-12));
  REQUIRE(d);
  CHECK((*d == std::vector<Integer>{1, 2, 3, 4, 6, 12}));
}
