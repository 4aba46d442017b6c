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

#include "numeric_roots.hpp"
#include "sextic/error.hpp"
#include "sextic/oracle.hpp"
#include "sextic/trinomial.hpp"

using namespace sextic;

TEST_CASE("b = 0 is rejected") {
  try {
    Trinomial t(Integer(3), Integer(0));
    FAIL("expected ReducibleInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleInput);
  }
}

TEST_CASE("reduction") {
  CHECK(reduce_trinomial(Trinomial(2, 64)).to_string() == "(1, 1)");
  CHECK(reduce_trinomial(Trinomial(18, 33)).to_string() == "(18, 33)");
  CHECK(reduce_trinomial(Trinomial(4, 192)).to_string() == "(2, 3)");
  // Two primes at once, then a second round at 2.
  const Trinomial t(Integer(24), Integer(46656) * 64);
  const Trinomial r = reduce_trinomial(t);
  CHECK(r.is_reduced());
  CHECK(r.to_string() == "(2, 1)");
  CHECK(reduce_trinomial(r).to_string() == r.to_string());
  CHECK_FALSE(Trinomial(2, 64).is_reduced());
}

TEST_CASE("reduction is idempotent and lands on reduced pairs") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int i = 0; i < 500; ++i) {
    const long k = d(rng) % 7;
    const long a = d(rng), b = d(rng);
    if (b == 0 || k == 0) continue;
    Integer k6;
    mpz_pow_ui(k6.get_mpz_t(), Integer(k).get_mpz_t(), 6);
    const Trinomial r = reduce_trinomial(Trinomial(Integer(a * k), Integer(b) * k6));
    CHECK(r.is_reduced());
    CHECK(reduce_trinomial(r).to_string() == r.to_string());
  }
}

TEST_CASE("closed-form discriminant") {
  CHECK(discriminant(Integer(0), Integer(1)) == -46656);
  CHECK(discriminant(Integer(1), Integer(1)) == -43531);
  CHECK(discriminant(Integer(0), Integer(0)) == 0);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 300; ++i) {
    const long a = d(rng), b = d(rng);
    if (b == 0) continue;
    const Trinomial t{Integer(a), Integer(b)};
    CHECK(discriminant(t) == polynomial_discriminant(t.polynomial()));
  }
}

TEST_CASE("irreducibility examples") {
  CHECK(is_irreducible(Trinomial(18, 33)));
  CHECK_FALSE(is_irreducible(Trinomial(0, 1)));
  CHECK_FALSE(is_irreducible(Trinomial(0, -64)));
  // x^6 - 8 = (x^2 - 2)(x^4 + 2x^2 + 4); x^6 + 27 has a quadratic factor.
  CHECK_FALSE(is_irreducible(Trinomial(0, -8)));
  CHECK_FALSE(is_irreducible(Trinomial(0, 27)));
  CHECK(is_irreducible(Trinomial(0, 2)));
}

TEST_CASE("irreducibility agrees with the root-subset search on the 50 box") {
  int disagreements = 0;
  int reducible = 0;
  for (long a = -50; a <= 50; ++a) {
    for (long b = -50; b <= 50; ++b) {
      if (b == 0) continue;
      const bool fast = is_irreducible(Trinomial(Integer(a), Integer(b)));
      const bool slow = testing::numeric_irreducible(a, b);
      if (fast != slow) {
        ++disagreements;
        MESSAGE("disagree at (" << a << ", " << b << ")");
      }
      reducible += !fast;
    }
  }
  CHECK(disagreements == 0);
  CHECK(reducible > 0);
}
