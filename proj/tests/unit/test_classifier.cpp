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

#include <algorithm>

#include "sextic/classifier.hpp"
#include "sextic/error.hpp"
#include "sextic/fp_poly.hpp"

using namespace sextic;

namespace {

Trinomial t(long a, long b) { return Trinomial(Integer(a), Integer(b)); }

std::string rule(const ExponentResult& r) { return r.rule ? r.rule->label() : "none"; }

SplittingType split(std::vector<PrimeShape> e) {
  SplittingType s{std::move(e), true};
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("maximality conditions") {
  auto r = theorem1_is_maximal(t(288, 154));
  CHECK_FALSE(r.maximal);
  CHECK((r.violated == std::vector<std::string>{"iii"}));
  r = theorem1_is_maximal(t(0, 4));
  CHECK_FALSE(r.maximal);
  CHECK((r.violated == std::vector<std::string>{"i"}));
  r = theorem1_is_maximal(t(2, 3));
  CHECK(r.maximal);
  CHECK(r.violated.empty());
  CHECK(theorem1_fails_at(t(18, 33), 2));
  CHECK_FALSE(theorem1_fails_at(t(2, 3), 2));
}

TEST_CASE("nu2") {
  CHECK(nu2(t(8, 3)).value == 2);
  CHECK(rule(nu2(t(8, 3))) == "Thm2-1");
  CHECK(nu2(t(18, 33)).value == 1);
  CHECK(rule(nu2(t(18, 33))) == "Thm2-3");
  CHECK(nu2(t(2, 3)).value == 0);
  CHECK(rule(nu2(t(2, 3))) == "none");
  CHECK(nu2(t(54, 377)).value == 1);
  CHECK(rule(nu2(t(54, 377))) == "Thm2-2");
}

TEST_CASE("nu3") {
  CHECK(nu3(t(360, 35)).value == 1);
  CHECK(rule(nu3(t(360, 35))) == "Thm3-1");
  CHECK(nu3(t(-42, -1258)).value == 1);
  CHECK(rule(nu3(t(-42, -1258))) == "Thm3-5");
  CHECK(nu3(t(18, 33)).value == 0);
}

TEST_CASE("nu5 is zero") {
  CHECK(nu5(t(18, 33)) == 0);
  CHECK(nu5(t(0, 5)) == 0);
  CHECK(nu5(t(1, 25)) == 0);
}

TEST_CASE("index divisors and the exponent table") {
  CHECK((is_index_divisor(split({{1, 2}, {1, 2}, {1, 2}}), 2)));
  CHECK((is_index_divisor(split({{1, 1}, {2, 1}, {1, 1}, {2, 1}}), 3)));
  CHECK_FALSE((is_index_divisor(split({{5, 1}, {1, 1}}), 5)));
  CHECK_THROWS_AS((is_index_divisor(SplittingType{}, 2)), Error);

  CHECK((engstrom_exponent(split({{1, 2}, {2, 2}}), 2) == 1));
  CHECK((engstrom_exponent(split({{1, 1}, {1, 1}, {1, 2}, {1, 2}}), 2) == 2));
  CHECK((engstrom_exponent(split({{1, 2}, {1, 2}, {1, 2}}), 2) == 2));
  CHECK((engstrom_exponent(split({{3, 1}, {1, 1}, {1, 1}, {1, 1}}), 3) == 1));
  CHECK((engstrom_exponent(split({{5, 1}, {1, 1}}), 2) == 0));
  CHECK((engstrom_exponent(split({{1, 1}, {1, 1}, {1, 1}, {1, 3}}), 5) == 0));
  try {
    engstrom_exponent(split({{1, 1}, {1, 1}, {1, 1}, {3, 1}}), 2);
    FAIL("expected FragmentMiss");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FragmentMiss);
  }
}

TEST_CASE("worked examples") {
  struct Row {
    long a, b;
    unsigned index;
  };
  for (const Row& r : {Row{288, 154, 1}, Row{18, 33, 2}, Row{-42, -1258, 3}, Row{144, 399, 4},
                       Row{54, 377, 6}, Row{360, 35, 12}}) {
    const auto rep = index_of_field(t(r.a, r.b));
    CHECK(rep.index == r.index);
    CHECK(rep.index == (1u << rep.nu2) * (rep.nu3 ? 3u : 1u));
    CHECK(rep.monogenic_obstruction == (rep.index > 1));
    CHECK(rep.splitting_at.size() == 3);
  }
  CHECK_FALSE(index_of_field(t(288, 154)).maximal_order_is_Zalpha);
  CHECK(index_of_field(t(2, 3)).maximal_order_is_Zalpha);
}

TEST_CASE("input is reduced before classification") {
  const auto r = index_of_field(Trinomial(Integer(2 * 18), Integer(33) * 64));
  CHECK(r.input.to_string() == "(18, 33)");
  CHECK(r.index == 2);
  try {
    index_of_field(t(0, 1));
    FAIL("expected ReducibleInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleInput);
  }
}

TEST_CASE("corollary fast path") {
  auto h = corollary_fast_path(t(288, 154));
  REQUIRE(h);
  CHECK(h->index == 1);
  CHECK(h->rule.label() == "Cor-1");
  h = corollary_fast_path(t(54, 89));
  REQUIRE(h);
  CHECK(h->index == 6);
  CHECK(h->rule.label() == "Cor-5");
  CHECK_FALSE(corollary_fast_path(t(1, 1)));
}

TEST_CASE("invariants on a small box") {
  for (long a = -30; a <= 30; ++a) {
    for (long b = -30; b <= 30; ++b) {
      if (b == 0) continue;
      const Trinomial x = t(a, b);
      if (!x.is_reduced() || !is_irreducible(x)) continue;
      const auto r = index_of_field(x);
      CHECK(r.nu5 == 0);
      if (r.maximal_order_is_Zalpha) CHECK(r.index == 1);
      if (auto h = corollary_fast_path(x)) CHECK(h->index == r.index);
      const unsigned allowed[] = {1, 2, 3, 4, 6, 12};
      CHECK(std::find(std::begin(allowed), std::end(allowed), r.index) != std::end(allowed));
    }
  }
}

TEST_CASE("valuation quadruple") {
  const auto q = valuation_quadruple(t(-42, -1258), 3);
  CHECK(q.mu == 3);   // 5a - 6 = -216
  CHECK(q.tau == 5);  // -a + b + 1 = -1215
  const auto q2 = valuation_quadruple(t(18, 33), 2);
  CHECK(q2.u == 5);  // 5a + 6 = 96
  CHECK(q2.v == 2);  // a + b + 1 = 52
}
