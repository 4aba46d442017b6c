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

#include "sextic/error.hpp"
#include "sextic/zpoly.hpp"

using namespace sextic;

TEST_CASE("construction trims and prints") {
  const ZPoly f{33, 0, 0, 0, 0, 18, 1};
  CHECK(f.degree() == 6);
  CHECK(f.to_string() == "x^6 + 18*x^5 + 33");
  CHECK((ZPoly{1, 2, 0, 0}.degree() == 1));
  CHECK(ZPoly().is_zero());
  CHECK(ZPoly().degree() == -1);
  CHECK(ZPoly::linear_root(Integer(3)).to_string() == "x - 3");
}

TEST_CASE("parse round trip") {
  CHECK((parse_zpoly("x-3") == ZPoly{-3, 1}));
  CHECK((parse_zpoly("x^2 + x + 1") == ZPoly{1, 1, 1}));
  CHECK((parse_zpoly("-2*x^3+5") == ZPoly{5, 0, 0, -2}));
  CHECK((parse_zpoly("x") == ZPoly{0, 1}));
  CHECK_THROWS_AS(parse_zpoly("x^"), Error);
  CHECK_THROWS_AS(parse_zpoly("y+1"), Error);
  const ZPoly g{-1258, 0, 0, 0, 0, -42, 1};
  CHECK(parse_zpoly(g.to_string()) == g);
}

TEST_CASE("arithmetic and division") {
  const ZPoly f{1, 0, 0, 0, 0, 0, 1};
  const ZPoly q{1, 0, 1};
  const auto [quot, rem] = f.divmod_monic(q);
  CHECK(rem.is_zero());
  CHECK((quot == ZPoly{1, 0, -1, 0, 1}));
  CHECK(quot * q == f);
  CHECK((f.derivative() == ZPoly{0, 0, 0, 0, 0, 6}));
  CHECK((pow(ZPoly{1, 1}, 3) == ZPoly{1, 3, 3, 1}));
  CHECK((ZPoly{6, 12}.divide_exact(Integer(6)) == ZPoly{1, 2}));
  CHECK_THROWS_AS((ZPoly{6, 13}.divide_exact(Integer(6))), Error);
  CHECK_THROWS_AS((f.divmod_monic(ZPoly{1, 2})), Error);
}

TEST_CASE("content valuation is the Gauss valuation") {
  CHECK((ZPoly{12, 8, 4}.content_valuation(2) == 2));
  CHECK(ZPoly().content_valuation(2).is_infinite());
}

TEST_CASE("taylor shift agrees with evaluation") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int i = 0; i < 50; ++i) {
    const ZPoly f{d(rng), d(rng), d(rng), d(rng), 1};
    const Integer s(d(rng));
    const ZPoly g = f.taylor_shift(s);
    for (int x = -3; x <= 3; ++x) CHECK(g.evaluate(Integer(x)) == f.evaluate(Integer(x) + s));
  }
}

TEST_CASE("resultant and discriminant") {
  // Res(x^2 - 2, x - 1) = -1.
  CHECK((resultant(ZPoly{-2, 0, 1}, ZPoly{-1, 1}) == -1));
  CHECK((polynomial_discriminant(ZPoly{1, 0, 1}) == -4));
  CHECK((polynomial_discriminant(ZPoly{1, 0, 0, 0, 0, 0, 1}) == -46656));
  CHECK((polynomial_discriminant(ZPoly{1, 0, 0, 0, 0, 1, 1}) == -43531));
}
