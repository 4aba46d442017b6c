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

#include <numeric>
#include <random>

#include "sextic/error.hpp"
#include "sextic/newton.hpp"
#include "sextic/oracle.hpp"
#include "sextic/trinomial.hpp"

using namespace sextic;

namespace {

std::vector<Valuation> vals(std::initializer_list<long> v) {
  std::vector<Valuation> out;
  for (long x : v) out.push_back(x < 0 ? Valuation::infinity() : Valuation(static_cast<std::uint64_t>(x)));
  return out;
}

ZPoly trinomial(long a, long b) { return Trinomial(Integer(a), Integer(b)).polynomial(); }

std::vector<Integer> constant_digits(const PhiExpansion& e) {
  std::vector<Integer> out;
  for (const auto& d : e.digits) out.push_back(d.coefficient(0));
  return out;
}

}  // namespace

TEST_CASE("phi expansion at x + a") {
  const long a = 7, b = 11;
  const auto e = phi_expand(trinomial(a, b), ZPoly{a, 1}, 2);
  CHECK(constant_digits(e) ==
        std::vector<Integer>{b, -a * a * a * a * a, 5 * a * a * a * a, -10 * a * a * a, 10 * a * a, -5 * a, 1});
  CHECK(e.reconstruct() == trinomial(a, b));
}

TEST_CASE("phi expansion at x + 1 and at x") {
  const long a = -4, b = 9;
  const auto e = phi_expand(trinomial(a, b), ZPoly{1, 1}, 3);
  CHECK(constant_digits(e) ==
        std::vector<Integer>{-a + b + 1, 5 * a - 6, -10 * a + 15, 10 * a - 20, -5 * a + 15, a - 6, 1});
  const auto x = phi_expand(trinomial(a, b), ZPoly{0, 1}, 3);
  CHECK((constant_digits(x) == std::vector<Integer>{b, 0, 0, 0, 0, a, 1}));
  CHECK_THROWS_AS((phi_expand(trinomial(a, b), ZPoly{1, 2}, 3)), Error);
}

TEST_CASE("example digits at x - 3 and x - 8") {
  const auto e2 = phi_expand(trinomial(18, 33), ZPoly{-3, 1}, 2);
  CHECK((e2.digits[0] == ZPoly{5136}));
  CHECK((e2.digits[1] == ZPoly{8748}));
  CHECK((e2.digits[2] == ZPoly{6075}));
  const auto e3 = phi_expand(trinomial(-42, -1258), ZPoly{-8, 1}, 3);
  CHECK((e3.digits[0] == ZPoly{-1115370}));
  CHECK((e3.digits[3] == ZPoly{-16640}));
  CHECK(principal_polygon(e3).vertex_string() == "[(0,8),(1,4),(2,1),(3,0)]");
}

TEST_CASE("principal polygons") {
  const auto one = principal_polygon(vals({3, -1, -1, -1, -1, 0, 0}));
  REQUIRE(one.sides.size() == 1);
  CHECK((one.sides[0].start == LatticePoint{0, 3}));
  CHECK((one.sides[0].end == LatticePoint{5, 0}));
  CHECK((principal_polygon(vals({0, 0, 0, 0, 0, 0, 0})).empty()));
  const auto p = principal_polygon(vals({8, 4, 1, 0, 0, 0, 0}));
  CHECK(p.vertex_string() == "[(0,8),(1,4),(2,1),(3,0)]");
  CHECK(p.sides[0].slope_string() == "-4");
  // Collinear interior points merge into one side of degree 3.
  const auto c = principal_polygon(vals({3, 2, 1, 0}));
  REQUIRE(c.sides.size() == 1);
  CHECK(c.sides[0].degree() == 3);
  const auto f = principal_polygon(vals({3, -1, 0}));
  CHECK(f.sides[0].slope_string() == "-3/2");
  CHECK(f.sides[0].slope_e() == 2);
}

TEST_CASE("side invariants on random polygons") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> len(2, 7), val(-1, 20);
  for (int i = 0; i < 500; ++i) {
    std::vector<Valuation> v;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) {
      const int x = val(rng);
      v.push_back(x < 0 ? Valuation::infinity() : Valuation(static_cast<std::uint64_t>(x)));
    }
    const auto poly = principal_polygon(v);
    for (std::size_t k = 0; k < poly.sides.size(); ++k) {
      const Side& s = poly.sides[k];
      CHECK(s.length() == s.slope_e() * s.degree());
      CHECK(s.height() == s.slope_h() * s.degree());
      CHECK(std::gcd(s.slope_h(), s.slope_e()) == 1);
      if (k) {
        // Slopes strictly increase: -h1/e1 < -h2/e2.
        const Side& r = poly.sides[k - 1];
        CHECK(r.slope_h() * s.slope_e() > s.slope_h() * r.slope_e());
        CHECK(r.end == s.start);
      }
    }
  }
}

TEST_CASE("residual polynomials") {
  // p = 2, phi = x, nu_2(b) = 3, 2 | a: R = y^3 + 1.
  const auto e = phi_expand(trinomial(2, 24), ZPoly{0, 1}, 2);
  const auto poly = principal_polygon(e);
  REQUIRE(poly.sides.size() == 1);
  CHECK((poly.sides[0].start == LatticePoint{0, 3}));
  CHECK((poly.sides[0].end == LatticePoint{6, 0}));
  CHECK(residual_polynomial(e, poly.sides[0]).to_string() == "y^3 + 1");

  const auto e2 = phi_expand(trinomial(18, 33), ZPoly{-3, 1}, 2);
  const auto p2 = principal_polygon(e2);
  CHECK(residual_polynomial(e2, p2.sides[0]).to_string() == "y^2 + y + 1");

  // (a, b) = (4, 3) mod 8 at x^2 + x + 1 over F_4.
  const auto e4 = phi_expand(trinomial(4, 3), ZPoly{1, 1, 1}, 2);
  const auto p4 = principal_polygon(e4);
  REQUIRE(p4.sides.size() == 1);
  CHECK((p4.sides[0].start == LatticePoint{0, 2}));
  CHECK(residual_polynomial(e4, p4.sides[0]).to_string() == "x*y^2 + (x + 1)*y + x");

  CHECK_THROWS_AS((residual_polynomial(e2, Side{{0, 5}, {2, 0}})), Error);
}

TEST_CASE("phi index") {
  CHECK((phi_index(principal_polygon(vals({1, -1, -1, -1, -1, -1, 0})), 1) == 0));
  CHECK((phi_index(principal_polygon(vals({3, -1, -1, -1, -1, -1, 0})), 1) == 6));
  CHECK((phi_index(principal_polygon(vals({8, 4, 1, 0})), 1) == 5));
  CHECK((phi_index(principal_polygon(vals({8, 4, 1, 0})), 2) == 10));
  CHECK((phi_index(NewtonPolygon{}, 1) == 0));
}

TEST_CASE("phi regularity") {
  CHECK_FALSE((is_phi_regular(trinomial(18, 33), ZPoly{-1, 1}, 2)));
  CHECK((is_phi_regular(trinomial(18, 33), ZPoly{-3, 1}, 2)));
  // Height-1 side: nu_3(b) = 1.
  CHECK((is_phi_regular(trinomial(3, 3), ZPoly{0, 1}, 3)));
  try {
    is_phi_regular(trinomial(18, 33), ZPoly{0, 1}, 2);
    FAIL("expected IrrelevantModulus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IrrelevantModulus);
  }
}
