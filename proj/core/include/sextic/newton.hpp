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

#ifndef SEXTIC_NEWTON_HPP
#define SEXTIC_NEWTON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sextic/residue_field.hpp"
#include "sextic/valuation.hpp"
#include "sextic/zpoly.hpp"

namespace sextic {

// F = sum_i digits[i] * phi^i with deg digits[i] < deg phi.
struct PhiExpansion {
  ZPoly phi;
  std::uint32_t prime = 2;
  std::vector<ZPoly> digits;

  ZPoly reconstruct() const;
  // u_i: Gauss valuation of each digit (infinite for zero digits).
  std::vector<Valuation> valuations() const;
};

// Throws NonMonicModulus, InvalidPrime.
PhiExpansion phi_expand(const ZPoly& f, const ZPoly& phi, std::uint32_t p);

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// A side of slope -slope_h/slope_e in lowest terms.
struct Side {
  LatticePoint start;
  LatticePoint end;

  std::int64_t length() const { return end.x - start.x; }
  std::int64_t height() const { return start.y - end.y; }
  std::int64_t degree() const;
  std::int64_t slope_h() const { return height() / degree(); }
  std::int64_t slope_e() const { return length() / degree(); }
  bool integer_slope() const { return slope_e() == 1; }
  std::string slope_string() const;

  friend bool operator==(const Side&, const Side&) = default;
};

struct NewtonPolygon {
  std::vector<Side> sides;
  std::vector<Valuation> source_points;

  bool empty() const { return sides.empty(); }
  std::vector<LatticePoint> vertices() const;
  // "[(0,8),(1,4),(2,1),(3,0)]"
  std::string vertex_string() const;

  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
    return a.sides == b.sides;
  }
};

// Negative-slope part of the lower convex hull of the finite points
// (i, points[i]).
NewtonPolygon principal_polygon(const std::vector<Valuation>& points);
// Throws DegenerateInput for a constant polynomial.
NewtonPolygon principal_polygon(const PhiExpansion& e);

// Throws InvalidSide if the side is not on the principal polygon of e, and
// InvalidPolynomial if phi is not irreducible mod p.
ResiduePoly residual_polynomial(const PhiExpansion& e, const Side& side);

// deg(phi) times the lattice points with x >= 1, y >= 1 on or under n.
std::uint64_t phi_index(const NewtonPolygon& n, unsigned deg_phi);

// Throws IrrelevantModulus when phi does not divide F mod p.
bool is_phi_regular(const ZPoly& f, const ZPoly& phi, std::uint32_t p);

}  // namespace sextic

#endif  // SEXTIC_NEWTON_HPP
