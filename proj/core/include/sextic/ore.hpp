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

#ifndef SEXTIC_ORE_HPP
#define SEXTIC_ORE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sextic/fp_poly.hpp"
#include "sextic/newton.hpp"
#include "sextic/residue_field.hpp"
#include "sextic/zpoly.hpp"

namespace sextic {

// One prime ideal above p: ramification e, residue degree f.
struct PrimeShape {
  unsigned e = 1;
  unsigned f = 1;
  // Canonical order is by (f, e).
  friend auto operator<=>(const PrimeShape& a, const PrimeShape& b) {
    if (auto c = a.f <=> b.f; c != 0) return c;
    return a.e <=> b.e;
  }
  friend bool operator==(const PrimeShape&, const PrimeShape&) = default;
};

struct SplittingType {
  std::vector<PrimeShape> entries;
  bool determined = false;

  void canonicalize();
  // Sum of e*f.
  unsigned degree() const;
  // Number of entries with residue degree f.
  unsigned count_with_f(unsigned f) const;
  // "{(1,2),(2,2)}"
  std::string to_string() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

struct SideReport {
  Side side;
  ResiduePoly residual;
  std::vector<ResidueFactor> factors;
  bool separable = false;
};

// Polygon data for one irreducible factor of F mod p.
struct PhiReport {
  FpPoly factor;
  unsigned multiplicity = 0;
  // Lift actually used; for degree-1 factors this may be x - s after the
  // regular-integer search.
  ZPoly phi;
  std::vector<Integer> shift_history;
  std::vector<Valuation> valuations;
  NewtonPolygon polygon;
  std::vector<SideReport> sides;
  std::uint64_t index = 0;
  bool regular = false;
};

struct OreOutcome {
  std::uint32_t prime = 2;
  std::uint64_t index_lower_bound = 0;
  bool regular = false;
  bool height_one = false;
  SplittingType splitting;
  // Every splitting compatible with the polygon data when not regular.
  std::vector<SplittingType> candidates;
  std::vector<PhiReport> diagnostics;
};

// Throws InvalidPolynomial unless F is monic of degree 6, InvalidPrime.
OreOutcome ore_analyze(const ZPoly& f, std::uint32_t p);

// Every factor of F mod p is simple or has a single side of height 1.
bool height_one_zero_index(const ZPoly& f, std::uint32_t p);

// Runs the shift s <- s + p^k t from s = z until F is (x - s)-regular.
// Throws IrrelevantModulus when x - z does not divide F mod p,
// OutsidePaperScope when an inseparable side is not a single double root
// on an integer slope, NonTerminating past the iteration cap.
Integer regular_integer(const ZPoly& f, std::uint32_t p, const Integer& z);

}  // namespace sextic

#endif  // SEXTIC_ORE_HPP
