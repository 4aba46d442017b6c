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

#ifndef SEXTIC_ZPOLY_HPP
#define SEXTIC_ZPOLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sextic/valuation.hpp"

namespace sextic {

// Dense polynomial over Z, lowest degree first, no trailing zeros.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Integer> coefficients);
  ZPoly(std::initializer_list<long> coefficients);

  static ZPoly monomial(std::size_t degree, const Integer& c = 1);
  static ZPoly linear_root(const Integer& z);  // x - z

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  // Coefficient of x^i (zero beyond the degree).
  Integer coefficient(std::size_t i) const;
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Integer evaluate(const Integer& x) const;
  ZPoly derivative() const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const Integer& c);

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const ZPoly& a, const ZPoly& b) = default;

  // Euclidean division by a monic divisor.  Throws NonMonicModulus.
  std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& divisor) const;

  // Exact division of every coefficient by d; throws if inexact.
  ZPoly divide_exact(const Integer& d) const;

  // Gauss valuation: minimum coefficient valuation, infinity for zero.
  Valuation content_valuation(std::uint64_t p) const;

  // F(x + s).
  ZPoly taylor_shift(const Integer& s) const;

  // Human-readable form in the variable name, highest degree first.
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

ZPoly pow(const ZPoly& base, unsigned exponent);

// Parses polynomials such as "x^2+x+1", "x-3", "-2*x^3 + 5x", "7".
ZPoly parse_zpoly(const std::string& text, char var = 'x');

// Res(f, g) by fraction-free elimination of the Sylvester matrix.
Integer resultant(const ZPoly& f, const ZPoly& g);

// (-1)^(n(n-1)/2) * Res(f, f') for monic f of degree n.  Throws
// NonMonicModulus.
Integer polynomial_discriminant(const ZPoly& f);

}  // namespace sextic

#endif  // SEXTIC_ZPOLY_HPP
