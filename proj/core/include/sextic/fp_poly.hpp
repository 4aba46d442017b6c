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

#ifndef SEXTIC_FP_POLY_HPP
#define SEXTIC_FP_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sextic/zpoly.hpp"

namespace sextic {

// Polynomial over F_p, p < 2^32, lowest degree first, no trailing zeros.
class FpPoly {
 public:
  using Coeff = std::uint64_t;

  FpPoly() : FpPoly(2) {}
  explicit FpPoly(std::uint32_t p);
  FpPoly(std::uint32_t p, std::vector<Coeff> coefficients);
  FpPoly(std::uint32_t p, std::initializer_list<long> coefficients);

  static FpPoly from_zpoly(const ZPoly& f, std::uint32_t p);
  static FpPoly monomial(std::uint32_t p, std::size_t degree, Coeff c = 1);
  // Monic polynomial of the given degree whose lower coefficients are the
  // base-p digits of index (lowest first).
  static FpPoly monic_from_index(std::uint32_t p, std::size_t degree,
                                 std::uint64_t index);

  std::uint32_t prime() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  Coeff coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  Coeff leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  FpPoly monic() const;
  FpPoly derivative() const;
  Coeff evaluate(Coeff x) const;

  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  FpPoly& scale(Coeff c);

  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

  std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
  FpPoly operator%(const FpPoly& divisor) const { return divmod(divisor).second; }
  bool divisible_by(const FpPoly& divisor) const;

  // Lift with coefficients in [0, p).
  ZPoly lift() const;
  // Lift with coefficients in (-p/2, p/2].
  ZPoly balanced_lift() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::uint32_t p_;
  std::vector<Coeff> coeffs_;
};

// Canonical factor order: degree first, then coefficients lowest-first.
bool canonical_less(const FpPoly& a, const FpPoly& b);

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p);

FpPoly gcd(FpPoly a, FpPoly b);
FpPoly pow_mod(const FpPoly& base, std::uint64_t exponent, const FpPoly& modulus);

struct FpFactor {
  FpPoly factor;
  unsigned multiplicity = 0;
  friend bool operator==(const FpFactor&, const FpFactor&) = default;
};

// Complete factorization into monic irreducibles with multiplicities, in
// canonical order.  Throws ZeroInput.
std::vector<FpFactor> fp_factor(const FpPoly& f);

bool is_squarefree(const FpPoly& f);

// Degrees of the irreducible factors of a squarefree polynomial, ascending
// (distinct-degree factorization).
std::vector<unsigned> distinct_degree_partition(const FpPoly& f);

int mobius(std::uint64_t n);

// Number of monic irreducible polynomials of degree f over F_p.
Integer count_monic_irreducibles(std::uint32_t p, unsigned f);

}  // namespace sextic

#endif  // SEXTIC_FP_POLY_HPP
