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

#ifndef SEXTIC_RESIDUE_FIELD_HPP
#define SEXTIC_RESIDUE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sextic/fp_poly.hpp"

namespace sextic {

// F_p[x]/(phi) for a monic irreducible phi.  Elements are reduced remainders.
class ResidueField {
 public:
  using Elem = FpPoly;

  // Throws InvalidPolynomial if the modulus is not monic irreducible.
  explicit ResidueField(FpPoly modulus);

  std::uint32_t prime() const { return modulus_.prime(); }
  const FpPoly& modulus() const { return modulus_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }
  // size() throws TooLarge past 64 bits.
  std::uint64_t size() const;
  Integer order() const;

  Elem zero() const { return FpPoly(prime()); }
  Elem one() const { return FpPoly(prime(), {1}); }
  Elem constant(std::uint64_t c) const { return FpPoly(prime(), std::vector<FpPoly::Coeff>{c}); }
  Elem reduce(const FpPoly& a) const { return a % modulus_; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % modulus_; }
  Elem neg(const Elem& a) const { return zero() - a; }
  // Throws ZeroInput.
  Elem inv(const Elem& a) const;

  // Enumeration of all size() elements; element(i) has base-p digits of i.
  Elem element(std::uint64_t index) const;

  std::string format(const Elem& a) const;

  friend bool operator==(const ResidueField& a, const ResidueField& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  FpPoly modulus_;
};

// Polynomial in y over a ResidueField, lowest degree first.
class ResiduePoly {
 public:
  explicit ResiduePoly(ResidueField field);
  ResiduePoly(ResidueField field, std::vector<FpPoly> coefficients);

  const ResidueField& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FpPoly>& coefficients() const { return coeffs_; }
  const FpPoly& leading() const { return coeffs_.back(); }
  bool is_monic() const;

  ResiduePoly monic() const;
  FpPoly evaluate(const FpPoly& y) const;

  friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
  std::pair<ResiduePoly, ResiduePoly> divmod(const ResiduePoly& divisor) const;
  friend bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  // e.g. "x*y^2 + (x + 1)*y + x"; field elements print in x.
  std::string to_string(const std::string& var = "y") const;

 private:
  void normalize();
  ResidueField field_;
  std::vector<FpPoly> coeffs_;
};

struct ResidueFactor {
  ResiduePoly factor;
  unsigned multiplicity = 0;
};

// Complete factorization over the residue field, ordered canonically.
// Throws ZeroInput.
std::vector<ResidueFactor> residue_factor(const ResiduePoly& r);

bool is_separable(const std::vector<ResidueFactor>& factors);

}  // namespace sextic

#endif  // SEXTIC_RESIDUE_FIELD_HPP
