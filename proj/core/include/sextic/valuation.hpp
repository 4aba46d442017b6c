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

#ifndef SEXTIC_VALUATION_HPP
#define SEXTIC_VALUATION_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace sextic {

using Integer = mpz_class;

// A p-adic valuation: a nonnegative integer, or infinity for the zero input.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::uint64_t v) : value_(v) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.value_ = kInfinity;
    return v;
  }

  constexpr bool is_infinite() const { return value_ == kInfinity; }
  constexpr bool is_finite() const { return value_ != kInfinity; }

  // Finite value; throws DegenerateInput on infinity.
  std::uint64_t value() const;

  // Saturating arithmetic: anything involving infinity stays infinite.
  constexpr Valuation operator+(Valuation o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return Valuation(value_ + o.value_);
  }
  constexpr Valuation operator*(std::uint64_t k) const {
    if (is_infinite()) return infinity();
    return Valuation(value_ * k);
  }

  constexpr auto operator<=>(const Valuation&) const = default;
  constexpr bool operator==(const Valuation&) const = default;

  constexpr bool operator==(std::uint64_t v) const { return value_ == v; }
  constexpr auto operator<=>(std::uint64_t v) const { return value_ <=> v; }

  std::string to_string() const;

 private:
  static constexpr std::uint64_t kInfinity =
      std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

bool is_prime(std::uint64_t n);

// Largest k with p^k | m; infinity iff m == 0.  Throws InvalidPrime.
Valuation valuation(std::uint64_t p, const Integer& m);

// m / p^{v_p(m)}, sign preserved.  Throws ZeroInput for m == 0.
Integer unit_part(std::uint64_t p, const Integer& m);

// Least nonnegative residue of x modulo m (m > 0).
std::uint64_t residue(const Integer& x, std::uint64_t m);
Integer residue(const Integer& x, const Integer& m);

}  // namespace sextic

#endif  // SEXTIC_VALUATION_HPP
