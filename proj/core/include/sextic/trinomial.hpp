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

#ifndef SEXTIC_TRINOMIAL_HPP
#define SEXTIC_TRINOMIAL_HPP

#include <string>

#include "sextic/valuation.hpp"
#include "sextic/zpoly.hpp"

namespace sextic {

// F(x) = x^6 + a*x^5 + b with b != 0.
class Trinomial {
 public:
  // Throws ReducibleInput when b == 0.
  Trinomial(Integer a, Integer b);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  // True when no prime p has p | a and p^6 | b.
  bool is_reduced() const;
  ZPoly polynomial() const;
  std::string to_string() const;

  friend bool operator==(const Trinomial&, const Trinomial&) = default;

 private:
  Integer a_;
  Integer b_;
};

// Replaces (a, b) by (a/p, b/p^6) until no prime qualifies.
Trinomial reduce_trinomial(const Trinomial& t);

// 6^6*b - 5^5*a^6, the non-b part of the discriminant.
Integer discriminant_cofactor(const Integer& a, const Integer& b);

// -b^4 * (6^6*b - 5^5*a^6).  Defined for b == 0 too (value 0).
Integer discriminant(const Integer& a, const Integer& b);
Integer discriminant(const Trinomial& t);

// Exact irreducibility over Q.
bool is_irreducible(const Trinomial& t);

}  // namespace sextic

#endif  // SEXTIC_TRINOMIAL_HPP
