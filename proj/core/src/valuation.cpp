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

#include "sextic/valuation.hpp"

#include "sextic/error.hpp"

namespace sextic {

std::uint64_t Valuation::value() const {
  if (is_infinite()) {
    throw Error(ErrorKind::DegenerateInput, "valuation of zero has no value");
  }
  return value_;
}

std::string Valuation::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

void require_prime(std::uint64_t p) {
  // Primes in this library are tiny; memoize the common ones.
  if (p == 2 || p == 3 || p == 5 || p == 7) return;
  if (!is_prime(p)) {
    throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
  }
}

}  // namespace

Valuation valuation(std::uint64_t p, const Integer& m) {
  require_prime(p);
  if (m == 0) return Valuation::infinity();
  if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) return Valuation(0);
  mpz_class rest;
  mpz_class prime(static_cast<unsigned long>(p));
  auto k = mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
  return Valuation(k);
}

Integer unit_part(std::uint64_t p, const Integer& m) {
  require_prime(p);
  if (m == 0) throw Error(ErrorKind::ZeroInput, "unit part of zero");
  mpz_class rest;
  mpz_class prime(static_cast<unsigned long>(p));
  mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
  return rest;
}

std::uint64_t residue(const Integer& x, std::uint64_t m) {
  return mpz_fdiv_ui(x.get_mpz_t(), m);
}

Integer residue(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace sextic
