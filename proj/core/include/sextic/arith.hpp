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

#ifndef SEXTIC_ARITH_HPP
#define SEXTIC_ARITH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sextic/valuation.hpp"

namespace sextic {

// Primes <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// The first n primes.
std::vector<std::uint32_t> first_primes(std::size_t n);

bool is_perfect_square(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
};

// Complete factorization of |n| (n != 0) into primes, ascending.  Trial
// division, then Pollard-Brent rho on the cofactor.  Returns nullopt when
// the rho budget runs out before every cofactor is proven prime.
std::optional<std::vector<PrimePower>> factor_integer(
    const Integer& n, std::uint64_t rho_budget = 2'000'000);

// All positive divisors of |n|, ascending.  n != 0.
std::optional<std::vector<Integer>> positive_divisors(const Integer& n);

// Squarefree test built on factor_integer; nullopt if undecided.
std::optional<bool> is_squarefree(const Integer& n);

}  // namespace sextic

#endif  // SEXTIC_ARITH_HPP
