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

#include "sextic/arith.hpp"

#include <algorithm>

#include "sextic/error.hpp"

namespace sextic {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint32_t> first_primes(std::size_t n) {
  std::uint32_t limit = 32;
  while (true) {
    auto ps = primes_up_to(limit);
    if (ps.size() >= n) {
      ps.resize(n);
      return ps;
    }
    limit *= 2;
  }
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace {

constexpr std::uint32_t kTrialLimit = 10000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kTrialLimit);
  return primes;
}

bool probably_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// One Brent cycle-finding run; returns a nontrivial factor or 0.
Integer brent_rho(const Integer& n, unsigned long c, std::uint64_t& budget) {
  Integer y = 2, x, g = 1, q = 1, ys, t;
  std::uint64_t r = 1;
  constexpr std::uint64_t m = 128;
  auto step = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      std::uint64_t lim = std::min(m, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        step(y);
        t = x - y;
        q = q * abs(t);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
      if (budget < lim) return 0;
      budget -= lim;
    }
    r *= 2;
  }
  if (g == n) {
    // Backtrack one step at a time.
    do {
      step(ys);
      t = x - ys;
      t = abs(t);
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      if (budget == 0) return 0;
      --budget;
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

bool split_all(const Integer& n, std::vector<Integer>& primes,
               std::uint64_t& budget) {
  if (n == 1) return true;
  if (is_perfect_square(n)) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return split_all(r, primes, budget) && split_all(r, primes, budget);
  }
  if (probably_prime(n)) {
    primes.push_back(n);
    return true;
  }
  for (unsigned long c = 1; c < 64; ++c) {
    Integer d = brent_rho(n, c, budget);
    if (d != 0) {
      Integer rest = n / d;
      return split_all(d, primes, budget) && split_all(rest, primes, budget);
    }
    if (budget == 0) return false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<PrimePower>> factor_integer(
    const Integer& n, std::uint64_t rho_budget) {
  if (n == 0) throw Error(ErrorKind::ZeroInput, "factor_integer(0)");
  Integer m = abs(n);
  std::vector<Integer> found;
  for (std::uint32_t p : trial_primes()) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      found.emplace_back(p);
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (m != 1) {
    if (m < Integer(kTrialLimit) * kTrialLimit) {
      found.push_back(m);
    } else if (!split_all(m, found, rho_budget)) {
      return std::nullopt;
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<PrimePower> out;
  for (const auto& q : found) {
    if (!out.empty() && out.back().prime == q) {
      ++out.back().exponent;
    } else {
      out.push_back({q, 1});
    }
  }
  return out;
}

std::optional<std::vector<Integer>> positive_divisors(const Integer& n) {
  auto f = factor_integer(n);
  if (!f) return std::nullopt;
  std::vector<Integer> divs{1};
  for (const auto& [q, e] : *f) {
    std::size_t base = divs.size();
    Integer pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::optional<bool> is_squarefree(const Integer& n) {
  auto f = factor_integer(n);
  if (!f) return std::nullopt;
  return std::all_of(f->begin(), f->end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

}  // namespace sextic
