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

#include "sextic/trinomial.hpp"

#include <set>
#include <vector>

#include "sextic/arith.hpp"
#include "sextic/error.hpp"
#include "sextic/fp_poly.hpp"

namespace sextic {

Trinomial::Trinomial(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_ == 0) {
    throw Error(ErrorKind::ReducibleInput, "b = 0 makes x divide F");
  }
}

namespace {

// Primes that could satisfy p | a and p^6 | b.
std::vector<Integer> reduction_candidates(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  std::vector<Integer> out;
  if (g == 1) return out;
  // A prime with p^6 | b is at most |b|^(1/6); enumerate when that is small.
  Integer root;
  Integer ab = abs(b);
  mpz_root(root.get_mpz_t(), ab.get_mpz_t(), 6);
  if (root < 100000) {
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(root.get_ui()))) {
      if (mpz_divisible_ui_p(g.get_mpz_t(), p)) out.emplace_back(p);
    }
    return out;
  }
  auto f = factor_integer(g);
  if (!f) {
    throw Error(ErrorKind::TooLarge, "cannot factor gcd(a, b) for reduction");
  }
  for (const auto& pp : *f) out.push_back(pp.prime);
  return out;
}

}  // namespace

bool Trinomial::is_reduced() const {
  for (const auto& p : reduction_candidates(a_, b_)) {
    Integer p6;
    mpz_pow_ui(p6.get_mpz_t(), p.get_mpz_t(), 6);
    if (mpz_divisible_p(a_.get_mpz_t(), p.get_mpz_t()) &&
        mpz_divisible_p(b_.get_mpz_t(), p6.get_mpz_t())) {
      return false;
    }
  }
  return true;
}

ZPoly Trinomial::polynomial() const {
  return ZPoly(std::vector<Integer>{b_, 0, 0, 0, 0, a_, 1});
}

std::string Trinomial::to_string() const {
  return "(" + a_.get_str() + ", " + b_.get_str() + ")";
}

Trinomial reduce_trinomial(const Trinomial& t) {
  Integer a = t.a();
  Integer b = t.b();
  for (const auto& p : reduction_candidates(a, b)) {
    Integer p6;
    mpz_pow_ui(p6.get_mpz_t(), p.get_mpz_t(), 6);
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t()) &&
           mpz_divisible_p(b.get_mpz_t(), p6.get_mpz_t())) {
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), p6.get_mpz_t());
    }
  }
  return Trinomial(std::move(a), std::move(b));
}

Integer discriminant_cofactor(const Integer& a, const Integer& b) {
  Integer a6;
  mpz_pow_ui(a6.get_mpz_t(), a.get_mpz_t(), 6);
  return Integer(46656) * b - Integer(3125) * a6;
}

Integer discriminant(const Integer& a, const Integer& b) {
  Integer b4;
  mpz_pow_ui(b4.get_mpz_t(), b.get_mpz_t(), 4);
  return -b4 * discriminant_cofactor(a, b);
}

Integer discriminant(const Trinomial& t) { return discriminant(t.a(), t.b()); }

namespace {

// All complex roots satisfy |z| < 2*max(|a|, (|b|/2)^(1/6)).
Integer root_bound(const Integer& a, const Integer& b) {
  Integer half = abs(b) / 2 + 1;
  Integer r;
  mpz_root(r.get_mpz_t(), half.get_mpz_t(), 6);
  r += 1;
  Integer m = abs(a) > r ? Integer(abs(a)) : r;
  return 2 * m;
}

bool has_rational_root(const Trinomial& t, const Integer& bound) {
  const ZPoly f = t.polynomial();
  auto divs = positive_divisors(t.b());
  if (divs) {
    for (const auto& d : *divs) {
      if (d > bound) break;
      if (f.evaluate(d) == 0 || f.evaluate(-d) == 0) return true;
    }
    return false;
  }
  for (Integer r = -bound; r <= bound; ++r) {
    if (r != 0 && f.evaluate(r) == 0) return true;
  }
  return false;
}

// Degrees 2 and 3 a rational factor could have, seen through F mod p.
std::set<unsigned> admissible_degrees(const std::vector<unsigned>& partition) {
  std::set<unsigned> sums{0};
  for (unsigned d : partition) {
    std::set<unsigned> next = sums;
    for (unsigned s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  std::set<unsigned> out;
  for (unsigned d : {2u, 3u}) {
    if (sums.count(d)) out.insert(d);
  }
  return out;
}

bool divides(const ZPoly& f, const ZPoly& g) {
  return f.divmod_monic(g).second.is_zero();
}

bool has_quadratic_factor(const Trinomial& t, const Integer& bound) {
  const ZPoly f = t.polynomial();
  auto divs = positive_divisors(t.b());
  if (!divs) throw Error(ErrorKind::TooLarge, "cannot factor b for factor search");
  const Integer cmax = 2 * bound;
  const Integer emax = bound * bound;
  for (const auto& d : *divs) {
    if (d > emax) break;
    for (int sign : {1, -1}) {
      const Integer e = sign * d;
      for (Integer c = -cmax; c <= cmax; ++c) {
        if (divides(f, ZPoly(std::vector<Integer>{e, c, 1}))) return true;
      }
    }
  }
  return false;
}

bool has_cubic_factor(const Trinomial& t, const Integer& bound) {
  const ZPoly f = t.polynomial();
  const Integer& a = t.a();
  const Integer& b = t.b();
  auto divs = positive_divisors(b);
  if (!divs) throw Error(ErrorKind::TooLarge, "cannot factor b for factor search");
  const Integer cmax = 3 * bound;
  auto check = [&](const Integer& c0, const Integer& c1, const Integer& c2) {
    return divides(f, ZPoly(std::vector<Integer>{c0, c1, c2, 1}));
  };
  for (const auto& d : *divs) {
    for (int sign : {1, -1}) {
      const Integer c0 = sign * d;
      const Integer e0 = b / c0;
      if (c0 == e0) {
        // Then c2*e2 = 0 and c1 = -e1; the x^3 equation fixes c1.
        if (a == 0) continue;
        Integer q = -2 * c0;
        if (mpz_divisible_p(q.get_mpz_t(), a.get_mpz_t())) {
          Integer c1 = q / a;
          if (check(c0, c1, 0) || check(c0, -c1, a)) return true;
        }
        continue;
      }
      const Integer den = e0 - c0;
      for (Integer c2 = -cmax; c2 <= cmax; ++c2) {
        const Integer e2 = a - c2;
        Integer num = c0 * c2 * e2;
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) continue;
        if (check(c0, num / den, c2)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool is_irreducible(const Trinomial& t) {
  const Integer bound = root_bound(t.a(), t.b());
  if (has_rational_root(t, bound)) return false;

  const ZPoly f = t.polynomial();
  std::set<unsigned> possible{2, 3};
  for (std::uint32_t p : first_primes(25)) {
    const FpPoly fp = FpPoly::from_zpoly(f, p);
    if (!is_squarefree(fp)) continue;
    const auto partition = distinct_degree_partition(fp);
    if (partition.size() == 1) return true;
    std::set<unsigned> here = admissible_degrees(partition);
    std::set<unsigned> keep;
    for (unsigned d : possible) {
      if (here.count(d)) keep.insert(d);
    }
    possible = std::move(keep);
    if (possible.empty()) return true;
  }
  if (possible.count(2) && has_quadratic_factor(t, bound)) return false;
  if (possible.count(3) && has_cubic_factor(t, bound)) return false;
  return true;
}

}  // namespace sextic
