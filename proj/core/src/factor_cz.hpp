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

// Squarefree, distinct-degree and Cantor-Zassenhaus factorization over a
// finite field F_q, q = p^k.  Ops adapts a concrete polynomial type; see
// fp_poly.cpp and residue_field.cpp.

#ifndef SEXTIC_FACTOR_CZ_HPP
#define SEXTIC_FACTOR_CZ_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sextic/arith.hpp"

namespace sextic::detail {

template <class Ops>
class CzFactorizer {
 public:
  using P = typename Ops::Poly;

  explicit CzFactorizer(const Ops& ops) : ops_(ops), rng_(0x5e871cULL) {}

  // Monic irreducible factors with multiplicities, unsorted.
  std::vector<std::pair<P, unsigned>> factor(const P& f) {
    std::vector<std::pair<P, unsigned>> out;
    for (const auto& [g, m] : squarefree(ops_.monic(f))) {
      for (const auto& [h, d] : distinct_degree(g)) {
        std::vector<P> pieces;
        equal_degree(h, d, pieces);
        for (auto& piece : pieces) out.emplace_back(std::move(piece), m);
      }
    }
    return out;
  }

 private:
  P rem(const P& a, const P& b) const { return ops_.divmod(a, b).second; }
  P quo(const P& a, const P& b) const { return ops_.divmod(a, b).first; }

  P gcd(P a, P b) const {
    while (!ops_.is_zero(b)) {
      P r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return ops_.monic(a);
  }

  P pow_mod(const P& base, const Integer& e, const P& m) const {
    P result = rem(ops_.one(), m);
    P b = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(ops_.mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(ops_.mul(result, b), m);
    }
    return result;
  }

  bool is_one(const P& a) const { return ops_.degree(a) == 0; }

  std::vector<std::pair<P, unsigned>> squarefree(const P& f) const {
    std::vector<std::pair<P, unsigned>> out;
    P c = gcd(f, ops_.derivative(f));
    P w = quo(f, c);
    unsigned i = 1;
    while (!is_one(w)) {
      P y = gcd(w, c);
      P fac = quo(w, y);
      if (!is_one(fac)) out.emplace_back(ops_.monic(fac), i);
      w = std::move(y);
      c = quo(c, w);
      ++i;
    }
    if (!is_one(c)) {
      for (const auto& [g, m] : squarefree(ops_.pth_root(c))) {
        out.emplace_back(g, m * ops_.characteristic());
      }
    }
    return out;
  }

  // Pairs (product of all degree-d factors, d).
  std::vector<std::pair<P, unsigned>> distinct_degree(P f) const {
    std::vector<std::pair<P, unsigned>> out;
    const P x = ops_.variable();
    P h = rem(x, f);
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(ops_.degree(f)); ++d) {
      h = pow_mod(h, ops_.field_size(), f);
      P g = gcd(f, ops_.sub(h, x));
      if (!is_one(g)) {
        out.emplace_back(g, d);
        f = quo(f, g);
        h = rem(h, f);
      }
    }
    if (ops_.degree(f) > 0) out.emplace_back(f, static_cast<unsigned>(ops_.degree(f)));
    return out;
  }

  P random_poly(int below_degree) {
    P r = ops_.random(below_degree, rng_);
    return r;
  }

  // Splitting polynomial: a^((q^d-1)/2) - 1 for odd q, the trace for even q.
  P splitter(const P& a, unsigned d, const P& g) const {
    Integer qd = 1;
    for (unsigned i = 0; i < d; ++i) qd *= ops_.field_size();
    if (ops_.characteristic() != 2) {
      return ops_.sub(pow_mod(a, (qd - 1) / 2, g), ops_.one());
    }
    const unsigned steps = d * ops_.field_degree();
    P t = rem(a, g);
    P acc = t;
    for (unsigned i = 1; i < steps; ++i) {
      t = rem(ops_.mul(t, t), g);
      acc = ops_.add(acc, t);
    }
    return acc;
  }

  void equal_degree(const P& g, unsigned d, std::vector<P>& out) {
    const int n = ops_.degree(g);
    if (n == static_cast<int>(d)) {
      out.push_back(ops_.monic(g));
      return;
    }
    while (true) {
      P a = random_poly(n);
      if (ops_.degree(a) < 1) continue;
      P h = gcd(g, splitter(a, d, g));
      if (ops_.degree(h) > 0 && ops_.degree(h) < n) {
        equal_degree(h, d, out);
        equal_degree(quo(g, h), d, out);
        return;
      }
    }
  }

  const Ops& ops_;
  std::mt19937_64 rng_;
};

}  // namespace sextic::detail

#endif  // SEXTIC_FACTOR_CZ_HPP
