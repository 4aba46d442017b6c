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

#include "numeric_roots.hpp"

#include <cmath>

#include "sextic/zpoly.hpp"

namespace sextic::testing {

using C = std::complex<long double>;

std::vector<C> trinomial_roots(long a, long b) {
  auto f = [&](C x) { return std::pow(x, 6) + static_cast<long double>(a) * std::pow(x, 5) + static_cast<long double>(b); };
  std::vector<C> z(6);
  const C seed(0.4L, 0.9L);
  const long double radius = 1.0L + std::max(std::fabs(static_cast<long double>(a)), std::pow(std::fabs(static_cast<long double>(b)), 1.0L / 6));
  for (int i = 0; i < 6; ++i) z[i] = radius * std::pow(seed, i);
  for (int iter = 0; iter < 2000; ++iter) {
    long double moved = 0;
    for (int i = 0; i < 6; ++i) {
      C den = 1;
      for (int j = 0; j < 6; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      const C step = f(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-16L) break;
  }
  return z;
}

bool numeric_irreducible(long a, long b) {
  if (b == 0) return false;
  const auto roots = trinomial_roots(a, b);
  const ZPoly f{b, 0, 0, 0, 0, a, 1};
  for (unsigned mask = 1; mask < (1u << 6); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k > 3) continue;
    std::vector<C> poly{1};
    for (int i = 0; i < 6; ++i) {
      if (!(mask >> i & 1)) continue;
      std::vector<C> next(poly.size() + 1, 0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j + 1] += poly[j];
        next[j] -= roots[i] * poly[j];
      }
      poly = next;
    }
    std::vector<Integer> coeffs;
    bool integral = true;
    for (const auto& c : poly) {
      const long double r = std::round(c.real());
      if (std::fabs(c.imag()) > 1e-6L || std::fabs(c.real() - r) > 1e-6L * std::max(1.0L, std::fabs(r))) {
        integral = false;
        break;
      }
      coeffs.emplace_back(static_cast<long>(r));
    }
    if (!integral) continue;
    if (f.divmod_monic(ZPoly(coeffs)).second.is_zero()) return false;
  }
  return true;
}

}  // namespace sextic::testing
