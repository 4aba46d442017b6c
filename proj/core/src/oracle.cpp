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

#include "sextic/oracle.hpp"

#include <algorithm>
#include <set>

#include "sextic/arith.hpp"
#include "sextic/error.hpp"

namespace sextic::oracle {

namespace {

// Dense F_p polynomials as plain vectors, lowest degree first.
using Vec = std::vector<std::uint64_t>;

void trim(Vec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec reduce(const ZPoly& f, std::uint32_t p) {
  Vec v;
  for (const auto& c : f.coefficients()) v.push_back(residue(c, p));
  trim(v);
  return v;
}

Vec mul(const Vec& a, const Vec& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

// a^(p-2); p < 2^32 keeps every product in range.
std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorKind::ZeroInput, "no inverse");
  std::uint64_t r = 1, base = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
  }
  return r;
}

// Remainder of a by b (b nonzero); quotient returned through q.
Vec rem(Vec a, const Vec& b, std::uint64_t p, Vec* q = nullptr) {
  const std::uint64_t li = inv(b.back(), p);
  if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t c = a.back() * li % p;
    if (q) (*q)[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
    }
    trim(a);
  }
  return a;
}

Vec gcd(Vec a, Vec b, std::uint64_t p) {
  while (!b.empty()) {
    Vec r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = inv(a.back(), p);
    for (auto& c : a) c = c * li % p;
  }
  return a;
}

// Monic polynomial of given degree whose low coefficients are the base-p
// digits of index.
Vec monic(std::uint64_t index, unsigned degree, std::uint64_t p) {
  Vec v(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    v[i] = index % p;
    index /= p;
  }
  v[degree] = 1;
  return v;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool divides(const Vec& a, const Vec& b, std::uint64_t p) { return rem(a, b, p).empty(); }

struct Factor {
  Vec g;
  unsigned mult;
};

// Trial division by every monic polynomial of increasing degree.
std::vector<Factor> factor_bruteforce(Vec f, std::uint64_t p) {
  const std::uint64_t li = inv(f.back(), p);
  for (auto& c : f) c = c * li % p;
  std::vector<Factor> out;
  for (unsigned d = 1; f.size() > 1 && 2 * d <= f.size() - 1; ++d) {
    const std::uint64_t n = ipow(p, d);
    for (std::uint64_t i = 0; i < n; ++i) {
      const Vec g = monic(i, d, p);
      unsigned m = 0;
      Vec q;
      while (f.size() > 1 && rem(f, g, p, &q).empty()) {
        f = q;
        ++m;
      }
      if (m) out.push_back({g, m});
    }
  }
  if (f.size() > 1) out.push_back({f, 1});
  return out;
}

ZPoly lift(const Vec& v) {
  std::vector<Integer> c;
  for (auto x : v) c.emplace_back(static_cast<unsigned long>(x));
  return ZPoly(std::move(c));
}

}  // namespace

bool dedekind_divides(const ZPoly& f, std::uint32_t p) {
  const Vec fbar = reduce(f, p);
  Vec gbar{1};
  Vec hbar{1};
  if (static_cast<std::size_t>(p) >= fbar.size()) {
    // p above the degree: gcd(f, f') is the product of g_i^(e_i - 1).
    Vec d;
    for (std::size_t i = 1; i < fbar.size(); ++i) d.push_back(fbar[i] * i % p);
    trim(d);
    hbar = gcd(fbar, d, p);
    rem(fbar, hbar, p, &gbar);
    const std::uint64_t li = inv(gbar.back(), p);
    for (auto& c : gbar) c = c * li % p;
  } else {
    for (const auto& fac : factor_bruteforce(fbar, p)) {
      gbar = mul(gbar, fac.g, p);
      for (unsigned k = 1; k < fac.mult; ++k) hbar = mul(hbar, fac.g, p);
    }
  }
  const ZPoly g = lift(gbar);
  const ZPoly h = lift(hbar);
  ZPoly t = g * h - f;
  t = t.divide_exact(Integer(p));
  const Vec tbar = reduce(t, p);
  const Vec d = gcd(gcd(tbar, gbar, p), hbar, p);
  return d.size() > 1;
}

NewtonPolygon hull_bruteforce(const std::vector<Valuation>& points) {
  struct P {
    std::int64_t x, y;
  };
  std::vector<P> pts;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_finite()) {
      pts.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(points[i].value())});
    }
  }
  NewtonPolygon n;
  n.source_points = points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto& A = pts[i];
      const auto& B = pts[j];
      if (B.y >= A.y) continue;
      bool supporting = true;
      bool maximal = true;
      for (const auto& C : pts) {
        // Sign of C relative to line AB: >0 above.
        const std::int64_t s = (B.x - A.x) * (C.y - A.y) - (B.y - A.y) * (C.x - A.x);
        if (s < 0) supporting = false;
        if (s == 0 && (C.x < A.x || C.x > B.x)) maximal = false;
      }
      if (supporting && maximal) n.sides.push_back({{A.x, A.y}, {B.x, B.y}});
    }
  }
  std::sort(n.sides.begin(), n.sides.end(),
            [](const Side& a, const Side& b) { return a.start.x < b.start.x; });
  return n;
}

std::uint64_t lattice_index_bruteforce(const NewtonPolygon& polygon, unsigned deg_phi) {
  std::int64_t xmax = 0, ymax = 0;
  for (const auto& s : polygon.sides) {
    xmax = std::max(xmax, s.end.x);
    ymax = std::max(ymax, s.start.y);
  }
  std::uint64_t count = 0;
  for (std::int64_t x = 1; x <= xmax; ++x) {
    for (std::int64_t y = 1; y <= ymax; ++y) {
      bool under = false;
      for (const auto& s : polygon.sides) {
        if (x < s.start.x || x > s.end.x) continue;
        // y <= start.y - (x - start.x) * h / l
        if (y * s.length() <= s.start.y * s.length() - (x - s.start.x) * s.height()) {
          under = true;
        }
      }
      if (under) ++count;
    }
  }
  return count * deg_phi;
}

Integer discriminant_resultant(const Trinomial& t) {
  const ZPoly f = t.polynomial();
  const ZPoly g = f.derivative();
  const int m = f.degree(), n = g.degree(), size = m + n;
  std::vector<std::vector<mpq_class>> a(size, std::vector<mpq_class>(size, 0));
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) a[r][r + j] = mpq_class(f.coefficient(m - j));
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) a[n + r][r + j] = mpq_class(g.coefficient(n - j));
  }
  mpq_class det = 1;
  for (int k = 0; k < size; ++k) {
    int piv = k;
    while (piv < size && a[piv][k] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int i = k + 1; i < size; ++i) {
      if (a[i][k] == 0) continue;
      const mpq_class factor = a[i][k] / a[k][k];
      for (int j = k; j < size; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  // n = 6: sign (-1)^(6*5/2) = -1.
  return -Integer(det.get_num());
}

std::uint64_t irreducible_count_bruteforce(std::uint32_t p, unsigned f) {
  if (f == 0) throw Error(ErrorKind::ZeroInput, "degree 0");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < f && size <= 15625; ++i) size *= p;
  if (size > 15625) {
    throw Error(ErrorKind::TooLarge, std::to_string(p) + "^" + std::to_string(f) + " > 5^6");
  }
  const std::uint64_t total = ipow(p, f);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Vec cand = monic(i, f, p);
    bool reducible = false;
    for (unsigned d = 1; 2 * d <= f && !reducible; ++d) {
      const std::uint64_t n = ipow(p, d);
      for (std::uint64_t j = 0; j < n && !reducible; ++j) {
        reducible = divides(cand, monic(j, d, p), p);
      }
    }
    if (!reducible) ++count;
  }
  return count;
}

namespace {

OracleVerdict verdict(std::string context, std::string fast, std::string slow) {
  OracleVerdict v;
  v.agrees = fast == slow;
  v.fast_value = std::move(fast);
  v.oracle_value = std::move(slow);
  v.context = std::move(context);
  return v;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<OracleVerdict> verify_report(const IndexReport& report) {
  std::vector<OracleVerdict> out;
  const Trinomial& t = report.input;
  const ZPoly f = t.polynomial();
  const std::string in = t.to_string();
  out.push_back(verdict("discriminant " + in, discriminant(t).get_str(),
                        discriminant_resultant(t).get_str()));
  for (const auto& [p, o] : report.splitting_at) {
    const std::string at = in + " p=" + std::to_string(p);
    const bool ded = dedekind_divides(f, p);
    out.push_back(verdict("local maximality " + at, yes_no(theorem1_fails_at(t, p)), yes_no(ded)));
    if (o.regular) {
      out.push_back(verdict("ore bound " + at, yes_no(o.index_lower_bound >= 1), yes_no(ded)));
    }
    for (const auto& r : o.diagnostics) {
      const std::string ctx = at + " phi=" + r.phi.to_string();
      const NewtonPolygon brute = hull_bruteforce(r.valuations);
      out.push_back(verdict("polygon " + ctx, r.polygon.vertex_string(), brute.vertex_string()));
      out.push_back(verdict("phi index " + ctx, std::to_string(r.index),
                            std::to_string(lattice_index_bruteforce(
                                brute, static_cast<unsigned>(r.phi.degree())))));
    }
  }
  // Z[alpha] is maximal iff no prime of b * D fails Dedekind.
  const Integer bd = t.b() * discriminant_cofactor(t.a(), t.b());
  if (auto primes = factor_integer(bd)) {
    bool any = false;
    bool complete = true;
    for (const auto& pp : *primes) {
      if (pp.prime > 0xffffffffUL) {
        complete = false;
        continue;
      }
      any = any || dedekind_divides(f, static_cast<std::uint32_t>(pp.prime.get_ui()));
    }
    if (complete || any) {
      out.push_back(
          verdict("maximal order " + in, yes_no(report.maximal_order_is_Zalpha), yes_no(!any)));
    }
  }
  return out;
}

bool all_agree(const std::vector<OracleVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const OracleVerdict& v) { return v.agrees; });
}

}  // namespace sextic::oracle
