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

#include "sextic/classifier.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "sextic/arith.hpp"
#include "sextic/error.hpp"
#include "sextic/fp_poly.hpp"

namespace sextic {

namespace {

std::uint64_t mod(const Integer& x, std::uint64_t m) { return residue(x, m); }

Integer pow_ui(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// (m)_3 mod 3 as +1 or -1; m nonzero.
int unit_sign3(const Integer& m) { return mod(unit_part(3, m), 3) == 1 ? 1 : -1; }

bool in_set(std::uint64_t a, std::uint64_t b,
            std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> set) {
  return std::any_of(set.begin(), set.end(),
                     [&](const auto& pr) { return pr.first == a && pr.second == b; });
}

}  // namespace

ValuationQuadruple valuation_quadruple(const Trinomial& t, std::uint32_t p) {
  const Integer& a = t.a();
  const Integer& b = t.b();
  return {valuation(p, 5 * a + 6), valuation(p, a + b + 1), valuation(p, 5 * a - 6),
          valuation(p, -a + b + 1)};
}

bool theorem1_fails_at(const Trinomial& t, std::uint32_t p) {
  const Integer& a = t.a();
  const Integer& b = t.b();
  const bool pa = mod(a, p) == 0;
  const bool pb = mod(b, p) == 0;
  if (pb) return valuation(p, b) >= 2;
  if (p == 2 && pa) {
    const auto a4 = mod(a, 4), b4 = mod(b, 4);
    return !in_set(a4, b4, {{0, 1}, {2, 3}});
  }
  if (p == 3 && pa) {
    return !in_set(mod(a, 9), mod(b, 9),
                   {{0, 2}, {0, 4}, {0, 5}, {0, 7}, {3, 8}, {3, 1}, {3, 4}, {3, 7},
                    {6, 8}, {6, 1}, {6, 4}, {6, 7}});
  }
  if (!pa) return valuation(p, discriminant_cofactor(a, b)) >= 2;
  return false;
}

Theorem1Result theorem1_is_maximal(const Trinomial& t) {
  Theorem1Result r;
  const Integer& a = t.a();
  const Integer& b = t.b();
  auto violate = [&](const char* id) {
    r.maximal = false;
    r.violated.emplace_back(id);
  };
  auto sqf = is_squarefree(b);
  if (!sqf) throw Error(ErrorKind::IndeterminateCondition, "(i): cannot factor b");
  if (!*sqf) violate("i");
  if (theorem1_fails_at(t, 2) && mod(a, 2) == 0 && mod(b, 2) != 0) violate("ii");
  if (theorem1_fails_at(t, 3) && mod(a, 3) == 0 && mod(b, 3) != 0) violate("iii");

  // Strip every prime of ab from D, then D must be squarefree.
  Integer d = abs(discriminant_cofactor(a, b));
  const Integer ab = a * b;
  Integer g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), ab.get_mpz_t());
    if (g == 1) break;
    mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
  }
  auto dsqf = is_squarefree(d);
  if (!dsqf) {
    throw Error(ErrorKind::IndeterminateCondition,
                "(iv): cofactor " + d.get_str() + " is not certifiable");
  }
  if (!*dsqf) violate("iv");
  return r;
}

ExponentResult nu2(const Trinomial& t) {
  const Integer& a = t.a();
  const Integer& b = t.b();
  const auto a8 = mod(a, 8), b8 = mod(b, 8);
  if (a8 == 0 && (b8 == 3 || b8 == 7)) return {2, RuleMatch{"Thm2", "1"}};

  const auto q = valuation_quadruple(t, 2);
  if (mod(a, 4) == 2) {
    const std::uint64_t u = q.u.value();
    const Integer m = pow_ui(2, 2 * u + 1);
    if (residue(a + b + 1, m) == pow_ui(2, 2 * u)) return {1, RuleMatch{"Thm2", "2"}};
  }
  if (mod(a, 4) == 2 && mod(b, 4) == 1 && q.v < q.u * 2 && q.v.value() % 2 == 0 &&
      q.v >= 2) {
    const ZPoly f = t.polynomial();
    const Integer s = regular_integer(f, 2, 1);
    const Valuation v0 = valuation(2, f.evaluate(s));
    const Valuation v1 = valuation(2, f.derivative().evaluate(s));
    if (v0 == v1 * 2) return {1, RuleMatch{"Thm2", "3"}};
  }
  return {0, std::nullopt};
}

namespace {

// The shared s-condition of the shifted cases at 3.
bool shifted_condition3(const ZPoly& f, const Integer& s) {
  const Integer a0 = f.evaluate(s);
  const Valuation v0 = valuation(3, a0);
  const Valuation v1 = valuation(3, f.derivative().evaluate(s));
  const Valuation v0p = v0 + Valuation(1);
  const Valuation two_v1 = v1 * 2;
  if (Valuation(6) <= two_v1 && two_v1 < v0p) return true;
  return Valuation(5) <= v0p && v0p < two_v1 && v0.value() % 2 == 1 &&
         unit_sign3(a0) == -1;
}

bool slopes_condition3(const Valuation& tau, const Valuation& mu, const Integer& m) {
  const Valuation tp = tau + Valuation(1);
  const Valuation two_mu = mu * 2;
  if (Valuation(6) <= two_mu && two_mu < tp) return true;
  return Valuation(5) <= tp && tp < two_mu && tau.value() % 2 == 1 && unit_sign3(m) == -1;
}

}  // namespace

ExponentResult nu3(const Trinomial& t) {
  const Integer& a = t.a();
  const Integer& b = t.b();
  const ZPoly f = t.polynomial();
  const auto q = valuation_quadruple(t, 3);
  const auto a9 = mod(a, 9), b9 = mod(b, 9);
  const auto a27 = mod(a, 27);
  const auto a81 = mod(a, 81), b81 = mod(b, 81);
  const bool minus_branch = mod(b - a + 1, 81) == 0;   // b = a - 1 mod 81
  const bool plus_branch = mod(b + a + 1, 81) == 0;    // b = -a - 1 mod 81
  auto match = [](const char* id) { return ExponentResult{1, RuleMatch{"Thm3", id}}; };
  auto s_minus = [&] { return shifted_condition3(f, regular_integer(f, 3, 2)); };
  auto s_plus = [&] { return shifted_condition3(f, regular_integer(f, 3, 1)); };

  if (a9 == 0 && b9 == 8) return match("1");
  if (a27 == 12 && minus_branch && slopes_condition3(q.tau, q.mu, -a + b + 1)) {
    return match("2");
  }
  if (in_set(a81, b81, {{21, 74}, {48, 20}, {75, 47}}) && s_minus()) return match("3");
  if (a27 == 3 && minus_branch && s_minus()) return match("4");
  // The (5a-6)_3 = +-1 clause always holds.
  if (a27 == 12 && minus_branch && q.mu * 2 == q.tau + Valuation(1) &&
      unit_sign3(-a + b + 1) == 1 && s_minus()) {
    return match("5");
  }
  if (a27 == 15 && plus_branch && slopes_condition3(q.v, q.u, a + b + 1)) {
    return match("6");
  }
  if (in_set(a81, b81, {{6, 47}, {33, 20}, {60, 74}}) && s_plus()) return match("7");
  if (a27 == 24 && plus_branch && s_plus()) return match("8");
  if (a27 == 15 && plus_branch && q.u * 2 == q.v + Valuation(1) &&
      unit_sign3(a + b + 1) == 1 && s_plus()) {
    return match("9");
  }
  return {0, std::nullopt};
}

bool exceeds_irreducible_counts(const SplittingType& s, std::uint32_t p) {
  for (unsigned f = 1; f <= 6; ++f) {
    if (Integer(s.count_with_f(f)) > count_monic_irreducibles(p, f)) return true;
  }
  return false;
}

bool is_index_divisor(const SplittingType& s, std::uint32_t p) {
  if (!s.determined) throw Error(ErrorKind::Undetermined, "splitting is not determined");
  return exceeds_irreducible_counts(s, p);
}

namespace {

struct FragmentEntry {
  std::uint32_t prime;
  std::vector<PrimeShape> shapes;  // canonical order
  unsigned exponent;
};

const std::vector<FragmentEntry>& fragment_table() {
  static const std::vector<FragmentEntry> table = {
      {2, {{1, 2}, {1, 2}, {1, 2}}, 2},
      {2, {{1, 1}, {1, 1}, {1, 2}, {1, 2}}, 2},
      {2, {{1, 2}, {2, 2}}, 1},
  };
  return table;
}

}  // namespace

unsigned engstrom_exponent(const SplittingType& s, std::uint32_t p) {
  if (!s.determined) throw Error(ErrorKind::Undetermined, "splitting is not determined");
  if (!exceeds_irreducible_counts(s, p)) return 0;
  SplittingType c = s;
  c.canonicalize();
  for (const auto& row : fragment_table()) {
    if (row.prime == p && row.shapes == c.entries) return row.exponent;
  }
  if (p == 3 && c.count_with_f(1) >= 4) return 1;
  throw Error(ErrorKind::FragmentMiss,
              "no exponent for " + c.to_string() + " at " + std::to_string(p));
}

unsigned nu5(const Trinomial& t) {
  const OreOutcome o = ore_analyze(t.polynomial(), 5);
  if (o.regular) {
    if (exceeds_irreducible_counts(o.splitting, 5)) {
      throw Error(ErrorKind::PaperContradiction,
                  "splitting " + o.splitting.to_string() + " at 5 exceeds N_f");
    }
  } else {
    for (const auto& c : o.candidates) {
      if (exceeds_irreducible_counts(c, 5)) {
        throw Error(ErrorKind::PaperContradiction,
                    "candidate splitting " + c.to_string() + " at 5 exceeds N_f");
      }
    }
  }
  return 0;
}

IndexReport index_of_field(const Trinomial& t) {
  IndexReport r;
  r.input = reduce_trinomial(t);
  if (!is_irreducible(r.input)) {
    throw Error(ErrorKind::ReducibleInput, r.input.polynomial().to_string() + " is reducible");
  }
  const ExponentResult e2 = nu2(r.input);
  const ExponentResult e3 = nu3(r.input);
  r.nu2 = e2.value;
  r.nu3 = e3.value;
  r.nu5 = nu5(r.input);
  r.index = (1u << r.nu2) * (r.nu3 ? 3u : 1u);
  if (e2.rule) r.matched_rules.push_back(*e2.rule);
  if (e3.rule) r.matched_rules.push_back(*e3.rule);
  r.matched_rules.push_back({"Prop5", "0"});
  if (auto hit = corollary_fast_path(r.input)) r.matched_rules.push_back(hit->rule);

  const ZPoly f = r.input.polynomial();
  for (std::uint32_t p : {2u, 3u, 5u}) r.splitting_at.emplace(p, ore_analyze(f, p));

  r.theorem1 = theorem1_is_maximal(r.input);
  r.maximal_order_is_Zalpha = r.theorem1.maximal;
  if (r.maximal_order_is_Zalpha) r.matched_rules.push_back({"Thm1", "maximal"});
  r.monogenic_obstruction = r.index > 1;
  r.at2 = valuation_quadruple(r.input, 2);
  r.at3 = valuation_quadruple(r.input, 3);
  return r;
}

std::optional<CorollaryHit> corollary_fast_path(const Trinomial& t) {
  const Integer& a = t.a();
  const Integer& b = t.b();
  const auto a72 = mod(a, 72), b72 = mod(b, 72);
  auto hit = [](unsigned index, const char* id) {
    return CorollaryHit{index, RuleMatch{"Cor", id}};
  };
  if (a72 == 0) {
    static constexpr std::array<std::uint64_t, 25> excluded = {
        71, 3, 7, 8, 11, 15, 17, 19, 23, 26, 27, 31, 35,
        39, 42, 43, 44, 47, 51, 53, 55, 59, 62, 63, 67};
    if (std::find(excluded.begin(), excluded.end(), b72) == excluded.end()) {
      return hit(1, "1");
    }
  }
  if (in_set(mod(a, 96), mod(b, 96),
             {{14, 1}, {14, 33}, {22, 25}, {22, 57}, {38, 9}, {38, 41}, {46, 1},
              {46, 33}, {62, 17}, {62, 49}})) {
    return hit(2, "2");
  }
  if (a72 == 0) {
    for (std::uint64_t r : {8, 17, 26, 44, 62}) {
      if (b72 == r) return hit(3, "3");
    }
    for (std::uint64_t r : {3, 7, 11, 15, 19, 23, 27, 31, 39, 43, 51, 55, 59, 63, 67}) {
      if (b72 == r) return hit(4, "4");
    }
  }
  if (in_set(mod(a, 288), mod(b, 288), {{54, 89}, {126, 17}, {198, 233}, {270, 161}})) {
    return hit(6, "5");
  }
  if (a72 == 0 && (b72 == 71 || b72 == 35)) return hit(12, "6");
  return std::nullopt;
}

}  // namespace sextic
