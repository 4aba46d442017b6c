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

#ifndef SEXTIC_CLASSIFIER_HPP
#define SEXTIC_CLASSIFIER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sextic/ore.hpp"
#include "sextic/trinomial.hpp"
#include "sextic/valuation.hpp"

namespace sextic {

// A rule that fired, e.g. {"Thm2", "3"}.
struct RuleMatch {
  std::string theorem;
  std::string case_id;

  std::string label() const { return theorem + "-" + case_id; }
  friend bool operator==(const RuleMatch&, const RuleMatch&) = default;
};

struct ExponentResult {
  unsigned value = 0;
  std::optional<RuleMatch> rule;
};

// u = v_p(5a+6), v = v_p(a+b+1), mu = v_p(5a-6), tau = v_p(-a+b+1).
struct ValuationQuadruple {
  Valuation u;
  Valuation v;
  Valuation mu;
  Valuation tau;
};

ValuationQuadruple valuation_quadruple(const Trinomial& t, std::uint32_t p);

struct Theorem1Result {
  bool maximal = true;
  // Subset of "i", "ii", "iii", "iv".
  std::vector<std::string> violated;
};

// Global maximality test of Z[alpha].  Throws IndeterminateCondition when
// the squarefree part of 6^6 b - 5^5 a^6 cannot be certified.
Theorem1Result theorem1_is_maximal(const Trinomial& t);

// The same conditions restricted to one prime: true when p | (Z_K : Z[alpha])
// by the closed-form test.
bool theorem1_fails_at(const Trinomial& t, std::uint32_t p);

// Preconditions for the exponents: t reduced, F irreducible.
ExponentResult nu2(const Trinomial& t);
ExponentResult nu3(const Trinomial& t);
// Always 0; runs the polygon analysis at 5 and throws PaperContradiction
// if some splitting has more primes of degree f than F_5 has irreducibles.
unsigned nu5(const Trinomial& t);

// Some P_f > N_f.  Throws Undetermined.
bool is_index_divisor(const SplittingType& s, std::uint32_t p);
// Same test for any list of shapes; ignores the determined flag.
bool exceeds_irreducible_counts(const SplittingType& s, std::uint32_t p);

// v_p(i(K)) for the splitting types that can occur for these fields.
// Throws Undetermined, FragmentMiss.
unsigned engstrom_exponent(const SplittingType& s, std::uint32_t p);

struct IndexReport {
  Trinomial input = Trinomial(0, 1);
  unsigned nu2 = 0;
  unsigned nu3 = 0;
  unsigned nu5 = 0;
  unsigned index = 1;
  std::vector<RuleMatch> matched_rules;
  std::map<std::uint32_t, OreOutcome> splitting_at;
  bool maximal_order_is_Zalpha = false;
  bool monogenic_obstruction = false;

  // Kept for explanations.
  Theorem1Result theorem1;
  ValuationQuadruple at2;
  ValuationQuadruple at3;
};

// Reduces, certifies irreducibility and assembles i(K).  Throws
// ReducibleInput and anything the exponent rules raise.
IndexReport index_of_field(const Trinomial& t);

struct CorollaryHit {
  unsigned index = 1;
  RuleMatch rule;
};

// Congruence families with a known index; t must be reduced.
std::optional<CorollaryHit> corollary_fast_path(const Trinomial& t);

}  // namespace sextic

#endif  // SEXTIC_CLASSIFIER_HPP
