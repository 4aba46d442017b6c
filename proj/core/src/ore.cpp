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

#include "sextic/ore.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "sextic/error.hpp"

namespace sextic {

void SplittingType::canonicalize() { std::sort(entries.begin(), entries.end()); }

unsigned SplittingType::degree() const {
  unsigned n = 0;
  for (const auto& s : entries) n += s.e * s.f;
  return n;
}

unsigned SplittingType::count_with_f(unsigned f) const {
  return static_cast<unsigned>(std::count_if(
      entries.begin(), entries.end(), [f](const PrimeShape& s) { return s.f == f; }));
}

std::string SplittingType::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ",";
    os << "(" << entries[i].e << "," << entries[i].f << ")";
  }
  os << "}";
  return os.str();
}

namespace {

void check_sextic(const ZPoly& f) {
  if (f.degree() != 6 || !f.is_monic()) {
    throw Error(ErrorKind::InvalidPolynomial, "expected a monic sextic, got " + f.to_string());
  }
}

PhiReport analyze_phi(const ZPoly& f, const FpFactor& factor, const ZPoly& phi,
                      std::uint32_t p) {
  PhiReport r;
  r.factor = factor.factor;
  r.multiplicity = factor.multiplicity;
  r.phi = phi;
  const PhiExpansion e = phi_expand(f, phi, p);
  r.valuations = e.valuations();
  r.polygon = principal_polygon(r.valuations);
  r.regular = true;
  for (const auto& s : r.polygon.sides) {
    SideReport sr{s, residual_polynomial(e, s), {}, false};
    sr.factors = residue_factor(sr.residual);
    sr.separable = is_separable(sr.factors);
    r.regular = r.regular && sr.separable;
    r.sides.push_back(std::move(sr));
  }
  r.index = phi_index(r.polygon, static_cast<unsigned>(phi.degree()));
  return r;
}

struct ShiftStep {
  std::uint64_t k = 0;
  std::uint64_t t = 0;
};

// The next shift for a degree-1 factor, or nullopt with a reason.
std::optional<ShiftStep> next_shift(const PhiReport& r, std::uint32_t p, bool strict,
                                    std::string& reason) {
  const SideReport* bad = nullptr;
  for (const auto& s : r.sides) {
    if (s.separable) continue;
    if (bad) {
      reason = "more than one inseparable side";
      return std::nullopt;
    }
    bad = &s;
  }
  if (!bad) {
    reason = "already regular";
    return std::nullopt;
  }
  if (!bad->side.integer_slope()) {
    reason = "inseparable residual on slope " + bad->side.slope_string();
    return std::nullopt;
  }
  const ResidueFactor* rep = nullptr;
  for (const auto& fac : bad->factors) {
    if (fac.multiplicity < 2) continue;
    if (rep) {
      reason = "several repeated residual factors";
      return std::nullopt;
    }
    rep = &fac;
  }
  if (rep->factor.degree() != 1 || (strict && rep->multiplicity != 2)) {
    reason = "residual factor " + rep->factor.to_string() + "^" +
             std::to_string(rep->multiplicity) + " is not a double root";
    return std::nullopt;
  }
  // Monic y + c has root -c.
  const std::uint64_t c = rep->factor.coefficients()[0].coefficient(0);
  return ShiftStep{static_cast<std::uint64_t>(bad->side.slope_h()), (p - c) % p};
}

std::uint64_t iteration_cap(const ZPoly& f, std::uint32_t p) {
  const Valuation v = valuation(p, polynomial_discriminant(f));
  return v.value() / 2 + 1;
}

Integer shifted(const Integer& s, std::uint32_t p, const ShiftStep& step) {
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, step.k);
  return s + pk * Integer(static_cast<unsigned long>(step.t));
}

// Lenient search used by ore_analyze; keeps the last report on failure.
PhiReport search_regular(const ZPoly& f, const FpFactor& factor, std::uint32_t p,
                         PhiReport r) {
  const std::uint64_t cap = iteration_cap(f, p);
  Integer s = -r.phi.coefficient(0);
  r.shift_history.push_back(s);
  for (std::uint64_t it = 0; it < cap && !r.regular; ++it) {
    std::string reason;
    auto step = next_shift(r, p, false, reason);
    if (!step) break;
    s = shifted(s, p, *step);
    std::vector<Integer> history = std::move(r.shift_history);
    history.push_back(s);
    r = analyze_phi(f, factor, ZPoly::linear_root(s), p);
    r.shift_history = std::move(history);
  }
  return r;
}

// All multisets of (me, mf) with sum me*mf = a.
void shape_partitions(unsigned a, std::vector<std::pair<unsigned, unsigned>>& cur,
                      std::vector<std::vector<std::pair<unsigned, unsigned>>>& out,
                      std::pair<unsigned, unsigned> min_part) {
  if (a == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned me = 1; me <= a; ++me) {
    for (unsigned mf = 1; me * mf <= a; ++mf) {
      std::pair<unsigned, unsigned> part{me, mf};
      if (part < min_part) continue;
      cur.push_back(part);
      shape_partitions(a - me * mf, cur, out, part);
      cur.pop_back();
    }
  }
}

std::vector<SplittingType> candidate_splittings(const std::vector<PhiReport>& reports) {
  // Each residual factor psi^a contributes one of several local shapes.
  std::vector<std::vector<std::vector<PrimeShape>>> choices;
  for (const auto& r : reports) {
    const unsigned dphi = static_cast<unsigned>(r.phi.degree());
    for (const auto& s : r.sides) {
      const unsigned e = static_cast<unsigned>(s.side.slope_e());
      for (const auto& fac : s.factors) {
        const unsigned f0 = dphi * static_cast<unsigned>(fac.factor.degree());
        std::vector<std::vector<std::pair<unsigned, unsigned>>> parts;
        std::vector<std::pair<unsigned, unsigned>> cur;
        shape_partitions(fac.multiplicity, cur, parts, {1, 1});
        std::vector<std::vector<PrimeShape>> opts;
        for (const auto& pt : parts) {
          std::vector<PrimeShape> shapes;
          for (auto [me, mf] : pt) shapes.push_back({e * me, f0 * mf});
          opts.push_back(std::move(shapes));
        }
        choices.push_back(std::move(opts));
      }
    }
  }
  std::vector<SplittingType> out;
  std::vector<PrimeShape> acc;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      SplittingType t{acc, false};
      t.canonicalize();
      out.push_back(std::move(t));
      return;
    }
    for (const auto& opt : choices[i]) {
      acc.insert(acc.end(), opt.begin(), opt.end());
      rec(i + 1);
      acc.resize(acc.size() - opt.size());
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const SplittingType& a, const SplittingType& b) {
    return a.entries < b.entries;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

OreOutcome ore_analyze(const ZPoly& f, std::uint32_t p) {
  check_sextic(f);
  if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p));
  OreOutcome out;
  out.prime = p;
  out.height_one = height_one_zero_index(f, p);
  for (const auto& fac : fp_factor(FpPoly::from_zpoly(f, p))) {
    ZPoly phi = fac.factor.balanced_lift();
    // A lift equal to F itself has no finite point at 0; move it off F.
    if (phi == f) phi += ZPoly(std::vector<Integer>{Integer(p)});
    PhiReport r = analyze_phi(f, fac, phi, p);
    if (!r.regular && fac.factor.degree() == 1) {
      r = search_regular(f, fac, p, std::move(r));
    }
    out.diagnostics.push_back(std::move(r));
  }
  out.regular = std::all_of(out.diagnostics.begin(), out.diagnostics.end(),
                            [](const PhiReport& r) { return r.regular; });
  for (const auto& r : out.diagnostics) out.index_lower_bound += r.index;
  if (out.height_one) {
    if (out.index_lower_bound != 0) {
      throw Error(ErrorKind::PaperContradiction, "height-1 polygons with positive index");
    }
  }
  if (out.regular) {
    out.splitting.determined = true;
    for (const auto& r : out.diagnostics) {
      const unsigned dphi = static_cast<unsigned>(r.phi.degree());
      for (const auto& s : r.sides) {
        for (const auto& fac : s.factors) {
          out.splitting.entries.push_back(
              {static_cast<unsigned>(s.side.slope_e()),
               dphi * static_cast<unsigned>(fac.factor.degree())});
        }
      }
    }
    out.splitting.canonicalize();
    if (out.splitting.degree() != 6) {
      throw Error(ErrorKind::PaperContradiction,
                  "splitting " + out.splitting.to_string() + " does not have degree 6");
    }
  } else {
    out.candidates = candidate_splittings(out.diagnostics);
  }
  return out;
}

bool height_one_zero_index(const ZPoly& f, std::uint32_t p) {
  check_sextic(f);
  for (const auto& fac : fp_factor(FpPoly::from_zpoly(f, p))) {
    if (fac.multiplicity == 1) continue;
    const PhiExpansion e = phi_expand(f, fac.factor.balanced_lift(), p);
    const NewtonPolygon n = principal_polygon(e);
    if (n.sides.size() != 1 || n.sides.front().height() != 1) return false;
  }
  return true;
}

Integer regular_integer(const ZPoly& f, std::uint32_t p, const Integer& z) {
  check_sextic(f);
  if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p));
  const FpPoly fbar = FpPoly::from_zpoly(f, p);
  const FpPoly lin = FpPoly::from_zpoly(ZPoly::linear_root(z), p);
  std::optional<FpFactor> factor;
  for (const auto& fac : fp_factor(fbar)) {
    if (fac.factor == lin) factor = fac;
  }
  if (!factor) {
    throw Error(ErrorKind::IrrelevantModulus,
                "x - " + z.get_str() + " does not divide F mod " + std::to_string(p));
  }
  const std::uint64_t cap = iteration_cap(f, p);
  Integer s = z;
  PhiReport r = analyze_phi(f, *factor, ZPoly::linear_root(s), p);
  for (std::uint64_t it = 0; !r.regular; ++it) {
    if (it >= cap) {
      throw Error(ErrorKind::NonTerminating,
                  "no regular integer after " + std::to_string(cap) + " shifts");
    }
    std::string reason;
    auto step = next_shift(r, p, true, reason);
    if (!step) throw Error(ErrorKind::OutsidePaperScope, reason);
    s = shifted(s, p, *step);
    PhiReport next = analyze_phi(f, *factor, ZPoly::linear_root(s), p);
    if (!next.regular && next.index <= r.index) {
      throw Error(ErrorKind::PaperContradiction,
                  "shift to " + s.get_str() + " did not raise the phi-index");
    }
    r = std::move(next);
  }
  return s;
}

}  // namespace sextic
