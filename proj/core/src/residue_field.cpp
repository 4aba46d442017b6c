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

#include "sextic/residue_field.hpp"

#include <algorithm>
#include <sstream>

#include "factor_cz.hpp"
#include "sextic/error.hpp"

namespace sextic {

ResidueField::ResidueField(FpPoly modulus) : modulus_(std::move(modulus)) {
  if (!modulus_.is_monic() || modulus_.degree() < 1) {
    throw Error(ErrorKind::InvalidPolynomial,
                "residue field modulus must be monic of positive degree");
  }
  auto f = fp_factor(modulus_);
  if (f.size() != 1 || f.front().multiplicity != 1) {
    throw Error(ErrorKind::InvalidPolynomial,
                modulus_.to_string() + " is reducible mod " +
                    std::to_string(prime()));
  }
}

std::uint64_t ResidueField::size() const {
  const Integer q = order();
  if (!q.fits_ulong_p()) throw Error(ErrorKind::TooLarge, "residue field order exceeds 64 bits");
  return q.get_ui();
}

Integer ResidueField::order() const {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), prime(), degree());
  return q;
}

ResidueField::Elem ResidueField::inv(const Elem& a) const {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "inverse of zero");
  // Extended Euclid: track s with s*a = r (mod modulus).
  FpPoly r0 = modulus_, r1 = a % modulus_;
  FpPoly s0 = zero(), s1 = one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const FpPoly::Coeff c = inverse_mod(r0.coefficient(0), prime());
  return (s0 * FpPoly(prime(), std::vector<FpPoly::Coeff>{c})) % modulus_;
}

ResidueField::Elem ResidueField::element(std::uint64_t index) const {
  std::vector<FpPoly::Coeff> v(degree(), 0);
  for (unsigned i = 0; i < degree(); ++i) {
    v[i] = index % prime();
    index /= prime();
  }
  return FpPoly(prime(), std::move(v));
}

std::string ResidueField::format(const Elem& a) const {
  if (degree() == 1) return std::to_string(a.coefficient(0));
  return a.to_string("x");
}

ResiduePoly::ResiduePoly(ResidueField field) : field_(std::move(field)) {}

ResiduePoly::ResiduePoly(ResidueField field, std::vector<FpPoly> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c = field_.reduce(c);
  normalize();
}

void ResiduePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool ResiduePoly::is_monic() const {
  return !is_zero() && leading() == field_.one();
}

ResiduePoly ResiduePoly::monic() const {
  if (is_zero()) return *this;
  const FpPoly inv = field_.inv(leading());
  std::vector<FpPoly> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(field_.mul(x, inv));
  return ResiduePoly(field_, std::move(c));
}

FpPoly ResiduePoly::evaluate(const FpPoly& y) const {
  FpPoly acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, y), *it);
  }
  return acc;
}

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) {
  if (!(a.field_ == b.field_)) {
    throw Error(ErrorKind::InvalidPolynomial, "mixed residue fields");
  }
  if (a.is_zero() || b.is_zero()) return ResiduePoly(a.field_);
  const auto& F = a.field_;
  std::vector<FpPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return ResiduePoly(F, std::move(out));
}

std::pair<ResiduePoly, ResiduePoly> ResiduePoly::divmod(
    const ResiduePoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero");
  const auto& F = field_;
  const int n = degree();
  const int m = divisor.degree();
  if (n < m) return {ResiduePoly(F), *this};
  const FpPoly inv = F.inv(divisor.leading());
  std::vector<FpPoly> rem = coeffs_;
  std::vector<FpPoly> quot(n - m + 1, F.zero());
  for (int k = n - m; k >= 0; --k) {
    FpPoly q = F.mul(rem[k + m], inv);
    if (q.is_zero()) continue;
    for (int j = 0; j <= m; ++j) {
      rem[k + j] = F.sub(rem[k + j], F.mul(q, divisor.coeffs_[j]));
    }
    quot[k] = std::move(q);
  }
  rem.resize(m, F.zero());
  return {ResiduePoly(F, std::move(quot)), ResiduePoly(F, std::move(rem))};
}

std::string ResiduePoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const FpPoly& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c == field_.one();
    std::string cs = field_.format(c);
    const bool compound = cs.find(' ') != std::string::npos;
    if (i == 0) {
      os << cs;
      continue;
    }
    if (!unit) os << (compound ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace {

bool residue_less(const ResiduePoly& a, const ResiduePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    const auto& x = a.coefficients()[i];
    const auto& y = b.coefficients()[i];
    if (x == y) continue;
    return canonical_less(x, y);
  }
  return false;
}

}  // namespace

namespace {

struct ResidueOps {
  using Poly = ResiduePoly;
  ResidueField F;

  Poly one() const { return ResiduePoly(F, {F.one()}); }
  Poly variable() const { return ResiduePoly(F, {F.zero(), F.one()}); }
  Poly combine(const Poly& a, const Poly& b, bool subtract) const {
    std::vector<FpPoly> c(std::max(a.coefficients().size(), b.coefficients().size()), F.zero());
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) c[i] = a.coefficients()[i];
    for (std::size_t i = 0; i < b.coefficients().size(); ++i) {
      c[i] = subtract ? F.sub(c[i], b.coefficients()[i]) : F.add(c[i], b.coefficients()[i]);
    }
    return ResiduePoly(F, std::move(c));
  }
  Poly add(const Poly& a, const Poly& b) const { return combine(a, b, false); }
  Poly sub(const Poly& a, const Poly& b) const { return combine(a, b, true); }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const { return a.divmod(b); }
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  int degree(const Poly& a) const { return a.degree(); }
  Poly monic(const Poly& a) const { return a.monic(); }
  Poly derivative(const Poly& a) const {
    std::vector<FpPoly> c;
    for (std::size_t i = 1; i < a.coefficients().size(); ++i) {
      c.push_back(F.mul(F.constant(i % F.prime()), a.coefficients()[i]));
    }
    return ResiduePoly(F, std::move(c));
  }
  // c -> c^(q/p) inverts Frobenius on F_q.
  Poly pth_root(const Poly& a) const {
    std::vector<FpPoly> c;
    for (std::size_t i = 0; i < a.coefficients().size(); i += F.prime()) {
      FpPoly x = a.coefficients()[i];
      for (unsigned k = 1; k < F.degree(); ++k) x = pow_mod(x, F.prime(), F.modulus());
      c.push_back(std::move(x));
    }
    return ResiduePoly(F, std::move(c));
  }
  std::uint32_t characteristic() const { return F.prime(); }
  unsigned field_degree() const { return F.degree(); }
  Integer field_size() const { return F.order(); }
  Poly random(int below_degree, std::mt19937_64& rng) const {
    std::uniform_int_distribution<FpPoly::Coeff> d(0, F.prime() - 1);
    std::vector<FpPoly> c;
    for (int i = 0; i < below_degree; ++i) {
      std::vector<FpPoly::Coeff> e(F.degree());
      for (auto& x : e) x = d(rng);
      c.emplace_back(F.prime(), std::move(e));
    }
    return ResiduePoly(F, std::move(c));
  }
};

}  // namespace

std::vector<ResidueFactor> residue_factor(const ResiduePoly& r) {
  if (r.is_zero()) throw Error(ErrorKind::ZeroInput, "factor of zero polynomial");
  std::vector<ResidueFactor> out;
  if (r.degree() < 1) return out;
  const ResidueOps ops{r.field()};
  for (auto& [g, m] : detail::CzFactorizer<ResidueOps>(ops).factor(r)) out.push_back({std::move(g), m});
  std::sort(out.begin(), out.end(), [](const ResidueFactor& a, const ResidueFactor& b) {
    return residue_less(a.factor, b.factor);
  });
  return out;
}

bool is_separable(const std::vector<ResidueFactor>& factors) {
  return std::all_of(factors.begin(), factors.end(),
                     [](const ResidueFactor& f) { return f.multiplicity == 1; });
}

}  // namespace sextic
