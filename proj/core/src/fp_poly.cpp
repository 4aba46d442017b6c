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

#include "sextic/fp_poly.hpp"

#include <algorithm>
#include <sstream>

#include "factor_cz.hpp"
#include "sextic/error.hpp"

namespace sextic {

FpPoly::FpPoly(std::uint32_t p) : p_(p) {
  if (p < 2) throw Error(ErrorKind::InvalidPrime, "modulus below 2");
}

FpPoly::FpPoly(std::uint32_t p, std::vector<Coeff> coefficients)
    : p_(p), coeffs_(std::move(coefficients)) {
  if (p < 2) throw Error(ErrorKind::InvalidPrime, "modulus below 2");
  for (auto& c : coeffs_) c %= p_;
  normalize();
}

FpPoly::FpPoly(std::uint32_t p, std::initializer_list<long> coefficients)
    : p_(p) {
  if (p < 2) throw Error(ErrorKind::InvalidPrime, "modulus below 2");
  for (long c : coefficients) {
    long r = c % static_cast<long>(p);
    if (r < 0) r += p;
    coeffs_.push_back(static_cast<Coeff>(r));
  }
  normalize();
}

FpPoly FpPoly::from_zpoly(const ZPoly& f, std::uint32_t p) {
  std::vector<Coeff> c;
  c.reserve(f.coefficients().size());
  for (const auto& x : f.coefficients()) c.push_back(residue(x, p));
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::monomial(std::uint32_t p, std::size_t degree, Coeff c) {
  std::vector<Coeff> v(degree + 1, 0);
  v[degree] = c;
  return FpPoly(p, std::move(v));
}

FpPoly FpPoly::monic_from_index(std::uint32_t p, std::size_t degree,
                                std::uint64_t index) {
  std::vector<Coeff> v(degree + 1, 0);
  for (std::size_t i = 0; i < degree; ++i) {
    v[i] = index % p;
    index /= p;
  }
  v[degree] = 1;
  return FpPoly(p, std::move(v));
}

void FpPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw Error(ErrorKind::ZeroInput, "inverse of zero mod p");
  // Extended Euclid on signed 64-bit values; p < 2^32.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  FpPoly out = *this;
  out.scale(inverse_mod(leading(), p_));
  return out;
}

FpPoly FpPoly::derivative() const {
  if (coeffs_.size() <= 1) return FpPoly(p_);
  std::vector<Coeff> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * (i % p_) % p_;
  }
  return FpPoly(p_, std::move(d));
}

FpPoly::Coeff FpPoly::evaluate(Coeff x) const {
  Coeff acc = 0;
  x %= p_;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = (acc * x + *it) % p_;
  }
  return acc;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] = (coeffs_[i] + o.coeffs_[i]) % p_;
  }
  normalize();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] = (coeffs_[i] + p_ - o.coeffs_[i]) % p_;
  }
  normalize();
  return *this;
}

FpPoly& FpPoly::scale(Coeff c) {
  c %= p_;
  for (auto& x : coeffs_) x = x * c % p_;
  normalize();
  return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::InvalidPolynomial, "mixed primes");
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<FpPoly::Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = (out[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.p_;
    }
  }
  return FpPoly(a.p_, std::move(out));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero");
  if (divisor.p_ != p_) throw Error(ErrorKind::InvalidPolynomial, "mixed primes");
  const int n = degree();
  const int m = divisor.degree();
  if (n < m) return {FpPoly(p_), *this};
  const Coeff inv = inverse_mod(divisor.leading(), p_);
  std::vector<Coeff> rem = coeffs_;
  std::vector<Coeff> quot(n - m + 1, 0);
  for (int k = n - m; k >= 0; --k) {
    Coeff q = rem[k + m] * inv % p_;
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= m; ++j) {
      rem[k + j] = (rem[k + j] + p_ - q * divisor.coeffs_[j] % p_) % p_;
    }
  }
  rem.resize(m);
  return {FpPoly(p_, std::move(quot)), FpPoly(p_, std::move(rem))};
}

bool FpPoly::divisible_by(const FpPoly& divisor) const {
  return divmod(divisor).second.is_zero();
}

ZPoly FpPoly::lift() const {
  std::vector<Integer> v;
  v.reserve(coeffs_.size());
  for (Coeff c : coeffs_) v.emplace_back(static_cast<unsigned long>(c));
  return ZPoly(std::move(v));
}

ZPoly FpPoly::balanced_lift() const {
  std::vector<Integer> v;
  v.reserve(coeffs_.size());
  for (Coeff c : coeffs_) {
    Integer x(static_cast<unsigned long>(c));
    if (2 * c > p_) x -= p_;
    v.push_back(x);
  }
  return ZPoly(std::move(v));
}

std::string FpPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Coeff c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) {
      if (c != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

bool canonical_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coefficients() < b.coefficients();
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly pow_mod(const FpPoly& base, std::uint64_t exponent,
               const FpPoly& modulus) {
  FpPoly result = FpPoly(base.prime(), {1}) % modulus;
  FpPoly b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1U) result = (result * b) % modulus;
    exponent >>= 1U;
    if (exponent > 0) b = (b * b) % modulus;
  }
  return result;
}

namespace {

struct FpOps {
  using Poly = FpPoly;
  std::uint32_t p;

  Poly one() const { return FpPoly(p, {1}); }
  Poly variable() const { return FpPoly::monomial(p, 1); }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const { return a.divmod(b); }
  bool is_zero(const Poly& a) const { return a.is_zero(); }
  int degree(const Poly& a) const { return a.degree(); }
  Poly monic(const Poly& a) const { return a.monic(); }
  Poly derivative(const Poly& a) const { return a.derivative(); }
  Poly pth_root(const Poly& a) const {
    std::vector<FpPoly::Coeff> c;
    for (std::size_t i = 0; i < a.coefficients().size(); i += p) c.push_back(a.coefficients()[i]);
    return FpPoly(p, std::move(c));
  }
  std::uint32_t characteristic() const { return p; }
  unsigned field_degree() const { return 1; }
  Integer field_size() const { return Integer(static_cast<unsigned long>(p)); }
  Poly random(int below_degree, std::mt19937_64& rng) const {
    std::uniform_int_distribution<FpPoly::Coeff> d(0, p - 1);
    std::vector<FpPoly::Coeff> c(static_cast<std::size_t>(below_degree));
    for (auto& x : c) x = d(rng);
    return FpPoly(p, std::move(c));
  }
};

}  // namespace

std::vector<FpFactor> fp_factor(const FpPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "factor of zero polynomial");
  std::vector<FpFactor> out;
  if (f.degree() < 1) return out;
  const FpOps ops{f.prime()};
  for (auto& [g, m] : detail::CzFactorizer<FpOps>(ops).factor(f)) out.push_back({std::move(g), m});
  std::sort(out.begin(), out.end(), [](const FpFactor& x, const FpFactor& y) {
    return canonical_less(x.factor, y.factor);
  });
  return out;
}

bool is_squarefree(const FpPoly& f) {
  if (f.is_zero()) return false;
  FpPoly d = f.derivative();
  if (d.is_zero()) return f.degree() == 0;
  return gcd(f, d).degree() == 0;
}

std::vector<unsigned> distinct_degree_partition(const FpPoly& f_in) {
  FpPoly f = f_in.monic();
  const std::uint32_t p = f.prime();
  std::vector<unsigned> degrees;
  const FpPoly x = FpPoly::monomial(p, 1);
  FpPoly h = x % f;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    h = pow_mod(h, p, f);
    FpPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      for (int k = 0; k < g.degree() / static_cast<int>(d); ++k) {
        degrees.push_back(d);
      }
      f = f.divmod(g).first;
      h = h % f;
    }
  }
  if (f.degree() > 0) degrees.push_back(static_cast<unsigned>(f.degree()));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

int mobius(std::uint64_t n) {
  if (n == 0) return 0;
  int result = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

Integer count_monic_irreducibles(std::uint32_t p, unsigned f) {
  if (f == 0) throw Error(ErrorKind::ZeroInput, "degree must be positive");
  Integer total = 0;
  for (unsigned d = 1; d <= f; ++d) {
    if (f % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), p, f / d);
    if (mu > 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total / f;
}

}  // namespace sextic
