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

#include "sextic/zpoly.hpp"

#include <cctype>
#include <sstream>

#include "sextic/error.hpp"

namespace sextic {

ZPoly::ZPoly(std::vector<Integer> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

ZPoly::ZPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

ZPoly ZPoly::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return ZPoly(std::move(v));
}

ZPoly ZPoly::linear_root(const Integer& z) {
  return ZPoly(std::vector<Integer>{-z, 1});
}

void ZPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer ZPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer ZPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

ZPoly ZPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return ZPoly(std::move(d));
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

ZPoly& ZPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ZPoly(std::move(out));
}

std::pair<ZPoly, ZPoly> ZPoly::divmod_monic(const ZPoly& divisor) const {
  if (!divisor.is_monic()) {
    throw Error(ErrorKind::NonMonicModulus,
                "divisor " + divisor.to_string() + " is not monic");
  }
  const int n = degree();
  const int m = divisor.degree();
  if (n < m) return {ZPoly{}, *this};
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> quot(n - m + 1);
  for (int k = n - m; k >= 0; --k) {
    const Integer q = rem[k + m];
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= m; ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(m);
  return {ZPoly(std::move(quot)), ZPoly(std::move(rem))};
}

ZPoly ZPoly::divide_exact(const Integer& d) const {
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t())) {
      throw Error(ErrorKind::InvalidPolynomial,
                  "inexact coefficient division by " + d.get_str());
    }
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
  }
  return ZPoly(std::move(out));
}

Valuation ZPoly::content_valuation(std::uint64_t p) const {
  Valuation best = Valuation::infinity();
  for (const auto& c : coeffs_) {
    Valuation v = valuation(p, c);
    if (v < best) best = v;
    if (best == 0) break;
  }
  return best;
}

ZPoly ZPoly::taylor_shift(const Integer& s) const {
  // Horner-style synthetic shifting.
  std::vector<Integer> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += s * c[j];
  }
  return ZPoly(std::move(c));
}

std::string ZPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

ZPoly pow(const ZPoly& base, unsigned exponent) {
  ZPoly result{1};
  ZPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

ZPoly parse_zpoly(const std::string& text, char var) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "cannot parse '" + text + "': " + why);
  };
  if (s.empty()) fail("empty input");
  std::vector<Integer> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    Integer c = 1;
    bool has_number = i > start;
    if (has_number) c = Integer(s.substr(start, i - start));
    if (i < s.size() && s[i] == '*') {
      if (!has_number) fail("dangling '*'");
      ++i;
    }
    std::size_t degree = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ds = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (ds == i) fail("missing exponent");
        degree = std::stoul(s.substr(ds, i - ds));
      }
    } else if (!has_number) {
      fail("expected a term");
    }
    if (coeffs.size() <= degree) coeffs.resize(degree + 1);
    coeffs[degree] += sign * c;
  }
  return ZPoly(std::move(coeffs));
}

}  // namespace sextic

namespace sextic {

Integer resultant(const ZPoly& f, const ZPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) return 1;
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size));
  // Rows hold coefficients from the leading one down.
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) a[r][r + j] = f.coefficient(m - j);
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) a[n + r][r + j] = g.coefficient(n - j);
  }
  // Bareiss elimination.
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < size; ++r) {
        if (a[r][k] != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

Integer polynomial_discriminant(const ZPoly& f) {
  if (!f.is_monic()) {
    throw Error(ErrorKind::NonMonicModulus, "discriminant needs a monic polynomial");
  }
  const long n = f.degree();
  Integer r = resultant(f, f.derivative());
  return ((n * (n - 1) / 2) % 2 == 0) ? r : Integer(-r);
}

}  // namespace sextic
