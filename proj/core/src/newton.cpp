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

#include "sextic/newton.hpp"

#include <numeric>
#include <sstream>

#include "sextic/error.hpp"
#include "sextic/fp_poly.hpp"

namespace sextic {

ZPoly PhiExpansion::reconstruct() const {
  ZPoly acc;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    acc = acc * phi + *it;
  }
  return acc;
}

std::vector<Valuation> PhiExpansion::valuations() const {
  std::vector<Valuation> out;
  out.reserve(digits.size());
  for (const auto& d : digits) out.push_back(d.content_valuation(prime));
  return out;
}

PhiExpansion phi_expand(const ZPoly& f, const ZPoly& phi, std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p));
  if (!phi.is_monic() || phi.degree() < 1) {
    throw Error(ErrorKind::NonMonicModulus, phi.to_string() + " is not monic");
  }
  PhiExpansion e{phi, p, {}};
  ZPoly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = rest.divmod_monic(phi);
    e.digits.push_back(std::move(r));
    rest = std::move(q);
  }
  if (e.digits.empty()) e.digits.emplace_back();
  return e;
}

std::int64_t Side::degree() const { return std::gcd(length(), height()); }

std::string Side::slope_string() const {
  std::string s = "-" + std::to_string(slope_h());
  if (slope_e() != 1) s += "/" + std::to_string(slope_e());
  return s;
}

std::vector<LatticePoint> NewtonPolygon::vertices() const {
  std::vector<LatticePoint> out;
  for (const auto& s : sides) {
    if (out.empty()) out.push_back(s.start);
    out.push_back(s.end);
  }
  return out;
}

std::string NewtonPolygon::vertex_string() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& v : vertices()) {
    if (!first) os << ",";
    first = false;
    os << "(" << v.x << "," << v.y << ")";
  }
  os << "]";
  return os.str();
}

namespace {

// Cross product of (b - a) and (c - a).
__int128 cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
         static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

}  // namespace

NewtonPolygon principal_polygon(const std::vector<Valuation>& points) {
  NewtonPolygon n;
  n.source_points = points;
  std::vector<LatticePoint> hull;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_infinite()) continue;
    LatticePoint q{static_cast<std::int64_t>(i),
                   static_cast<std::int64_t>(points[i].value())};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), q) <= 0) {
      hull.pop_back();
    }
    hull.push_back(q);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    if (hull[i + 1].y >= hull[i].y) break;
    n.sides.push_back({hull[i], hull[i + 1]});
  }
  return n;
}

NewtonPolygon principal_polygon(const PhiExpansion& e) {
  if (e.digits.size() < 2) {
    throw Error(ErrorKind::DegenerateInput, "constant polynomial has no polygon");
  }
  return principal_polygon(e.valuations());
}

ResiduePoly residual_polynomial(const PhiExpansion& e, const Side& side) {
  const NewtonPolygon n = principal_polygon(e);
  bool found = false;
  for (const auto& s : n.sides) found = found || s == side;
  if (!found) throw Error(ErrorKind::InvalidSide, "side is not on the polygon");

  const std::uint32_t p = e.prime;
  const FpPoly phibar = FpPoly::from_zpoly(e.phi, p);
  ResidueField field(phibar);
  const std::vector<Valuation> u = e.valuations();
  const std::int64_t d = side.degree();
  const std::int64_t step = side.slope_e();
  const std::int64_t drop = side.slope_h();
  std::vector<FpPoly> coeffs;
  coeffs.reserve(d + 1);
  for (std::int64_t i = 0; i <= d; ++i) {
    const std::size_t j = static_cast<std::size_t>(side.start.x + i * step);
    const std::int64_t y = side.start.y - i * drop;
    if (u[j].is_infinite() || u[j].value() != static_cast<std::uint64_t>(y)) {
      coeffs.push_back(field.zero());
      continue;
    }
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, static_cast<unsigned long>(y));
    coeffs.push_back(field.reduce(FpPoly::from_zpoly(e.digits[j].divide_exact(pw), p)));
  }
  return ResiduePoly(field, std::move(coeffs));
}

std::uint64_t phi_index(const NewtonPolygon& n, unsigned deg_phi) {
  std::uint64_t count = 0;
  for (const auto& s : n.sides) {
    // Columns x in (start.x, end.x], plus start.x for the first side.
    const std::int64_t from = (&s == &n.sides.front()) ? s.start.x : s.start.x + 1;
    for (std::int64_t x = std::max<std::int64_t>(from, 1); x <= s.end.x; ++x) {
      // floor(start.y - (x - start.x) * height / length)
      const std::int64_t num = s.start.y * s.length() - (x - s.start.x) * s.height();
      const std::int64_t y = num / s.length();  // num >= 0
      if (y >= 1) count += static_cast<std::uint64_t>(y);
    }
  }
  return count * deg_phi;
}

bool is_phi_regular(const ZPoly& f, const ZPoly& phi, std::uint32_t p) {
  const FpPoly fbar = FpPoly::from_zpoly(f, p);
  const FpPoly phibar = FpPoly::from_zpoly(phi, p);
  if (phibar.degree() < 1 || !fbar.divisible_by(phibar)) {
    throw Error(ErrorKind::IrrelevantModulus,
                phi.to_string() + " does not divide F mod " + std::to_string(p));
  }
  const PhiExpansion e = phi_expand(f, phi, p);
  const NewtonPolygon n = principal_polygon(e);
  for (const auto& s : n.sides) {
    if (!is_separable(residue_factor(residual_polynomial(e, s)))) return false;
  }
  return true;
}

}  // namespace sextic
