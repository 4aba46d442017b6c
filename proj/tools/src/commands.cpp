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

#include "sextic_cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <vector>

#include "sextic/classifier.hpp"
#include "sextic/fp_poly.hpp"
#include "sextic/newton.hpp"
#include "sextic/oracle.hpp"
#include "sextic/trinomial.hpp"
#include "sextic/valuation.hpp"
#include "sextic_cli/report_json.hpp"

namespace sextic::cli {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FragmentMiss:
    case ErrorKind::OutsidePaperScope:
    case ErrorKind::IndeterminateCondition:
    case ErrorKind::NonTerminating:
    case ErrorKind::Undetermined:
    case ErrorKind::TooLarge:
      return 3;
    case ErrorKind::PaperContradiction:
      return 4;
    default:
      return 2;
  }
}

namespace {

Integer parse_integer(const std::string& s) {
  Integer v;
  const std::string body = !s.empty() && s[0] == '+' ? s.substr(1) : s;
  if (body.empty() || v.set_str(body, 10) != 0) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + s + "'");
  }
  return v;
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return exit_code(e.kind());
}

const std::vector<unsigned> kIndexValues = {1, 2, 3, 4, 6, 12};

struct ScanItem {
  std::string rows;
  std::vector<std::uint64_t> per_index = std::vector<std::uint64_t>(kIndexValues.size(), 0);
  std::uint64_t count = 0;
  std::uint64_t errors = 0;
  std::uint64_t disagreements = 0;
};

std::string join_rules(const std::vector<RuleMatch>& rules) {
  std::string s;
  for (const auto& r : rules) {
    if (!s.empty()) s += ';';
    s += r.label();
  }
  return s;
}

void scan_column(std::int64_t a, const ScanOptions& opts, ScanItem& item) {
  std::ostringstream os;
  for (std::int64_t b = opts.b_min; b <= opts.b_max; ++b) {
    if (b == 0) continue;
    const Trinomial t{Integer(static_cast<long>(a)), Integer(static_cast<long>(b))};
    if (!t.is_reduced() || !is_irreducible(t)) continue;
    ++item.count;
    os << a << ',' << b << ',';
    try {
      const IndexReport r = index_of_field(t);
      std::string status = "unverified";
      if (opts.verify) {
        const bool ok = oracle::all_agree(oracle::verify_report(r));
        status = ok ? "agree" : "disagree";
        if (!ok) ++item.disagreements;
      }
      os << r.nu2 << ',' << r.nu3 << ',' << r.nu5 << ',' << r.index << ','
         << join_rules(r.matched_rules) << ',' << (r.maximal_order_is_Zalpha ? "true" : "false")
         << ',' << status << '\n';
      const auto at = std::find(kIndexValues.begin(), kIndexValues.end(), r.index);
      if (at != kIndexValues.end()) ++item.per_index[at - kIndexValues.begin()];
    } catch (const Error& e) {
      ++item.errors;
      os << "-,-,-,-,-,-,error:" << to_string(e.kind()) << '\n';
    }
  }
  item.rows = os.str();
}

void print_polygon_side(const PhiExpansion& ex, const Side& s, std::ostream& out) {
  out << "side (" << s.start.x << ',' << s.start.y << ")-(" << s.end.x << ',' << s.end.y
      << "): slope " << s.slope_string() << ", degree " << s.degree() << "\n";
  const ResiduePoly r = residual_polynomial(ex, s);
  out << "  R(y) = " << r.to_string() << "\n";
  const auto factors = residue_factor(r);
  for (const auto& f : factors) {
    out << "  factor " << f.factor.to_string() << " multiplicity " << f.multiplicity << "\n";
  }
  out << "  separable: " << (is_separable(factors) ? "yes" : "no") << "\n";
}

struct Example {
  long a;
  long b;
  unsigned index;
};

const std::vector<Example> kExamples = {
    {288, 154, 1}, {18, 33, 2}, {-42, -1258, 3}, {144, 399, 4}, {54, 377, 6}, {360, 35, 12},
};

}  // namespace

int cmd_classify(const std::string& a, const std::string& b, const ClassifyOptions& opts,
                 std::ostream& out, std::ostream& err) {
  try {
    const Trinomial t(parse_integer(a), parse_integer(b));
    const IndexReport r = index_of_field(t);
    Json doc = to_json(r, opts.explain);
    bool ok = true;
    if (opts.verify) {
      const auto verdicts = oracle::verify_report(r);
      ok = oracle::all_agree(verdicts);
      Json list = Json::array();
      for (const auto& v : verdicts) list.push_back(to_json(v));
      doc["verify"] = {{"all_agree", ok}, {"verdicts", std::move(list)}};
    }
    out << doc.dump(2) << "\n";
    return ok ? 0 : 1;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int run_scan(const ScanOptions& opts, std::ostream& out) {
  std::vector<std::int64_t> columns;
  for (std::int64_t a = opts.a_min; a <= opts.a_max; ++a) columns.push_back(a);
  std::vector<ScanItem> items(columns.size());

  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, columns.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < columns.size(); i = next++) scan_column(columns[i], opts, items[i]);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  out << kScanHeader << '\n';
  ScanItem total;
  for (const auto& it : items) {
    out << it.rows;
    total.count += it.count;
    total.errors += it.errors;
    total.disagreements += it.disagreements;
    for (std::size_t k = 0; k < kIndexValues.size(); ++k) total.per_index[k] += it.per_index[k];
  }
  out << "# rows " << total.count << '\n';
  for (std::size_t k = 0; k < kIndexValues.size(); ++k) {
    out << "# index " << kIndexValues[k] << ' ' << total.per_index[k] << '\n';
  }
  out << "# errors " << total.errors << '\n';
  if (opts.verify) out << "# disagreements " << total.disagreements << '\n';
  if (total.disagreements) return 1;
  return total.errors ? 3 : 0;
}

int cmd_polygon(const std::string& a, const std::string& b, std::uint32_t p,
                const std::string& phi_text, std::ostream& out, std::ostream& err) {
  try {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
    const Trinomial t(parse_integer(a), parse_integer(b));
    const ZPoly f = t.polynomial();
    const ZPoly phi = parse_zpoly(phi_text);
    if (phi.degree() < 1 || phi.leading() != 1) {
      throw Error(ErrorKind::NonMonicModulus, "phi must be monic of positive degree");
    }
    if (!FpPoly::from_zpoly(f, p).divisible_by(FpPoly::from_zpoly(phi, p))) {
      throw Error(ErrorKind::IrrelevantModulus,
                  phi.to_string() + " does not divide F mod " + std::to_string(p));
    }
    const PhiExpansion ex = phi_expand(f, phi, p);
    const auto vals = ex.valuations();
    std::ostringstream os;
    os << "F = " << f.to_string() << "\n";
    os << "p = " << p << ", phi = " << phi.to_string() << "\n";
    for (std::size_t i = 0; i < ex.digits.size(); ++i) {
      os << "a_" << i << " = " << ex.digits[i].to_string() << "  (v = " << vals[i].to_string()
         << ")\n";
    }
    const NewtonPolygon n = principal_polygon(ex);
    os << "vertices: " << n.vertex_string() << "\n";
    for (const auto& s : n.sides) print_polygon_side(ex, s, os);
    os << "ind_phi = " << phi_index(n, static_cast<unsigned>(phi.degree())) << "\n";
    os << "phi-regular: " << (is_phi_regular(f, phi, p) ? "yes" : "no") << "\n";
    out << os.str();
    return 0;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_examples(bool verify, const std::map<int, unsigned>& expect_override, std::ostream& out,
                 std::ostream& err) {
  int passed = 0;
  int agreed = 0;
  out << "example a b expected got" << (verify ? " oracle" : "") << " status\n";
  for (std::size_t i = 0; i < kExamples.size(); ++i) {
    const Example& ex = kExamples[i];
    const int number = static_cast<int>(i) + 1;
    const auto over = expect_override.find(number);
    const unsigned expected = over != expect_override.end() ? over->second : ex.index;
    std::string got = "error";
    std::string oracle_status;
    bool pass = false;
    try {
      const IndexReport r = index_of_field(Trinomial(Integer(ex.a), Integer(ex.b)));
      got = std::to_string(r.index);
      pass = r.index == expected;
      if (verify) {
        const bool ok = oracle::all_agree(oracle::verify_report(r));
        oracle_status = ok ? " agree" : " disagree";
        agreed += ok;
        pass = pass && ok;
      }
    } catch (const Error& e) {
      err << "example " << number << ": " << e.what() << "\n";
    }
    passed += pass;
    out << number << ' ' << ex.a << ' ' << ex.b << ' ' << expected << ' ' << got << oracle_status
        << ' ' << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) {
      err << "example " << number << ": expected index " << expected << ", got " << got << "\n";
    }
  }
  out << passed << "/" << kExamples.size() << " pass";
  if (verify) out << ", " << agreed << "/" << kExamples.size() << " oracle agreement";
  out << "\n";
  return passed == static_cast<int>(kExamples.size()) ? 0 : 1;
}

}  // namespace sextic::cli
