// Copyright 2026 The indlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "indlab/claims.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "indlab/indpoly.hpp"
#include "indlab/paperforms.hpp"
#include "indlab/seqlab.hpp"

namespace indlab {

namespace {

std::string list_str(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string mt_str(std::size_t m, std::size_t t) {
  return "m=" + std::to_string(m) + " t=" + std::to_string(t);
}

CheckResult pass(std::string name, std::string params, std::string detail = {}) {
  return {std::move(name), std::move(params), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string params, std::string detail) {
  return {std::move(name), std::move(params), false, std::move(detail)};
}

}  // namespace

std::string format_check(const CheckResult& r) {
  std::string line = (r.passed ? "PASS " : "FAIL ") + r.name + " " + r.params;
  if (!r.detail.empty()) line += "  (" + r.detail + ")";
  return line;
}

std::string format_checks(const std::vector<CheckResult>& results) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out += format_check(r) + "\n";
    passed += r.passed ? 1 : 0;
  }
  out += "summary: " + std::to_string(passed) + " passed, " +
         std::to_string(results.size() - passed) + " failed\n";
  return out;
}

std::string checks_to_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    nlohmann::ordered_json c;
    c["name"] = r.name;
    c["params"] = r.params;
    c["passed"] = r.passed;
    c["detail"] = r.detail;
    j["checks"].push_back(std::move(c));
    passed += r.passed ? 1 : 0;
  }
  j["passed"] = passed;
  j["failed"] = results.size() - passed;
  j["ok"] = passed == results.size();
  return j.dump(2);
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::optional<std::string> tree_invariant_violation(const RootedTree& tree,
                                                    const IntPolynomial& poly) {
  const auto& c = poly.coeffs();
  if (c[0] != 1) return "i_0 = " + c[0].str();
  const std::size_t n = tree.size();
  if (poly.coeff(1) != n) return "i_1 = " + poly.coeff(1).str() + " but n = " + std::to_string(n);
  const std::size_t alpha = independence_number(tree);
  if (poly.degree() != alpha) {
    return "degree " + std::to_string(poly.degree()) + " but alpha = " + std::to_string(alpha);
  }
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] <= 0) return "coefficient " + std::to_string(k) + " not positive";
  }
  if (!tail_monotone_check(poly.view(), alpha)) {
    return "tail not decreasing from " + std::to_string(tail_start(alpha));
  }
  return std::nullopt;
}

// --- reproduce ------------------------------------------------------------------

CheckResult check_ttt_breaks(std::size_t t) {
  const std::string name = "ttt1_breaks";
  const std::string params = "t=" + std::to_string(t);
  const auto breaks = lc_breaks(indpoly_tree(build_tmt1(t, t)).view());
  const std::vector<std::size_t> expected =
      t >= 4 ? std::vector<std::size_t>{t * t + 2} : std::vector<std::size_t>{};
  const std::string detail = "expected " + list_str(expected) + " actual " + list_str(breaks);
  return breaks == expected ? pass(name, params, "breaks " + list_str(breaks))
                            : fail(name, params, detail);
}

CheckResult check_tmt1_single_break(std::size_t m_lo, std::size_t m_hi, std::size_t t_lo,
                                    std::size_t t_hi) {
  const std::string name = "tmt1_single_break";
  const std::string params = "m=" + std::to_string(m_lo) + ".." + std::to_string(m_hi) +
                             " t=" + std::to_string(t_lo) + ".." + std::to_string(t_hi);
  std::size_t broken = 0;
  for (std::size_t t = t_lo; t <= t_hi; ++t) {
    for (std::size_t m = m_lo; m <= m_hi; ++m) {
      const auto breaks = lc_breaks(indpoly_tree(build_tmt1(m, t)).view());
      for (std::size_t k : breaks) {
        if (k != m * t + 2) {
          return fail(name, params,
                      mt_str(m, t) + " breaks " + list_str(breaks) + ", expected subset of [" +
                          std::to_string(m * t + 2) + "]");
        }
      }
      broken += breaks.empty() ? 0 : 1;
    }
  }
  return pass(name, params, std::to_string(broken) + " trees broken at mt+2, rest log-concave");
}

CheckResult check_binary_path_breaks(std::size_t m, std::size_t n, std::size_t expected) {
  const std::string name = "binary_path_breaks";
  const std::string params = "T(2^" + std::to_string(m) + " 1^" + std::to_string(n) + ")";
  const auto counts = binary_then_path_counts(m, n);
  const auto breaks = lc_breaks(indpoly_sst(counts).view());
  const std::string detail = "expected " + std::to_string(expected) + " actual " +
                             std::to_string(breaks.size()) + " at " + list_str(breaks);
  return breaks.size() == expected ? pass(name, params, detail) : fail(name, params, detail);
}

std::vector<CheckResult> run_reproduce_suite() {
  std::vector<CheckResult> out;
  for (std::size_t t = 1; t <= 8; ++t) out.push_back(check_ttt_breaks(t));
  out.push_back(check_tmt1_single_break(2, 12, 2, 8));
  const std::size_t table[][3] = {{4, 9, 2}, {5, 15, 3}, {6, 17, 8}, {7, 23, 16}, {8, 27, 24}};
  for (const auto& row : table) out.push_back(check_binary_path_breaks(row[0], row[1], row[2]));
  return out;
}

// --- verify ---------------------------------------------------------------------

CheckResult check_spider_engine(std::size_t t_max) {
  const std::string name = "spider_closed_form";
  const std::string params = "t=1.." + std::to_string(t_max);
  for (std::size_t t = 1; t <= t_max; ++t) {
    const auto engine = indpoly_tree(build_spider(t, 2));
    if (IntPolynomial(spider_sequence(t)) != engine) {
      return fail(name, params, "mismatch at t=" + std::to_string(t));
    }
  }
  return pass(name, params);
}

CheckResult check_spider_log_concave(std::size_t t_max) {
  const std::string name = "spider_log_concave";
  const std::string params = "t=1.." + std::to_string(t_max);
  const auto r = lemma1_lc_check(t_max);
  return r.ok ? pass(name, params) : fail(name, params, *r.failure);
}

CheckResult check_binom_identity(std::size_t t_max) {
  const std::string name = "binomial_identity";
  const std::string params = "0<=k<=t<=" + std::to_string(t_max);
  for (std::size_t t = 0; t <= t_max; ++t) {
    for (std::size_t k = 0; k <= t; ++k) {
      if (!binom_identity_check(t, k)) {
        return fail(name, params, "fails at t=" + std::to_string(t) + " k=" + std::to_string(k));
      }
    }
  }
  return pass(name, params);
}

CheckResult check_root_decomposition(std::size_t grid_max) {
  const std::string name = "root_decomposition";
  const std::string params = "1<=m,t<=" + std::to_string(grid_max);
  for (std::size_t m = 1; m <= grid_max; ++m) {
    for (std::size_t t = 1; t <= grid_max; ++t) {
      const auto tree = build_tmt1(m, t);
      const auto f = f_poly(m, t);
      const auto h = h_poly(m, t);
      if (add(f, h) != indpoly_tree(tree)) return fail(name, params, "I != f + h at " + mt_str(m, t));
      const auto split = root_split(tree, tree.root());
      if (split.avoiding != f) return fail(name, params, "f != I(T - v) at " + mt_str(m, t));
      if (split.containing != h) return fail(name, params, "h != x I(T - N[v]) at " + mt_str(m, t));
    }
  }
  return pass(name, params);
}

CheckResult check_h_support(std::size_t grid_max) {
  const std::string name = "root_part_support";
  const std::string params = "1<=m,t<=" + std::to_string(grid_max);
  for (std::size_t m = 1; m <= grid_max; ++m) {
    for (std::size_t t = 1; t <= grid_max; ++t) {
      const auto h = h_poly(m, t);
      if (h.degree() != m * t + 1 || h.coeff(m * t + 1) != pow2(m * t)) {
        return fail(name, params, "h(mt+1) != 2^(mt) or h extends past mt+1 at " + mt_str(m, t));
      }
    }
  }
  return pass(name, params);
}

CheckResult check_f_closed(std::size_t grid_max) {
  const std::string name = "f_mt2_term_sum";
  const std::string params = "2<=m,t<=" + std::to_string(grid_max);
  for (std::size_t m = 2; m <= grid_max; ++m) {
    for (std::size_t t = 2; t <= grid_max; ++t) {
      const BigInt engine = f_poly(m, t).coeff(m * t + 2);
      const BigInt closed = f_closed_mt2(m, t);
      if (engine != closed) {
        return fail(name, params, mt_str(m, t) + " closed " + closed.str() + " engine " + engine.str());
      }
    }
  }
  return pass(name, params);
}

CheckResult check_f_lower(std::size_t grid_max, std::size_t t_lo) {
  const std::string name = "f_mt3_lower_bound";
  const std::string params =
      "3<=m<=" + std::to_string(grid_max) + " " + std::to_string(t_lo) + "<=t<=" +
      std::to_string(grid_max);
  for (std::size_t m = 3; m <= grid_max; ++m) {
    for (std::size_t t = t_lo; t <= grid_max; ++t) {
      if (f_poly(m, t).coeff(m * t + 3) < f_lower_mt3(m, t)) {
        return fail(name, params, "bound exceeds f(mt+3) at " + mt_str(m, t));
      }
    }
  }
  return pass(name, params);
}

CheckResult check_ratio_implies_break(std::size_t grid_max) {
  const std::string name = "ratio_implies_break";
  const std::string params = "1<=m,t<=" + std::to_string(grid_max);
  std::vector<std::string> holds;
  for (std::size_t m = 1; m <= grid_max; ++m) {
    for (std::size_t t = 1; t <= grid_max; ++t) {
      if (!check_eq2(m, t)) continue;
      holds.push_back("(" + std::to_string(m) + "," + std::to_string(t) + ")");
      const auto breaks = lc_breaks(indpoly_tree(build_tmt1(m, t)).view());
      if (std::find(breaks.begin(), breaks.end(), m * t + 2) == breaks.end()) {
        return fail(name, params, "inequality holds but no break at mt+2 for " + mt_str(m, t));
      }
    }
  }
  return pass(name, params, std::to_string(holds.size()) + " grid points satisfy the inequality");
}

CheckResult check_bound_chain_audit(std::size_t m, std::size_t t, bool require_regime) {
  const std::string name = "bound_chain_audit";
  const std::string params = mt_str(m, t);
  const auto audit = audit_eq4(m, t);
  std::ostringstream detail;
  detail << audit.rows.size() << " terms, max ratio at s=" << audit.argmax_s
         << " l=" << audit.argmax_ell << ", regime m<=2^(t/16) "
         << (audit.regime_holds ? "holds" : "fails") << ", final bound "
         << (audit.bounds_below_one ? "below 1" : "exceeds 1 somewhere")
         << ", t<=m " << (audit.t_le_m ? "holds" : "fails");
  if (!audit.all_steps_hold) return fail(name, params, "an intermediate bound fails; " + detail.str());
  if (!audit.all_bounds_hold) return fail(name, params, "a final bound fails; " + detail.str());
  if (require_regime && !audit.max_below_2_pow_minus5) {
    return fail(name, params, "max ratio not below 2^-5; " + detail.str());
  }
  return pass(name, params, detail.str());
}

std::vector<CheckResult> run_verify_suite(std::size_t t_max, std::size_t grid_max) {
  std::vector<CheckResult> out;
  out.push_back(check_spider_engine(t_max));
  out.push_back(check_spider_log_concave(t_max));
  out.push_back(check_binom_identity(t_max));
  out.push_back(check_root_decomposition(grid_max));
  out.push_back(check_h_support(grid_max));
  out.push_back(check_f_closed(grid_max));
  out.push_back(check_f_lower(grid_max));
  out.push_back(check_ratio_implies_break(grid_max));
  out.push_back(check_bound_chain_audit(32, 80, true));
  out.push_back(check_bound_chain_audit(16, 16, false));
  return out;
}

}  // namespace indlab
