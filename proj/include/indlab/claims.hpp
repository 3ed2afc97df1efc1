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

#ifndef INDLAB_CLAIMS_HPP
#define INDLAB_CLAIMS_HPP

// Named, parameterized checks behind the `reproduce` and `verify` commands.
// Each check is a pure function of its parameters and yields one line of
// output, so suite output is byte-stable across runs.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "indlab/bigpoly.hpp"
#include "indlab/treekit.hpp"

namespace indlab {

struct CheckResult {
  std::string name;
  std::string params;
  bool passed = false;
  /// Expected-vs-actual or offending parameters; may be empty on success.
  std::string detail;
};

/// "PASS name params" or "FAIL name params", with "  (detail)" appended when
/// a detail is present.
std::string format_check(const CheckResult& r);

/// One line per check followed by a "summary: P passed, F failed" line.
std::string format_checks(const std::vector<CheckResult>& results);

/// {"checks": [...], "passed": P, "failed": F, "ok": bool}, two-space indent.
std::string checks_to_json(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

/// Sequence-level facts every tree must satisfy: i_0 = 1, i_1 = n,
/// degree = independence number, coefficients positive, and the decreasing
/// tail from ceil((2 alpha - 1)/3). Returns a description of the first
/// violation.
std::optional<std::string> tree_invariant_violation(const RootedTree& tree,
                                                    const IntPolynomial& poly);

// --- individual checks -----------------------------------------------------

/// Breaks of T_{t,t,1}: [t^2 + 2] for t >= 4, none for t <= 3.
CheckResult check_ttt_breaks(std::size_t t);

/// Every break of T_{m,t,1} lies at mt + 2, over the given grid.
CheckResult check_tmt1_single_break(std::size_t m_lo, std::size_t m_hi, std::size_t t_lo,
                                    std::size_t t_hi);

/// Number of breaks of T(2^m 1^n) via the spherically symmetric DP.
CheckResult check_binary_path_breaks(std::size_t m, std::size_t n, std::size_t expected);

/// Spider closed form against the tree DP for every t <= t_max.
CheckResult check_spider_engine(std::size_t t_max);
CheckResult check_spider_log_concave(std::size_t t_max);
CheckResult check_binom_identity(std::size_t t_max);

/// I(T_{m,t,1}) = f + h with both parts matching the root split of the DP.
CheckResult check_root_decomposition(std::size_t grid_max);
/// h(mt+1) = 2^{mt} and h(k) = 0 beyond mt+1.
CheckResult check_h_support(std::size_t grid_max);
/// Term enumeration of f(mt+2) against the engine, 2 <= m, t <= grid_max.
CheckResult check_f_closed(std::size_t grid_max);
/// f(mt+3) >= C(m,3) 2^{mt-3t}, 3 <= m <= grid_max, 1 <= t <= grid_max.
CheckResult check_f_lower(std::size_t grid_max, std::size_t t_lo = 1);
/// check_eq2 true implies a break at mt+2, 1 <= m, t <= grid_max.
CheckResult check_ratio_implies_break(std::size_t grid_max);

/// Bound chain audit; `require_regime` additionally demands max ratio < 2^-5.
CheckResult check_bound_chain_audit(std::size_t m, std::size_t t, bool require_regime);

// --- suites -------------------------------------------------------------------

/// The computational claims about T_{t,t,1}, T_{m,t,1} and T(2^m 1^n).
std::vector<CheckResult> run_reproduce_suite();

/// Every closed form and inequality check at the given bounds.
std::vector<CheckResult> run_verify_suite(std::size_t t_max, std::size_t grid_max);

}  // namespace indlab

#endif  // INDLAB_CLAIMS_HPP
