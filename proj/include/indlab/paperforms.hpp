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

#ifndef INDLAB_PAPERFORMS_HPP
#define INDLAB_PAPERFORMS_HPP

// Closed forms and inequalities for T_{m,t,1} (root with m children, each
// with t children, each of those with one leaf child) and for the spider
// S_{t,2} (t paths of length two joined at one end).
//
// Notation: f(k) counts independent sets of size k avoiding the root of
// T_{m,t,1}, h(k) those containing it, so i_k = f(k) + h(k). Removing the
// root leaves m disjoint spiders, and removing its closed neighbourhood
// leaves a perfect matching on mt edges.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "indlab/bigpoly.hpp"

namespace indlab {

/// C(n, k), zero when k < 0 or k > n.
BigInt binom(long n, long k);

/// 2^e.
BigInt pow2(unsigned long e);

/// x * (1 + 2x)^{mt}: sets containing the root.
IntPolynomial h_poly(std::size_t m, std::size_t t);

/// I(S_{t,2})^m: sets avoiding the root.
IntPolynomial f_poly(std::size_t m, std::size_t t);

/// f(mt+2) summed term by term: C(m,2) 2^{mt-2t} plus, for s = 3..m and
/// l = 0..min(s-2, mt-st), C(m,s) C(mt-st,l) C(st,s-2-l) 2^{mt-st-l}.
/// Requires m >= 2.
BigInt f_closed_mt2(std::size_t m, std::size_t t);

/// Lower bound C(m,3) 2^{mt-3t} on f(mt+3). Throws for m < 3.
BigInt f_lower_mt3(std::size_t m, std::size_t t);

/// f(mt+2)^2 < 2^{mt} f(mt+3), evaluated exactly.
bool check_eq2(std::size_t m, std::size_t t);

/// C(t, k-1) + 2^k C(t, k): size-k independent sets of S_{t,2}.
BigInt spider_coeff(std::size_t t, std::size_t k);

/// spider_coeff(t, k) for k = 0..t+1.
std::vector<BigInt> spider_sequence(std::size_t t);

/// C(t,k)^2 - C(t,k-1) C(t,k+1) == C(t,k) C(t+1,k) / (k+1), with the
/// division checked to be exact.
bool binom_identity_check(std::size_t t, std::size_t k);

/// Log-concavity of the spider sequence at k, written out in binomials.
bool spider_lc_at(std::size_t t, std::size_t k);

/// 2^k (t+1) / k >= 2 (k-1)(t-k) / (t-k+2) for 1 <= k <= t, compared
/// exactly by cross-multiplication.
bool spider_reduced_at(std::size_t t, std::size_t k);

struct Lemma1Result {
  bool ok = true;
  /// First failure, if any: which check and where.
  std::optional<std::string> failure;
};

/// For every t in 1..t_max: no log-concavity breaks in the spider sequence,
/// and both spider_lc_at and spider_reduced_at hold for all k in 1..t.
Lemma1Result lemma1_lc_check(std::size_t t_max);

/// One (s, l) term of the f(mt+2) expansion and the bound chain applied to it.
struct Eq4AuditRow {
  std::size_t s = 0;
  std::size_t ell = 0;
  BigInt term;
  /// term / (C(m,2) 2^{mt-2t}).
  BigRational ratio;
  /// C(m,s) C(mt-st,l) C(st,s-2-l) / 2^{(s-2)t+l}; equals ratio * C(m,2).
  BigRational scaled;
  /// 5 s log2(m) - st/3, for display only; checks use exact integers.
  double bound_log2 = 0;

  bool binom_m_ok = false;      ///< C(m,s) <= m^s
  bool binom_edges_ok = false;  ///< C(mt-st,l) <= (mt)^s
  bool binom_leaves_ok = false; ///< C(st,s-2-l) <= (st)^s
  bool powers_ok = false;       ///< (mt)^s <= m^{2s} and (st)^s <= m^{2s}; needs t <= m
  bool exponent_ok = false;     ///< (s-2)t + l >= st/3
  bool bound_ok = false;        ///< scaled <= 2^{5 s log2 m - st/3}

  bool steps_ok() const { return binom_m_ok && binom_edges_ok && binom_leaves_ok && exponent_ok; }
};

struct Eq4Audit {
  std::size_t m = 0;
  std::size_t t = 0;
  std::vector<Eq4AuditRow> rows;
  bool all_steps_hold = true;
  bool all_bounds_hold = true;
  bool all_powers_hold = true;
  /// t <= m.
  bool t_le_m = false;
  /// m <= 2^{t/16}, i.e. m^16 <= 2^t.
  bool regime_holds = false;
  /// Every row's bound 2^{5 s log2 m - st/3} is below 1.
  bool bounds_below_one = true;
  BigRational max_ratio;
  BigRational max_scaled;
  std::size_t argmax_s = 0;
  std::size_t argmax_ell = 0;
  /// max_scaled < 2^-5 (and hence max_ratio < 2^-5).
  bool max_below_2_pow_minus5 = false;
};

/// Requires 3 <= m, 2 <= t <= m; throws std::invalid_argument otherwise.
Eq4Audit audit_eq4(std::size_t m, std::size_t t);

}  // namespace indlab

#endif  // INDLAB_PAPERFORMS_HPP
