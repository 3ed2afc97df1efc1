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

#include "indlab/paperforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "indlab/indpoly.hpp"
#include "indlab/seqlab.hpp"

namespace indlab {

BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r = 1;
  return r << e;
}

namespace {

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), e);
  return r;
}

long as_long(std::size_t v) { return static_cast<long>(v); }

}  // namespace

IntPolynomial h_poly(std::size_t m, std::size_t t) {
  if (m == 0 || t == 0) throw std::invalid_argument("h_poly: m and t must be positive");
  return shift(pow(IntPolynomial{1, 2}, static_cast<unsigned>(m * t)));
}

IntPolynomial f_poly(std::size_t m, std::size_t t) {
  if (m == 0 || t == 0) throw std::invalid_argument("f_poly: m and t must be positive");
  const std::size_t spider[] = {t, 1};
  return pow(indpoly_sst(spider), static_cast<unsigned>(m));
}

BigInt f_closed_mt2(std::size_t m, std::size_t t) {
  if (m < 2 || t == 0) throw std::invalid_argument("f_closed_mt2: needs m >= 2, t >= 1");
  const long M = as_long(m), T = as_long(t);
  BigInt total = binom(M, 2) * pow2(static_cast<unsigned long>(M * T - 2 * T));
  for (long s = 3; s <= M; ++s) {
    const long edges = M * T - s * T;
    const long isolated = s * T;
    const BigInt choose_w = binom(M, s);
    for (long l = 0; l <= std::min(s - 2, edges); ++l) {
      total += choose_w * binom(edges, l) * binom(isolated, (s - 2) - l) *
               pow2(static_cast<unsigned long>(edges - l));
    }
  }
  return total;
}

BigInt f_lower_mt3(std::size_t m, std::size_t t) {
  if (m < 3) throw std::invalid_argument("f_lower_mt3: needs m >= 3");
  if (t == 0) throw std::invalid_argument("f_lower_mt3: needs t >= 1");
  return binom(as_long(m), 3) * pow2(m * t - 3 * t);
}

bool check_eq2(std::size_t m, std::size_t t) {
  const IntPolynomial f = f_poly(m, t);
  const BigInt a = f.coeff(m * t + 2);
  return a * a < pow2(m * t) * f.coeff(m * t + 3);
}

BigInt spider_coeff(std::size_t t, std::size_t k) {
  const long T = as_long(t), K = as_long(k);
  return binom(T, K - 1) + pow2(k) * binom(T, K);
}

std::vector<BigInt> spider_sequence(std::size_t t) {
  std::vector<BigInt> out;
  out.reserve(t + 2);
  for (std::size_t k = 0; k <= t + 1; ++k) out.push_back(spider_coeff(t, k));
  return out;
}

bool binom_identity_check(std::size_t t, std::size_t k) {
  const long T = as_long(t), K = as_long(k);
  const BigInt lhs = binom(T, K) * binom(T, K) - binom(T, K - 1) * binom(T, K + 1);
  const BigInt num = binom(T, K) * binom(T + 1, K);
  const BigInt den = K + 1;
  if (num % den != 0) return false;
  return lhs == num / den;
}

bool spider_lc_at(std::size_t t, std::size_t k) {
  const long T = as_long(t), K = as_long(k);
  const BigInt mid = binom(T, K - 1) + pow2(k) * binom(T, K);
  const BigInt left = binom(T, K - 2) + pow2(k - 1) * binom(T, K - 1);
  const BigInt right = binom(T, K) + pow2(k + 1) * binom(T, K + 1);
  return mid * mid >= left * right;
}

bool spider_reduced_at(std::size_t t, std::size_t k) {
  if (k < 1 || k > t) throw std::invalid_argument("spider_reduced_at: needs 1 <= k <= t");
  // 2^k (t+1) / k >= 2 (k-1)(t-k) / (t-k+2); both denominators are positive.
  const BigInt lhs = pow2(k) * BigInt(t + 1) * BigInt(t - k + 2);
  const BigInt rhs = BigInt(2) * BigInt(k - 1) * BigInt(t - k) * BigInt(k);
  return lhs >= rhs;
}

Lemma1Result lemma1_lc_check(std::size_t t_max) {
  for (std::size_t t = 1; t <= t_max; ++t) {
    const auto seq = spider_sequence(t);
    if (!lc_breaks(seq).empty()) {
      return {false, "spider sequence breaks log-concavity at t=" + std::to_string(t)};
    }
    for (std::size_t k = 1; k <= t; ++k) {
      if (!spider_lc_at(t, k)) {
        return {false, "binomial log-concavity fails at t=" + std::to_string(t) +
                           " k=" + std::to_string(k)};
      }
      if (!spider_reduced_at(t, k)) {
        return {false, "reduced inequality fails at t=" + std::to_string(t) +
                           " k=" + std::to_string(k)};
      }
    }
  }
  return {true, std::nullopt};
}

Eq4Audit audit_eq4(std::size_t m, std::size_t t) {
  if (m < 3 || t < 2) throw std::invalid_argument("audit_eq4: needs m >= 3 and t >= 2");

  const long M = as_long(m), T = as_long(t);
  const BigInt bm = M, bmt = M * T;
  const BigInt dominant = binom(M, 2) * pow2(m * t - 2 * t);

  Eq4Audit audit;
  audit.m = m;
  audit.t = t;
  audit.t_le_m = t <= m;
  audit.regime_holds = ipow(bm, 16) <= pow2(t);
  bool have_max = false;

  for (long s = 3; s <= M; ++s) {
    const long edges = M * T - s * T;
    const long isolated = s * T;
    const unsigned long us = static_cast<unsigned long>(s);
    const BigInt m_pow_s = ipow(bm, us);
    const BigInt m_pow_2s = ipow(bm, 2 * us);
    const BigInt mt_pow_s = ipow(bmt, us);
    const BigInt st_pow_s = ipow(BigInt(isolated), us);
    const BigInt bound_rhs = ipow(bm, 15 * us);
    for (long l = 0; l <= std::min(s - 2, edges); ++l) {
      Eq4AuditRow row;
      row.s = static_cast<std::size_t>(s);
      row.ell = static_cast<std::size_t>(l);
      const BigInt c_w = binom(M, s);
      const BigInt c_e = binom(edges, l);
      const BigInt c_i = binom(isolated, (s - 2) - l);
      row.term = c_w * c_e * c_i * pow2(static_cast<unsigned long>(edges - l));
      row.ratio = BigRational(row.term, dominant);
      const unsigned long exponent = static_cast<unsigned long>((s - 2) * T + l);
      const BigInt numer = c_w * c_e * c_i;
      row.scaled = BigRational(numer, pow2(exponent));
      row.bound_log2 = 5.0 * static_cast<double>(s) * std::log2(static_cast<double>(m)) -
                       static_cast<double>(s * T) / 3.0;

      row.binom_m_ok = c_w <= m_pow_s;
      row.binom_edges_ok = c_e <= mt_pow_s;
      row.binom_leaves_ok = c_i <= st_pow_s;
      row.powers_ok = mt_pow_s <= m_pow_2s && st_pow_s <= m_pow_2s;
      row.exponent_ok = 3 * ((s - 2) * T + l) >= s * T;
      // scaled <= 2^{(15 s log2 m - st)/3}  <=>  scaled^3 2^{st} <= m^{15 s}
      // <=>  numer^3 2^{st} <= m^{15 s} 2^{3 exponent}.
      row.bound_ok = numer * numer * numer * pow2(static_cast<unsigned long>(s * T)) <=
                     bound_rhs * pow2(3 * exponent);

      audit.all_steps_hold = audit.all_steps_hold && row.steps_ok();
      audit.all_bounds_hold = audit.all_bounds_hold && row.bound_ok;
      audit.all_powers_hold = audit.all_powers_hold && row.powers_ok;
      audit.bounds_below_one =
          audit.bounds_below_one && bound_rhs < pow2(static_cast<unsigned long>(s * T));
      if (!have_max || row.scaled > audit.max_scaled) {
        audit.max_scaled = row.scaled;
        audit.argmax_s = row.s;
        audit.argmax_ell = row.ell;
      }
      if (!have_max || row.ratio > audit.max_ratio) audit.max_ratio = row.ratio;
      have_max = true;
      audit.rows.push_back(std::move(row));
    }
  }
  audit.max_below_2_pow_minus5 = audit.max_scaled < BigRational(1, 32);
  return audit;
}

}  // namespace indlab
