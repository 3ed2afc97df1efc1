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

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "indlab/claims.hpp"
#include "indlab/indpoly.hpp"
#include "indlab/seqlab.hpp"

namespace indlab {
namespace {

using testing::brute_force_poly;

TEST(Binom, Conventions) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(4, -1), 0);
  EXPECT_EQ(binom(4, 5), 0);
  EXPECT_EQ(binom(-1, 0), 0);
  EXPECT_EQ(binom(100, 50), BigInt("100891344545564193334812497256"));
  EXPECT_EQ(pow2(0), 1);
  EXPECT_EQ(pow2(70), BigInt(1) << 70);
}

TEST(HPoly, Examples) {
  EXPECT_EQ(h_poly(1, 1), (IntPolynomial{0, 1, 2}));
  EXPECT_EQ(coeff(h_poly(2, 2), 5), 16);
  EXPECT_THROW(h_poly(0, 3), std::invalid_argument);
}

TEST(HPoly, MatchesRootSplit) {
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t t = 1; t <= 6; ++t) {
      const auto split = root_split(build_tmt1(m, t), 0);
      ASSERT_EQ(h_poly(m, t), split.containing);
      ASSERT_EQ(f_poly(m, t), split.avoiding);
    }
  }
}

TEST(FPoly, Examples) {
  EXPECT_EQ(f_poly(1, 2), (IntPolynomial{1, 5, 6, 1}));
  EXPECT_EQ(coeff(f_poly(2, 2), 6), 1);
}

TEST(FPoly, MatchesBruteForceOnDisjointSpiders) {
  for (std::size_t t = 1; t <= 3; ++t) {
    for (std::size_t m = 1; m * (2 * t + 1) <= 21; ++m) {
      const int size = static_cast<int>(2 * t + 1);
      const auto edges = testing::replicate(size, testing::spider_edges(static_cast<int>(t)),
                                            static_cast<int>(m));
      ASSERT_EQ(f_poly(m, t), brute_force_poly(size * static_cast<int>(m), edges))
          << "m=" << m << " t=" << t;
    }
  }
}

TEST(FClosed, Examples) {
  EXPECT_EQ(f_closed_mt2(2, 2), 1);
  EXPECT_EQ(f_closed_mt2(5, 3), coeff(f_poly(5, 3), 17));
  EXPECT_THROW(f_closed_mt2(1, 3), std::invalid_argument);
}

TEST(FClosed, IsExhaustiveOnTheGrid) {
  for (std::size_t m = 2; m <= 10; ++m) {
    for (std::size_t t = 2; t <= 10; ++t) {
      ASSERT_EQ(f_closed_mt2(m, t), coeff(f_poly(m, t), m * t + 2)) << "m=" << m << " t=" << t;
    }
  }
}

TEST(FLower, Examples) {
  EXPECT_EQ(f_lower_mt3(3, 1), 1);
  EXPECT_EQ(f_lower_mt3(4, 4), 64);
  EXPECT_THROW(f_lower_mt3(2, 4), std::invalid_argument);
  for (std::size_t m = 3; m <= 10; ++m) {
    for (std::size_t t = 1; t <= 10; ++t) {
      ASSERT_LE(f_lower_mt3(m, t), coeff(f_poly(m, t), m * t + 3));
    }
  }
}

TEST(Eq2, Examples) {
  EXPECT_FALSE(check_eq2(2, 2));
  for (std::size_t m = 1; m <= 8; ++m) {
    for (std::size_t t = 1; t <= 8; ++t) {
      if (!check_eq2(m, t)) continue;
      const auto breaks = lc_breaks(indpoly_tree(build_tmt1(m, t)).view());
      ASSERT_NE(std::find(breaks.begin(), breaks.end(), m * t + 2), breaks.end());
    }
  }
}

TEST(Spider, Coefficients) {
  EXPECT_EQ(spider_sequence(1), (std::vector<BigInt>{1, 3, 1}));
  EXPECT_EQ(spider_sequence(2), (std::vector<BigInt>{1, 5, 6, 1}));
  EXPECT_EQ(spider_coeff(3, 2), 15);  // C(3,1) + 4 C(3,2)
  EXPECT_EQ(spider_coeff(3, 0), 1);
  EXPECT_EQ(spider_coeff(3, 5), 0);
}

TEST(Spider, MatchesBruteForce) {
  for (int t = 1; t <= 8; ++t) {
    const auto expected = brute_force_poly(2 * t + 1, testing::spider_edges(t));
    EXPECT_EQ(IntPolynomial(spider_sequence(static_cast<std::size_t>(t))), expected) << t;
  }
}

TEST(Spider, BinomialIdentity) {
  EXPECT_TRUE(binom_identity_check(5, 0));
  EXPECT_TRUE(binom_identity_check(10, 4));
  EXPECT_EQ(binom(10, 4) * binom(10, 4) - binom(10, 3) * binom(10, 5), 13860);
  EXPECT_EQ(binom(10, 4) * binom(11, 4) / 5, 13860);
  for (std::size_t t = 0; t <= 60; ++t) {
    for (std::size_t k = 0; k <= t; ++k) ASSERT_TRUE(binom_identity_check(t, k));
  }
}

TEST(Spider, ReducedInequality) {
  EXPECT_TRUE(spider_reduced_at(4, 4));
  EXPECT_TRUE(spider_reduced_at(1, 1));
  EXPECT_THROW(spider_reduced_at(4, 0), std::invalid_argument);
  EXPECT_THROW(spider_reduced_at(4, 5), std::invalid_argument);
  EXPECT_TRUE(spider_lc_at(2, 1));  // 25 >= 6
}

TEST(Spider, Lemma1) {
  EXPECT_TRUE(lemma1_lc_check(1).ok);
  const auto r = lemma1_lc_check(120);
  EXPECT_TRUE(r.ok) << r.failure.value_or("");
}

TEST(Audit, RegimeBoundary) {
  const auto a = audit_eq4(32, 80);
  EXPECT_TRUE(a.all_steps_hold);
  EXPECT_TRUE(a.all_bounds_hold);
  EXPECT_TRUE(a.regime_holds);
  EXPECT_TRUE(a.bounds_below_one);
  EXPECT_TRUE(a.max_below_2_pow_minus5);
  EXPECT_LT(a.max_ratio, BigRational(1, 32));
  EXPECT_FALSE(a.t_le_m);
  // s = m leaves no edge vertices, so only l = 0 remains there.
  std::size_t expected_rows = 1;
  for (std::size_t s = 3; s < 32; ++s) expected_rows += s - 1;
  EXPECT_EQ(a.rows.size(), expected_rows);
  for (const auto& row : a.rows) {
    ASSERT_EQ(row.scaled, row.ratio * BigRational(binom(32, 2)));
    ASSERT_LE(row.bound_log2, -5.0);
  }
}

TEST(Audit, OutsideRegime) {
  const auto a = audit_eq4(16, 16);
  EXPECT_TRUE(a.all_steps_hold);
  EXPECT_TRUE(a.all_powers_hold);
  EXPECT_TRUE(a.t_le_m);
  EXPECT_FALSE(a.regime_holds);
  EXPECT_FALSE(a.bounds_below_one);
}

TEST(Audit, FirstRowIsTheExponentBoundary) {
  for (auto [m, t] : {std::pair{3u, 2u}, std::pair{9u, 7u}, std::pair{32u, 80u}}) {
    const auto a = audit_eq4(m, t);
    const auto& row = a.rows.front();
    EXPECT_EQ(row.s, 3u);
    EXPECT_EQ(row.ell, 0u);
    EXPECT_EQ((row.s - 2) * t + row.ell, row.s * t / 3);
    EXPECT_TRUE(row.exponent_ok);
  }
}

TEST(Audit, TermsSumToTheClosedForm) {
  for (std::size_t m = 3; m <= 8; ++m) {
    for (std::size_t t = 2; t <= 8; ++t) {
      const auto a = audit_eq4(m, t);
      BigInt total = binom(static_cast<long>(m), 2) * pow2(m * t - 2 * t);
      for (const auto& row : a.rows) total += row.term;
      ASSERT_EQ(total, f_closed_mt2(m, t));
    }
  }
}

TEST(Audit, RejectsSmallParameters) {
  EXPECT_THROW(audit_eq4(2, 2), std::invalid_argument);
  EXPECT_THROW(audit_eq4(5, 1), std::invalid_argument);
}

TEST(Claims, VerifySuitePassesOnSmallBounds) {
  const auto results = run_verify_suite(30, 4);
  EXPECT_TRUE(all_passed(results)) << format_checks(results);
  EXPECT_EQ(results.size(), 10u);
}

TEST(Claims, FormatAndJson) {
  const std::vector<CheckResult> rs{{"a", "x=1", true, ""}, {"b", "y=2", false, "why"}};
  EXPECT_EQ(format_checks(rs), "PASS a x=1\nFAIL b y=2  (why)\nsummary: 1 passed, 1 failed\n");
  EXPECT_NE(checks_to_json(rs).find("\"ok\": false"), std::string::npos);
  EXPECT_FALSE(all_passed(rs));
}

TEST(Claims, InvariantViolationDetectsTampering) {
  const auto tree = build_tmt1(3, 3);
  auto p = indpoly_tree(tree);
  EXPECT_FALSE(tree_invariant_violation(tree, p).has_value());
  EXPECT_TRUE(tree_invariant_violation(tree, add(p, IntPolynomial{0, 1})).has_value());
  EXPECT_TRUE(tree_invariant_violation(tree, shift(IntPolynomial{1}, p.degree() + 1)).has_value());
}

}  // namespace
}  // namespace indlab
