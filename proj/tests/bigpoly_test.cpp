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

#include "indlab/bigpoly.hpp"

#include <random>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "indlab/indpoly.hpp"
#include "indlab/treekit.hpp"

namespace indlab {
namespace {

using testing::brute_force_poly;
using testing::kPath5;
using testing::replicate;

BigInt random_big(std::mt19937_64& rng, int max_bits, bool allow_negative) {
  const int bits = static_cast<int>(rng() % static_cast<unsigned>(max_bits + 1));
  BigInt v = 0;
  for (int done = 0; done < bits; done += 64) v = (v << 64) + BigInt(rng());
  if (bits > 0) v >>= (((bits + 63) / 64) * 64 - bits);
  if (allow_negative && (rng() & 1)) v = -v;
  return v;
}

IntPolynomial random_poly(std::mt19937_64& rng, std::size_t max_degree, int max_bits,
                          bool allow_negative = true) {
  const std::size_t len = 1 + rng() % (max_degree + 1);
  std::vector<BigInt> c;
  for (std::size_t i = 0; i < len; ++i) c.push_back(random_big(rng, max_bits, allow_negative));
  return IntPolynomial(std::move(c));
}

// Positive log-concave sequence: each next term is drawn below a_k^2 / a_{k-1}.
IntPolynomial random_log_concave(std::mt19937_64& rng, std::size_t max_len) {
  const std::size_t len = 1 + rng() % max_len;
  std::vector<BigInt> a{BigInt(1 + rng() % 1000)};
  if (len > 1) a.push_back(BigInt(1 + rng() % 100000));
  while (a.size() < len) {
    const BigInt cap = a.back() * a.back() / a[a.size() - 2];
    if (cap < 1) break;
    BigInt draw = (BigInt(rng()) << 64) + BigInt(rng());
    a.push_back(1 + draw % cap);
  }
  return IntPolynomial(std::move(a));
}

bool is_log_concave(const IntPolynomial& p) {
  const auto& c = p.coeffs();
  for (std::size_t k = 1; k + 1 < c.size(); ++k) {
    if (c[k] * c[k] < c[k - 1] * c[k + 1]) return false;
  }
  return true;
}

TEST(IntPolynomial, CanonicalForm) {
  EXPECT_EQ(IntPolynomial{}.coeffs().size(), 1u);
  EXPECT_TRUE((IntPolynomial{0, 0, 0}).is_zero());
  EXPECT_EQ((IntPolynomial{1, 2, 0, 0}).degree(), 1u);
  EXPECT_EQ(IntPolynomial(std::vector<BigInt>{}), IntPolynomial{});
  EXPECT_EQ(add(IntPolynomial{1, 1}, IntPolynomial{-1, -1}), IntPolynomial{});
}

TEST(IntPolynomial, Add) {
  EXPECT_EQ(add(IntPolynomial{1, 1}, IntPolynomial{1, 1}), (IntPolynomial{2, 2}));
  const IntPolynomial p{3, 0, 7};
  EXPECT_EQ(add(p, IntPolynomial{}), p);
  EXPECT_EQ(add(IntPolynomial{0, 1}, IntPolynomial{0, 0, 24}), (IntPolynomial{0, 1, 24}));
}

TEST(IntPolynomial, Mul) {
  EXPECT_EQ(mul(IntPolynomial{1, 1}, IntPolynomial{1, 1}), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(mul(IntPolynomial{1, 2}, IntPolynomial{1, 2}), (IntPolynomial{1, 4, 4}));
  EXPECT_TRUE(mul(IntPolynomial{1, 2}, IntPolynomial{}).is_zero());
}

TEST(IntPolynomial, SquareOfPathFiveMatchesTwoDisjointCopies) {
  const IntPolynomial p{1, 5, 6, 1};
  const IntPolynomial expected = brute_force_poly(10, replicate(5, kPath5, 2));
  EXPECT_EQ(mul(p, p), expected);
  EXPECT_EQ(expected, (IntPolynomial{1, 10, 37, 62, 46, 12, 1}));
}

TEST(IntPolynomial, Pow) {
  EXPECT_EQ(pow(IntPolynomial{5, -3, 8}, 0), IntPolynomial{1});
  EXPECT_EQ(pow(IntPolynomial{}, 0), IntPolynomial{1});
  EXPECT_EQ(pow(IntPolynomial{1, 2}, 4), (IntPolynomial{1, 8, 24, 32, 16}));
}

TEST(IntPolynomial, PowOfSpiderMatchesForestOfCopies) {
  // Four S_{4,2} hung from a fresh centre; deleting that centre leaves the
  // 36-vertex forest, counted by the deletion DP.
  std::vector<Vertex> parent{kNoParent};
  for (int copy = 0; copy < 4; ++copy) {
    const auto centre = static_cast<Vertex>(parent.size());
    parent.push_back(0);
    for (int leg = 0; leg < 4; ++leg) {
      const auto mid = static_cast<Vertex>(parent.size());
      parent.push_back(centre);
      parent.push_back(mid);
    }
  }
  const auto joined = RootedTree::from_parents(parent);
  ASSERT_EQ(joined.size(), 37u);
  const auto forest = root_split(joined, 0).avoiding;
  EXPECT_EQ(pow(indpoly_tree(build_spider(4, 2)), 4), forest);
}

TEST(IntPolynomial, Coeff) {
  EXPECT_EQ(coeff(IntPolynomial{1, 2}, 5), 0);
  EXPECT_EQ(coeff(shift(pow(IntPolynomial{1, 2}, 4)), 5), 16);
  EXPECT_EQ(coeff(pow(IntPolynomial{1, 5, 6, 1}, 2), 6), 1);
}

TEST(IntPolynomial, DecimalStringsAreExact) {
  const BigInt big = BigInt(1) << 200;
  const IntPolynomial p(std::vector<BigInt>{big, 7});
  const auto s = p.decimal_coeffs();
  EXPECT_EQ(s[0], "1606938044258990275541962092341162602522202993782792835301376");
  EXPECT_EQ(s[1], "7");
}

TEST(IntPolynomial, ProductBalancedMatchesSequentialProduct) {
  std::mt19937_64 rng(7);
  std::vector<IntPolynomial> factors;
  IntPolynomial expected{1};
  for (int i = 0; i < 40; ++i) {
    factors.push_back(random_poly(rng, 12, 80));
    expected = mul(expected, factors.back());
  }
  EXPECT_EQ(product_balanced(factors), expected);
  EXPECT_EQ(product_balanced({}), IntPolynomial{1});
}

TEST(IntPolynomialProperty, KaratsubaAgreesWithSchoolbookForAnyThreshold) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng, 200, 128);
    const auto q = random_poly(rng, 200, 128);
    const auto ref = detail::mul_schoolbook(p, q);
    for (std::size_t threshold : {2u, 3u, 5u, 16u, 32u, 1000u}) {
      ASSERT_EQ(detail::mul_with_threshold(p, q, threshold), ref)
          << "trial " << trial << " threshold " << threshold;
    }
  }
}

TEST(IntPolynomialProperty, MulIsCommutativeAndAssociative) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_poly(rng, 64, 128);
    const auto q = random_poly(rng, 64, 128);
    const auto r = random_poly(rng, 64, 128);
    ASSERT_EQ(mul(p, q), mul(q, p));
    ASSERT_EQ(mul(mul(p, q), r), mul(p, mul(q, r)));
  }
}

TEST(IntPolynomialProperty, DegreeAndLeadingCoefficient) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_poly(rng, 64, 128);
    const auto q = random_poly(rng, 64, 128);
    if (p.is_zero() || q.is_zero()) continue;
    const auto pq = mul(p, q);
    ASSERT_EQ(pq.degree(), p.degree() + q.degree());
    ASSERT_EQ(pq.leading(), p.leading() * q.leading());
  }
}

TEST(IntPolynomialProperty, PowIsRepeatedMul) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_poly(rng, 12, 64);
    IntPolynomial acc{1};
    for (unsigned e = 0; e <= 16; ++e) {
      ASSERT_EQ(pow(p, e), acc) << "e=" << e;
      acc = mul(acc, p);
    }
  }
}

TEST(IntPolynomialProperty, ProductOfLogConcaveIsLogConcave) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_log_concave(rng, 40);
    const auto q = random_log_concave(rng, 40);
    ASSERT_TRUE(is_log_concave(p) && is_log_concave(q));
    ASSERT_TRUE(is_log_concave(mul(p, q))) << to_string(p) << " * " << to_string(q);
  }
}

}  // namespace
}  // namespace indlab
