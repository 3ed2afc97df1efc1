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

#ifndef INDLAB_BIGPOLY_HPP
#define INDLAB_BIGPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace indlab {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

#ifndef INDLAB_MUL_THRESHOLD
#define INDLAB_MUL_THRESHOLD 32
#endif

/// Coefficient count below which multiplication falls back to schoolbook.
inline constexpr std::size_t kMulThreshold = INDLAB_MUL_THRESHOLD;

/**
 * Dense univariate polynomial with arbitrary-precision integer coefficients.
 *
 * Index k of coeffs() holds the coefficient of x^k. Values are kept in
 * canonical form: the last stored coefficient is nonzero, and the zero
 * polynomial is stored as the single coefficient 0. Instances are immutable
 * once built, so they can be shared freely between threads.
 */
class IntPolynomial {
 public:
  /// The zero polynomial.
  IntPolynomial();
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  /// c * x^k.
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  std::span<const BigInt> view() const { return coeffs_; }

  /// Degree; the zero polynomial reports 0.
  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  /// Coefficient of x^k, 0 past the degree.
  BigInt coeff(std::size_t k) const;
  const BigInt& leading() const { return coeffs_.back(); }

  /// Decimal rendering of every coefficient, lowest degree first.
  std::vector<std::string> decimal_coeffs() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void canonicalize();

  std::vector<BigInt> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
/// p^e by binary exponentiation; pow(p, 0) == 1.
IntPolynomial pow(const IntPolynomial& p, unsigned e);
BigInt coeff(const IntPolynomial& p, std::size_t k);

/// x * p.
IntPolynomial shift(const IntPolynomial& p, std::size_t k = 1);

/// Product of all factors, combining the two lowest-degree operands first.
/// The empty product is 1.
IntPolynomial product_balanced(std::vector<IntPolynomial> factors);

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  return add(p, q);
}
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  return mul(p, q);
}

std::string to_string(const IntPolynomial& p);

namespace detail {

/// Multiplication with an explicit schoolbook cutoff. The result never
/// depends on the cutoff; tests use this to exercise both code paths.
IntPolynomial mul_with_threshold(const IntPolynomial& p, const IntPolynomial& q,
                                 std::size_t threshold);

IntPolynomial mul_schoolbook(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace detail

}  // namespace indlab

#endif  // INDLAB_BIGPOLY_HPP
