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

#include <algorithm>
#include <queue>
#include <sstream>
#include <utility>

namespace indlab {

IntPolynomial::IntPolynomial() : coeffs_{BigInt(0)} {}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  canonicalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
  return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::canonicalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

BigInt IntPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

std::vector<std::string> IntPolynomial::decimal_coeffs() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<BigInt> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return IntPolynomial(std::move(r));
}

namespace {

using Span = std::span<const BigInt>;
using OutSpan = std::span<BigInt>;

void schoolbook_into(Span a, Span b, OutSpan out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
}

// out[0 .. |a|+|b|-1) += a * b.
void mul_into(Span a, Span b, OutSpan out, std::size_t threshold) {
  if (a.empty() || b.empty()) return;
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t nb = b.size();
  if (nb < threshold || nb < 2) {
    schoolbook_into(a, b, out);
    return;
  }
  const std::size_t h = (a.size() + 1) / 2;
  if (nb <= h) {
    // Unbalanced: multiply b against slices of a no longer than b.
    for (std::size_t off = 0; off < a.size(); off += nb) {
      const std::size_t len = std::min(nb, a.size() - off);
      mul_into(a.subspan(off, len), b, out.subspan(off), threshold);
    }
    return;
  }

  const Span a0 = a.first(h), a1 = a.subspan(h);
  const Span b0 = b.first(h), b1 = b.subspan(h);

  std::vector<BigInt> z0(2 * h - 1);
  std::vector<BigInt> z2(a1.size() + b1.size() - 1);
  mul_into(a0, b0, z0, threshold);
  mul_into(a1, b1, z2, threshold);

  std::vector<BigInt> sa(a0.begin(), a0.end());
  std::vector<BigInt> sb(b0.begin(), b0.end());
  for (std::size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
  for (std::size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];
  std::vector<BigInt> z1(2 * h - 1);
  mul_into(sa, sb, z1, threshold);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[h + i] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] += z2[i];
}

}  // namespace

namespace detail {

IntPolynomial mul_with_threshold(const IntPolynomial& p, const IntPolynomial& q,
                                 std::size_t threshold) {
  if (p.is_zero() || q.is_zero()) return IntPolynomial();
  std::vector<BigInt> r(p.coeffs().size() + q.coeffs().size() - 1);
  mul_into(p.view(), q.view(), r, threshold);
  return IntPolynomial(std::move(r));
}

IntPolynomial mul_schoolbook(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return IntPolynomial();
  std::vector<BigInt> r(p.coeffs().size() + q.coeffs().size() - 1);
  schoolbook_into(p.view(), q.view(), r);
  return IntPolynomial(std::move(r));
}

}  // namespace detail

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) {
  return detail::mul_with_threshold(p, q, kMulThreshold);
}

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
  IntPolynomial result{1};
  IntPolynomial base = p;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

BigInt coeff(const IntPolynomial& p, std::size_t k) { return p.coeff(k); }

IntPolynomial shift(const IntPolynomial& p, std::size_t k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<BigInt> r(k);
  r.insert(r.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPolynomial(std::move(r));
}

IntPolynomial product_balanced(std::vector<IntPolynomial> factors) {
  if (factors.empty()) return IntPolynomial{1};
  // Min-heap on degree; ties broken by insertion order so the schedule is
  // reproducible.
  using Entry = std::pair<std::pair<std::size_t, std::size_t>, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::size_t serial = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    heap.push({{factors[i].degree(), serial++}, i});
  }
  while (heap.size() > 1) {
    const std::size_t i = heap.top().second;
    heap.pop();
    const std::size_t j = heap.top().second;
    heap.pop();
    factors[i] = mul(factors[i], factors[j]);
    factors[j] = IntPolynomial();
    heap.push({{factors[i].degree(), serial++}, i});
  }
  return std::move(factors[heap.top().second]);
}

std::string to_string(const IntPolynomial& p) {
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0 && !(p.is_zero() && k == 0)) continue;
    if (!first) os << " + ";
    first = false;
    os << c[k];
    if (k == 1) os << "x";
    if (k > 1) os << "x^" << k;
  }
  return os.str();
}

}  // namespace indlab
