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

// Test-only reference counts. Deliberately naive: every subset is checked
// against every edge, and the graph can be any forest given as an edge list.

#ifndef INDLAB_TESTS_BRUTE_FORCE_HPP
#define INDLAB_TESTS_BRUTE_FORCE_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "indlab/bigpoly.hpp"

namespace indlab::testing {

using EdgePairs = std::vector<std::pair<int, int>>;

inline std::vector<std::uint64_t> brute_force_counts(int n, const EdgePairs& edges) {
  if (n > 24) throw std::invalid_argument("brute force limited to 24 vertices");
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (((s >> u) & 1) && ((s >> v) & 1)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    int size = 0;
    for (int i = 0; i < n; ++i) size += static_cast<int>((s >> i) & 1);
    ++counts[size];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

inline IntPolynomial brute_force_poly(int n, const EdgePairs& edges) {
  const auto counts = brute_force_counts(n, edges);
  return IntPolynomial(std::vector<BigInt>(counts.begin(), counts.end()));
}

/// Disjoint union of `copies` graphs with the same edge list on n vertices.
inline EdgePairs replicate(int n, const EdgePairs& edges, int copies) {
  EdgePairs out;
  for (int c = 0; c < copies; ++c) {
    for (const auto& [u, v] : edges) out.emplace_back(u + c * n, v + c * n);
  }
  return out;
}

/// Path on 5 vertices, which is also the spider S_{2,2}.
inline const EdgePairs kPath5 = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};

/// Spider with t legs of length two, centre 0, leg j is 0 - (2j+1) - (2j+2).
inline EdgePairs spider_edges(int t) {
  EdgePairs e;
  for (int j = 0; j < t; ++j) {
    e.emplace_back(0, 2 * j + 1);
    e.emplace_back(2 * j + 1, 2 * j + 2);
  }
  return e;
}

}  // namespace indlab::testing

#endif  // INDLAB_TESTS_BRUTE_FORCE_HPP
