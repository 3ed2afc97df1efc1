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

#include "indlab/indpoly.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace indlab {

namespace {

// Bottom-up DP with an optional set of deleted vertices. For a kept vertex
//   in(v)  = x * prod_c out(c)
//   out(v) = prod_c (in(c) + out(c))
// and for a deleted vertex in(v) = 0, out(v) = prod_c (in(c) + out(c)), which
// lets the components hanging below a deleted vertex pass through unchanged.
IntPolynomial dp_with_deletions(const RootedTree& tree, const std::vector<bool>& deleted) {
  const std::size_t n = tree.size();
  std::vector<IntPolynomial> in(n), out(n);
  const auto& order = tree.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const auto kids = tree.children(v);
    std::vector<IntPolynomial> totals;
    totals.reserve(kids.size());
    for (Vertex c : kids) totals.push_back(add(in[c], out[c]));
    if (deleted.empty() || !deleted[v]) {
      std::vector<IntPolynomial> outs;
      outs.reserve(kids.size());
      for (Vertex c : kids) outs.push_back(out[c]);
      in[v] = shift(product_balanced(std::move(outs)));
    }
    out[v] = product_balanced(std::move(totals));
    for (Vertex c : kids) {
      in[c] = IntPolynomial();
      out[c] = IntPolynomial();
    }
  }
  return add(in[tree.root()], out[tree.root()]);
}

}  // namespace

IntPolynomial indpoly_tree(const RootedTree& tree) { return dp_with_deletions(tree, {}); }

IntPolynomial indpoly_sst(std::span<const std::size_t> child_counts) {
  // Deepest level: a lone vertex.
  IntPolynomial in{0, 1};
  IntPolynomial out{1};
  for (auto it = child_counts.rbegin(); it != child_counts.rend(); ++it) {
    if (*it == 0) throw std::invalid_argument("SST child counts must be positive");
    const auto c = static_cast<unsigned>(*it);
    IntPolynomial next_in = shift(pow(out, c));
    out = pow(add(in, out), c);
    in = std::move(next_in);
  }
  return add(in, out);
}

IntPolynomial indpoly_forest(std::span<const RootedTree> trees) {
  std::vector<IntPolynomial> parts;
  parts.reserve(trees.size());
  for (const auto& t : trees) parts.push_back(indpoly_tree(t));
  return product_balanced(std::move(parts));
}

RootSplit root_split(const RootedTree& tree, Vertex v) {
  if (v >= tree.size()) throw std::invalid_argument("root_split: vertex out of range");
  std::vector<bool> del(tree.size(), false);
  del[v] = true;
  IntPolynomial avoiding = dp_with_deletions(tree, del);
  if (v != tree.root()) del[tree.parent(v)] = true;
  for (Vertex c : tree.children(v)) del[c] = true;
  IntPolynomial containing = shift(dp_with_deletions(tree, del));
  return {std::move(avoiding), std::move(containing)};
}

IntPolynomial indpoly_oracle(const RootedTree& tree) {
  const std::size_t n = tree.size();
  if (n > kOracleMaxVertices) {
    throw std::invalid_argument("oracle budget is " + std::to_string(kOracleMaxVertices) +
                                " vertices, tree has " + std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (v == tree.root()) continue;
    const Vertex p = tree.parent(v);
    adj[v] |= std::uint32_t{1} << p;
    adj[p] |= std::uint32_t{1} << v;
  }
  // independent[S] = independent[S - low(S)] && low(S) has no neighbour in S.
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<std::uint8_t> independent(total, 0);
  std::vector<std::uint64_t> counts(n + 1, 0);
  independent[0] = 1;
  counts[0] = 1;
  for (std::uint32_t s = 1; s < total; ++s) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(s));
    const std::uint32_t rest = s & (s - 1);
    if (independent[rest] && (adj[low] & s) == 0) {
      independent[s] = 1;
      ++counts[static_cast<std::size_t>(std::popcount(s))];
    }
  }
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return IntPolynomial(std::move(coeffs));
}

}  // namespace indlab
