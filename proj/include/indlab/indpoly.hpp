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

#ifndef INDLAB_INDPOLY_HPP
#define INDLAB_INDPOLY_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "indlab/bigpoly.hpp"
#include "indlab/treekit.hpp"

namespace indlab {

/// Independent sets split by whether they contain a chosen vertex v.
struct RootSplit {
  IntPolynomial avoiding;    ///< sets without v: I(T - v)
  IntPolynomial containing;  ///< sets with v: x * I(T - N[v])
};

/// Independence polynomial sum_k i_k(T) x^k by the two-state tree DP.
IntPolynomial indpoly_tree(const RootedTree& tree);

/// Independence polynomial of the spherically symmetric tree whose depth-d
/// vertices each have child_counts[d] children. Runs one step per level and
/// never materializes the tree.
IntPolynomial indpoly_sst(std::span<const std::size_t> child_counts);

/// Product of the component polynomials; the empty forest gives 1.
IntPolynomial indpoly_forest(std::span<const RootedTree> trees);

RootSplit root_split(const RootedTree& tree, Vertex v);

/// Largest tree the brute-force oracle accepts.
inline constexpr std::size_t kOracleMaxVertices = 22;

/// Counts independent sets by size over all 2^n vertex subsets. Shares no
/// code with the DP; throws std::invalid_argument when n > 22.
IntPolynomial indpoly_oracle(const RootedTree& tree);

}  // namespace indlab

#endif  // INDLAB_INDPOLY_HPP
