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

#ifndef INDLAB_TREEKIT_HPP
#define INDLAB_TREEKIT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace indlab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoParent = static_cast<Vertex>(-1);

/**
 * A rooted tree on vertices 0..n-1.
 *
 * Stored as a parent array plus ordered child lists. Construction validates
 * that the input describes one connected acyclic graph, so every instance in
 * circulation is a valid tree.
 */
class RootedTree {
 public:
  /// Builds from a parent array; parent[root] must be kNoParent.
  static RootedTree from_parents(std::vector<Vertex> parent);

  /// Orients an undirected edge list by breadth-first traversal from root.
  /// Children keep the order in which their edges appear.
  static RootedTree from_edges(std::size_t n, std::span<const Edge> edges, Vertex root = 0);

  std::size_t size() const { return parent_.size(); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> children(Vertex v) const { return children_[v]; }
  std::size_t degree(Vertex v) const {
    return children_[v].size() + (v == root_ ? 0 : 1);
  }

  /// Vertices in breadth-first order from the root; reversing it gives a
  /// valid post-order for bottom-up dynamic programs.
  const std::vector<Vertex>& bfs_order() const { return order_; }

  /// Distance of every vertex from the root.
  std::vector<std::size_t> depths() const;

  /// (parent, child) pairs in breadth-first order of the child.
  std::vector<Edge> edges() const;

  /// Edges as (min, max) pairs, lexicographically sorted.
  std::vector<Edge> canonical_edges() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.root_ == b.root_ && a.parent_ == b.parent_ && a.children_ == b.children_;
  }

 private:
  RootedTree() = default;
  void finish();

  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> order_;
};

/// Throws std::logic_error if the tree's internal structure is inconsistent.
void validate(const RootedTree& tree);

enum class Family { Tmt1, SST, Spider, Caterpillar, Path, Star, Random };

/// A named tree family instance. Parameter meaning depends on the family:
///   Tmt1         {m, t}
///   SST          per-level child counts c0, c1, ...
///   Spider       {legs} or {legs, leg length}; leg length defaults to 2
///   Caterpillar  pendant count per spine vertex (zeros allowed)
///   Path, Star   {n}
///   Random       {n, seed}
struct FamilySpec {
  Family family = Family::Path;
  std::vector<std::uint64_t> params;

  /// Parses "Tmt1:m,t", "SST:c0,c1,...", "Spider:t[,len]", "Cat:p1,...",
  /// "Path:n", "Star:n" and "Rand:n,seed".
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws SpecError when the parameters do not describe a valid instance.
void check_spec(const FamilySpec& spec);

/// Materializes a family instance with vertices numbered breadth-first.
RootedTree build_family(const FamilySpec& spec);

RootedTree build_tmt1(std::size_t m, std::size_t t);
RootedTree build_sst(std::span<const std::size_t> child_counts);
RootedTree build_spider(std::size_t legs, std::size_t leg_length = 2);
RootedTree build_caterpillar(std::span<const std::size_t> pendants);
RootedTree build_path(std::size_t n);
RootedTree build_star(std::size_t n);

/// Child counts of T(2^m 1^n): m levels of two children, then n levels of one.
std::vector<std::size_t> binary_then_path_counts(std::size_t m, std::size_t n);

class EdgeListError : public std::invalid_argument {
 public:
  enum class Kind { Syntax, SelfLoop, Duplicate, OutOfRange, Cycle, Disconnected };
  EdgeListError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Parses "u v" lines (0-indexed, '#' comments ignored) into a tree rooted
/// at vertex 0. The vertex count is one more than the largest index seen.
RootedTree parse_edge_list(std::string_view text);

/// Renders the "u v" text format, one edge per line.
std::string format_edge_list(std::span<const Edge> edges);

/// Size of the largest independent set.
std::size_t independence_number(const RootedTree& tree);

// --- random trees --------------------------------------------------------

/**
 * SplitMix64 (Steele, Lea and Flood). Each call advances the state by the
 * golden-ratio increment and returns a mixed 64-bit output. The sequence is
 * fully determined by the seed on every platform.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform draw from [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// The SplitMix64 output finalizer applied to a single word.
std::uint64_t mix64(std::uint64_t z);

/// Decodes a Prüfer sequence over labels 0..n-1 (length n-2) into the
/// labeled tree's edges, each as (min, max).
std::vector<Edge> prufer_decode(std::span<const Vertex> code, std::size_t n);

/// Uniformly random labeled tree on n vertices: a Prüfer sequence drawn from
/// SplitMix64(seed), decoded, and rooted at vertex 0.
RootedTree random_tree(std::size_t n, std::uint64_t seed);

}  // namespace indlab

#endif  // INDLAB_TREEKIT_HPP
