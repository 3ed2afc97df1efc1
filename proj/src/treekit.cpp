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

#include "indlab/treekit.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace indlab {

namespace {

// Upper bound on materialized trees; the implicit SST path has no limit.
constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 26;

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

std::string edge_str(const Edge& e) {
  return std::to_string(e.first) + " " + std::to_string(e.second);
}

}  // namespace

// --- RootedTree -----------------------------------------------------------

RootedTree RootedTree::from_parents(std::vector<Vertex> parent) {
  if (parent.empty()) throw std::invalid_argument("tree must have at least one vertex");
  const std::size_t n = parent.size();
  RootedTree t;
  t.children_.assign(n, {});
  bool have_root = false;
  for (std::size_t v = 0; v < n; ++v) {
    if (parent[v] == kNoParent) {
      if (have_root) throw std::invalid_argument("parent array has more than one root");
      have_root = true;
      t.root_ = static_cast<Vertex>(v);
    } else if (parent[v] >= n || parent[v] == v) {
      throw std::invalid_argument("parent array entry out of range at vertex " +
                                  std::to_string(v));
    } else {
      t.children_[parent[v]].push_back(static_cast<Vertex>(v));
    }
  }
  if (!have_root) throw std::invalid_argument("parent array has no root");
  t.parent_ = std::move(parent);
  t.finish();
  if (t.order_.size() != n) throw std::invalid_argument("parent array contains a cycle");
  return t;
}

RootedTree RootedTree::from_edges(std::size_t n, std::span<const Edge> edges, Vertex root) {
  using Kind = EdgeListError::Kind;
  if (n == 0) throw EdgeListError(Kind::Disconnected, "tree must have at least one vertex");
  if (root >= n) throw EdgeListError(Kind::OutOfRange, "root out of range");
  std::set<Edge> seen;
  DisjointSets dsu(n);
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& e : edges) {
    if (e.first >= n || e.second >= n) {
      throw EdgeListError(Kind::OutOfRange, "vertex out of range in edge " + edge_str(e));
    }
    if (e.first == e.second) throw EdgeListError(Kind::SelfLoop, "self-loop " + edge_str(e));
    const Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
    if (!seen.insert(key).second) {
      throw EdgeListError(Kind::Duplicate, "duplicate edge " + edge_str(e));
    }
    if (!dsu.unite(e.first, e.second)) {
      throw EdgeListError(Kind::Cycle, "edge " + edge_str(e) + " closes a cycle");
    }
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  if (edges.size() + 1 != n) {
    throw EdgeListError(Kind::Disconnected, "graph on " + std::to_string(n) + " vertices with " +
                                                std::to_string(edges.size()) +
                                                " edges is disconnected");
  }

  RootedTree t;
  t.root_ = root;
  t.parent_.assign(n, kNoParent);
  t.children_.assign(n, {});
  std::vector<Vertex> queue{root};
  std::vector<bool> visited(n, false);
  visited[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : adj[v]) {
      if (visited[w]) continue;
      visited[w] = true;
      t.parent_[w] = v;
      t.children_[v].push_back(w);
      queue.push_back(w);
    }
  }
  t.order_ = std::move(queue);
  return t;
}

void RootedTree::finish() {
  order_.clear();
  order_.reserve(parent_.size());
  order_.push_back(root_);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    for (Vertex c : children_[order_[head]]) order_.push_back(c);
  }
}

std::vector<std::size_t> RootedTree::depths() const {
  std::vector<std::size_t> d(size(), 0);
  for (Vertex v : order_) {
    if (v != root_) d[v] = d[parent_[v]] + 1;
  }
  return d;
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(size() - 1);
  for (Vertex v : order_) {
    if (v != root_) out.emplace_back(parent_[v], v);
  }
  return out;
}

std::vector<Edge> RootedTree::canonical_edges() const {
  std::vector<Edge> out = edges();
  for (auto& e : out) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate(const RootedTree& tree) {
  const std::size_t n = tree.size();
  if (n == 0) throw std::logic_error("empty tree");
  if (tree.root() >= n || tree.parent(tree.root()) != kNoParent) {
    throw std::logic_error("root is not parentless");
  }
  std::size_t edge_count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v != tree.root()) {
      const Vertex p = tree.parent(v);
      if (p >= n) throw std::logic_error("vertex " + std::to_string(v) + " has no parent");
      const auto kids = tree.children(p);
      if (std::count(kids.begin(), kids.end(), v) != 1) {
        throw std::logic_error("parent/child lists disagree at vertex " + std::to_string(v));
      }
    }
    for (Vertex c : tree.children(v)) {
      if (c >= n || tree.parent(c) != v) throw std::logic_error("bad child entry");
      ++edge_count;
    }
  }
  if (edge_count != n - 1) throw std::logic_error("edge count is not n-1");
  const auto& order = tree.bfs_order();
  if (order.size() != n) throw std::logic_error("not all vertices reachable from root");
  std::vector<bool> hit(n, false);
  for (Vertex v : order) {
    if (v >= n || hit[v]) throw std::logic_error("traversal order repeats a vertex");
    hit[v] = true;
  }
}

// --- families ---------------------------------------------------------------

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::Tmt1: return "Tmt1";
    case Family::SST: return "SST";
    case Family::Spider: return "Spider";
    case Family::Caterpillar: return "Cat";
    case Family::Path: return "Path";
    case Family::Star: return "Star";
    case Family::Random: return "Rand";
  }
  return "?";
}

std::uint64_t checked_vertices(std::uint64_t acc, std::uint64_t add) {
  if (add > kMaxVertices || acc + add > kMaxVertices) {
    throw SpecError("tree too large to materialize (limit " + std::to_string(kMaxVertices) +
                    " vertices)");
  }
  return acc + add;
}

std::vector<std::size_t> to_sizes(std::span<const std::uint64_t> params) {
  return {params.begin(), params.end()};
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw SpecError("family spec '" + std::string(text) + "' lacks ':'");
  }
  const std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  if (name == "Tmt1") spec.family = Family::Tmt1;
  else if (name == "SST") spec.family = Family::SST;
  else if (name == "Spider") spec.family = Family::Spider;
  else if (name == "Cat") spec.family = Family::Caterpillar;
  else if (name == "Path") spec.family = Family::Path;
  else if (name == "Star") spec.family = Family::Star;
  else if (name == "Rand") spec.family = Family::Random;
  else throw SpecError("unknown family '" + std::string(name) + "'");

  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw SpecError("bad parameter '" + std::string(tok) + "' in '" + std::string(text) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  check_spec(spec);
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = family_name(family);
  out += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

void check_spec(const FamilySpec& spec) {
  const auto& p = spec.params;
  const std::string name = family_name(spec.family);
  auto need_count = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi) {
      throw SpecError(name + " takes " + std::to_string(lo) +
                      (lo == hi ? "" : ".." + std::to_string(hi)) + " parameters, got " +
                      std::to_string(p.size()));
    }
  };
  auto need_positive = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last && i < p.size(); ++i) {
      if (p[i] == 0) throw SpecError(name + " parameters must be positive");
    }
  };
  switch (spec.family) {
    case Family::Tmt1: {
      need_count(2, 2);
      need_positive(0, 2);
      if (p[0] > kMaxVertices || p[1] > kMaxVertices) checked_vertices(0, kMaxVertices + 1);
      checked_vertices(1 + p[0], 2 * p[0] * p[1]);
      break;
    }
    case Family::SST: {
      if (p.empty()) throw SpecError("SST needs at least one level");
      need_positive(0, p.size());
      std::uint64_t level = 1, total = 1;
      for (auto c : p) {
        if (c > kMaxVertices || level > kMaxVertices / c) checked_vertices(total, kMaxVertices + 1);
        level *= c;
        total = checked_vertices(total, level);
      }
      break;
    }
    case Family::Spider:
      need_count(1, 2);
      need_positive(0, 2);
      if (p[0] > kMaxVertices || (p.size() == 2 && p[1] > kMaxVertices)) {
        checked_vertices(0, kMaxVertices + 1);
      }
      checked_vertices(1, p[0] * (p.size() == 2 ? p[1] : 2));
      break;
    case Family::Caterpillar: {
      if (p.empty()) throw SpecError("Cat needs at least one spine vertex");
      std::uint64_t total = 0;
      for (auto c : p) total = checked_vertices(total, checked_vertices(1, c));
      break;
    }
    case Family::Path:
    case Family::Star:
      need_count(1, 1);
      need_positive(0, 1);
      checked_vertices(0, p[0]);
      break;
    case Family::Random:
      need_count(2, 2);
      need_positive(0, 1);
      checked_vertices(0, p[0]);
      break;
  }
}

RootedTree build_family(const FamilySpec& spec) {
  check_spec(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Tmt1: return build_tmt1(p[0], p[1]);
    case Family::SST: {
      const auto counts = to_sizes(p);
      return build_sst(counts);
    }
    case Family::Spider: return build_spider(p[0], p.size() == 2 ? p[1] : 2);
    case Family::Caterpillar: {
      const auto pend = to_sizes(p);
      return build_caterpillar(pend);
    }
    case Family::Path: return build_path(p[0]);
    case Family::Star: return build_star(p[0]);
    case Family::Random: return random_tree(p[0], p[1]);
  }
  throw SpecError("unhandled family");
}

RootedTree build_sst(std::span<const std::size_t> child_counts) {
  std::vector<Vertex> parent{kNoParent};
  std::size_t level_begin = 0, level_end = 1;
  for (std::size_t c : child_counts) {
    for (std::size_t v = level_begin; v < level_end; ++v) {
      for (std::size_t i = 0; i < c; ++i) parent.push_back(static_cast<Vertex>(v));
    }
    level_begin = level_end;
    level_end = parent.size();
  }
  return RootedTree::from_parents(std::move(parent));
}

RootedTree build_tmt1(std::size_t m, std::size_t t) {
  const std::size_t counts[] = {m, t, 1};
  return build_sst(counts);
}

RootedTree build_spider(std::size_t legs, std::size_t leg_length) {
  std::vector<std::size_t> counts{legs};
  counts.resize(leg_length, 1);
  return build_sst(counts);
}

RootedTree build_path(std::size_t n) {
  const std::vector<std::size_t> counts(n - 1, 1);
  return build_sst(counts);
}

RootedTree build_star(std::size_t n) {
  if (n == 1) return build_path(1);
  const std::size_t counts[] = {n - 1};
  return build_sst(counts);
}

RootedTree build_caterpillar(std::span<const std::size_t> pendants) {
  // Spine vertex i's children: spine vertex i+1 first, then its pendants.
  // Breadth-first numbering falls out of assigning ids level by level.
  std::vector<Vertex> parent{kNoParent};
  Vertex spine = 0;
  for (std::size_t i = 0; i < pendants.size(); ++i) {
    // Level i+1 holds spine i+1 followed by the pendants of spine i.
    Vertex next_spine = kNoParent;
    if (i + 1 < pendants.size()) {
      next_spine = static_cast<Vertex>(parent.size());
      parent.push_back(spine);
    }
    for (std::size_t j = 0; j < pendants[i]; ++j) parent.push_back(spine);
    spine = next_spine;
  }
  return RootedTree::from_parents(std::move(parent));
}

std::vector<std::size_t> binary_then_path_counts(std::size_t m, std::size_t n) {
  std::vector<std::size_t> counts(m, 2);
  counts.resize(m + n, 1);
  return counts;
}

// --- edge lists -------------------------------------------------------------

RootedTree parse_edge_list(std::string_view text) {
  using Kind = EdgeListError::Kind;
  std::vector<Edge> edges;
  std::size_t n = 1;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::istringstream in{std::string(line)};
    long long u = 0, v = 0;
    std::string extra;
    if (!(in >> u >> v) || (in >> extra)) {
      throw EdgeListError(Kind::Syntax, "line " + std::to_string(line_no) +
                                            ": expected 'u v', got '" + std::string(line) + "'");
    }
    constexpr long long kMax = static_cast<long long>(kMaxVertices);
    if (u < 0 || v < 0 || u >= kMax || v >= kMax) {
      throw EdgeListError(Kind::OutOfRange,
                          "line " + std::to_string(line_no) + ": vertex index out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  return RootedTree::from_edges(n, edges, 0);
}

std::string format_edge_list(std::span<const Edge> edges) {
  std::string out;
  for (const auto& e : edges) {
    out += edge_str(e);
    out += '\n';
  }
  return out;
}

std::size_t independence_number(const RootedTree& tree) {
  std::vector<std::size_t> with(tree.size(), 1), without(tree.size(), 0);
  const auto& order = tree.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (Vertex c : tree.children(*it)) {
      with[*it] += without[c];
      without[*it] += std::max(with[c], without[c]);
    }
  }
  return std::max(with[tree.root()], without[tree.root()]);
}

// --- random trees -------------------------------------------------------------

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Reject the short top segment so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::vector<Edge> prufer_decode(std::span<const Vertex> code, std::size_t n) {
  if (n < 2 || code.size() != n - 2) {
    throw std::invalid_argument("Prüfer code length must be n-2 with n >= 2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) {
    if (c >= n) throw std::invalid_argument("Prüfer label out of range");
    ++degree[c];
  }
  // Linear-time decode: `ptr` scans for the smallest leaf; a vertex that
  // becomes a leaf below `ptr` is consumed immediately.
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex c : code) {
    edges.emplace_back(static_cast<Vertex>(std::min<std::size_t>(leaf, c)),
                       static_cast<Vertex>(std::max<std::size_t>(leaf, c)));
    --degree[leaf];
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // Two vertices of degree 1 remain: `leaf` and n-1.
  edges.emplace_back(static_cast<Vertex>(std::min<std::size_t>(leaf, n - 1)),
                     static_cast<Vertex>(std::max<std::size_t>(leaf, n - 1)));
  return edges;
}

RootedTree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tree needs n >= 1");
  if (n == 1) return build_path(1);
  SplitMix64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  auto edges = prufer_decode(code, n);
  std::sort(edges.begin(), edges.end());
  return RootedTree::from_edges(n, edges, 0);
}

}  // namespace indlab
