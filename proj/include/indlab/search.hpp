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

#ifndef INDLAB_SEARCH_HPP
#define INDLAB_SEARCH_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace indlab {

struct SearchOptions {
  std::size_t n_min = 26;
  std::size_t n_max = 26;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// One persisted non-log-concave tree.
struct SearchRecord {
  std::uint64_t seed = 0;
  std::uint64_t sample_index = 0;
  std::size_t n = 0;
  /// Canonical "u v" edge list text.
  std::string edge_list;
  std::vector<std::size_t> breaks;
  std::size_t alpha = 0;

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

/// Seed of sample i: the (i+1)-th SplitMix64 output for the master seed,
/// i.e. mix64(master + (i+1) * 0x9E3779B97F4A7C15).
std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index);

/// Vertex count of sample i: n_min + SplitMix64(sample_seed ^
/// 0xD1B54A32D192ED03).below(n_max - n_min + 1).
std::size_t sample_size(const SearchOptions& opts, std::uint64_t index);

/// Draws and analyzes sample i; the record's breaks may be empty.
SearchRecord evaluate_sample(const SearchOptions& opts, std::uint64_t index);

/// Throws std::invalid_argument for n_min < 2, n_max < n_min or samples == 0.
void check_options(const SearchOptions& opts);

struct SearchSummary {
  std::uint64_t evaluated = 0;
  std::uint64_t found = 0;
  bool interrupted = false;
};

/**
 * Evaluates samples 0..samples-1 on `threads` workers and passes every
 * counterexample to `emit` in increasing sample order, as soon as all
 * earlier samples are done. Output is identical for any thread count.
 * Setting `*stop` halts the run after the current samples; everything
 * emitted so far remains a consistent prefix.
 */
SearchSummary run_search(const SearchOptions& opts,
                         const std::function<void(const SearchRecord&)>& emit,
                         const std::atomic<bool>* stop = nullptr);

/// Single-line JSON object (the JSONL record format).
namespace detail {

using SampleEvaluator = std::function<SearchRecord(const SearchOptions&, std::uint64_t)>;

/// run_search with a replaceable per-sample evaluator.
SearchSummary run_search_with(const SearchOptions& opts, const SampleEvaluator& evaluate,
                              const std::function<void(const SearchRecord&)>& emit,
                              const std::atomic<bool>* stop = nullptr);

}  // namespace detail

std::string record_to_json(const SearchRecord& record);
SearchRecord record_from_json(const std::string& line);

/// Regenerates the tree from (seed, sample_index, n) and confirms both the
/// edge list and the break set.
bool replay_record(const SearchRecord& record);

}  // namespace indlab

#endif  // INDLAB_SEARCH_HPP
