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

#include "indlab/search.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "indlab/seqlab.hpp"
#include "indlab/treekit.hpp"

namespace indlab {

std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

std::size_t sample_size(const SearchOptions& opts, std::uint64_t index) {
  SplitMix64 rng(sample_seed(opts.seed, index) ^ 0xD1B54A32D192ED03ULL);
  return opts.n_min + static_cast<std::size_t>(rng.below(opts.n_max - opts.n_min + 1));
}

void check_options(const SearchOptions& opts) {
  if (opts.n_min < 2) throw std::invalid_argument("--n-min must be at least 2");
  if (opts.n_max < opts.n_min) throw std::invalid_argument("--n-max must be at least --n-min");
  if (opts.samples == 0) throw std::invalid_argument("--samples must be at least 1");
  if (opts.threads == 0) throw std::invalid_argument("--threads must be at least 1");
}

SearchRecord evaluate_sample(const SearchOptions& opts, std::uint64_t index) {
  SearchRecord r;
  r.seed = opts.seed;
  r.sample_index = index;
  r.n = sample_size(opts, index);
  const RootedTree tree = random_tree(r.n, sample_seed(opts.seed, index));
  const AnalysisReport report = analyze(tree);
  r.edge_list = format_edge_list(tree.canonical_edges());
  r.breaks = report.breaks;
  r.alpha = report.alpha;
  return r;
}

namespace detail {

SearchSummary run_search_with(const SearchOptions& opts, const SampleEvaluator& evaluate,
                              const std::function<void(const SearchRecord&)>& emit,
                              const std::atomic<bool>* stop) {
  check_options(opts);
  std::atomic<std::uint64_t> next{0};
  std::mutex mu;
  // Finished samples that cannot be flushed yet because an earlier one is
  // still running. Only counterexamples carry a record.
  std::map<std::uint64_t, std::optional<SearchRecord>> pending;
  std::uint64_t flushed = 0;
  SearchSummary summary;

  auto worker = [&] {
    while (!(stop && stop->load(std::memory_order_relaxed))) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= opts.samples) break;
      SearchRecord r = evaluate(opts, i);
      std::lock_guard lock(mu);
      pending.emplace(i, r.breaks.empty() ? std::nullopt : std::optional(std::move(r)));
      for (auto it = pending.begin(); it != pending.end() && it->first == flushed;
           it = pending.erase(it)) {
        if (it->second) {
          emit(*it->second);
          ++summary.found;
        }
        ++flushed;
      }
    }
  };

  const unsigned n_threads = std::max(1u, opts.threads);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  }
  summary.evaluated = flushed;
  summary.interrupted = flushed < opts.samples;
  return summary;
}

}  // namespace detail

SearchSummary run_search(const SearchOptions& opts,
                         const std::function<void(const SearchRecord&)>& emit,
                         const std::atomic<bool>* stop) {
  return detail::run_search_with(opts, evaluate_sample, emit, stop);
}

std::string record_to_json(const SearchRecord& r) {
  nlohmann::ordered_json j;
  j["seed"] = std::to_string(r.seed);
  j["sample_index"] = r.sample_index;
  j["n"] = r.n;
  j["edge_list"] = r.edge_list;
  j["breaks"] = r.breaks;
  j["alpha"] = r.alpha;
  return j.dump();
}

SearchRecord record_from_json(const std::string& line) {
  const auto j = nlohmann::ordered_json::parse(line);
  SearchRecord r;
  r.seed = std::stoull(j.at("seed").get<std::string>());
  r.sample_index = j.at("sample_index").get<std::uint64_t>();
  r.n = j.at("n").get<std::size_t>();
  r.edge_list = j.at("edge_list").get<std::string>();
  r.breaks = j.at("breaks").get<std::vector<std::size_t>>();
  r.alpha = j.at("alpha").get<std::size_t>();
  return r;
}

bool replay_record(const SearchRecord& record) {
  const RootedTree tree = random_tree(record.n, sample_seed(record.seed, record.sample_index));
  if (format_edge_list(tree.canonical_edges()) != record.edge_list) return false;
  const AnalysisReport report = analyze(parse_edge_list(record.edge_list));
  return report.breaks == record.breaks && report.alpha == record.alpha;
}

}  // namespace indlab
