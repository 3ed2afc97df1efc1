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

#include "indlab/seqlab.hpp"

#include <stdexcept>

#include <json.hpp>

#include "indlab/indpoly.hpp"

namespace indlab {

std::vector<std::size_t> lc_breaks(std::span<const BigInt> seq) {
  if (seq.empty()) throw std::invalid_argument("lc_breaks: empty sequence");
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] <= 0) {
      throw std::invalid_argument("lc_breaks: entry " + std::to_string(k) + " is not positive");
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1]) out.push_back(k);
  }
  return out;
}

UnimodalVerdict is_unimodal(std::span<const BigInt> seq) {
  if (seq.empty()) throw std::invalid_argument("is_unimodal: empty sequence");
  std::size_t k = 0;
  while (k + 1 < seq.size() && seq[k] <= seq[k + 1]) ++k;
  // k is the last index of the weakly rising prefix.
  for (std::size_t j = k; j + 1 < seq.size(); ++j) {
    if (seq[j] < seq[j + 1]) return {false, std::nullopt};
  }
  std::size_t lo = k;
  while (lo > 0 && seq[lo - 1] == seq[k]) --lo;
  std::size_t hi = k;
  while (hi + 1 < seq.size() && seq[hi + 1] == seq[k]) ++hi;
  return {true, ModeRange{lo, hi}};
}

std::size_t tail_start(std::size_t alpha) {
  return alpha == 0 ? 0 : (2 * alpha + 1) / 3;
}

bool tail_monotone_check(std::span<const BigInt> seq, std::size_t alpha) {
  if (seq.size() != alpha + 1) {
    throw std::invalid_argument("tail_monotone_check: alpha must equal len - 1");
  }
  for (std::size_t k = tail_start(alpha); k < alpha; ++k) {
    if (seq[k] < seq[k + 1]) return false;
  }
  return true;
}

AnalysisReport analyze_sequence(std::size_t n, IntPolynomial coeffs) {
  AnalysisReport r;
  r.n = n;
  r.alpha = coeffs.degree();
  r.breaks = lc_breaks(coeffs.view());
  r.is_log_concave = r.breaks.empty();
  const auto uni = is_unimodal(coeffs.view());
  r.is_unimodal = uni.unimodal;
  r.modes = uni.modes;
  r.tail_start = tail_start(r.alpha);
  r.tail_monotone = tail_monotone_check(coeffs.view(), r.alpha);
  r.coeffs = std::move(coeffs);
  return r;
}

AnalysisReport analyze(const RootedTree& tree) {
  return analyze_sequence(tree.size(), indpoly_tree(tree));
}

std::string report_to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["coeffs"] = r.coeffs.decimal_coeffs();
  j["breaks"] = r.breaks;
  j["is_log_concave"] = r.is_log_concave;
  j["is_unimodal"] = r.is_unimodal;
  if (r.modes) {
    j["mode_lo"] = r.modes->lo;
    j["mode_hi"] = r.modes->hi;
  } else {
    j["mode_lo"] = nullptr;
    j["mode_hi"] = nullptr;
  }
  j["tail_start"] = r.tail_start;
  j["tail_monotone"] = r.tail_monotone;
  return j.dump(2);
}

AnalysisReport report_from_json(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  AnalysisReport r;
  r.n = j.at("n").get<std::size_t>();
  r.alpha = j.at("alpha").get<std::size_t>();
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
  r.coeffs = IntPolynomial(std::move(coeffs));
  r.breaks = j.at("breaks").get<std::vector<std::size_t>>();
  r.is_log_concave = j.at("is_log_concave").get<bool>();
  r.is_unimodal = j.at("is_unimodal").get<bool>();
  if (!j.at("mode_lo").is_null()) {
    r.modes = ModeRange{j.at("mode_lo").get<std::size_t>(), j.at("mode_hi").get<std::size_t>()};
  }
  r.tail_start = j.at("tail_start").get<std::size_t>();
  r.tail_monotone = j.at("tail_monotone").get<bool>();
  return r;
}

}  // namespace indlab
