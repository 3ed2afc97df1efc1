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

#ifndef INDLAB_SEQLAB_HPP
#define INDLAB_SEQLAB_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indlab/bigpoly.hpp"
#include "indlab/treekit.hpp"

namespace indlab {

/// Every k in [1, len-2] with seq[k]^2 < seq[k-1] * seq[k+1].
/// Throws std::invalid_argument on an empty sequence or a nonpositive entry.
std::vector<std::size_t> lc_breaks(std::span<const BigInt> seq);

struct ModeRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
  friend bool operator==(const ModeRange&, const ModeRange&) = default;
};

struct UnimodalVerdict {
  bool unimodal = false;
  /// Indices attaining the maximum; set only when unimodal.
  std::optional<ModeRange> modes;
};

/// Weakly rising then weakly falling (plateaus allowed).
UnimodalVerdict is_unimodal(std::span<const BigInt> seq);

/// ceil((2*alpha - 1) / 3), and 0 for alpha = 0.
std::size_t tail_start(std::size_t alpha);

/// seq[k] >= seq[k+1] for k = tail_start(alpha) .. alpha-1.
/// Requires alpha == seq.size() - 1.
bool tail_monotone_check(std::span<const BigInt> seq, std::size_t alpha);

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t alpha = 0;
  IntPolynomial coeffs;
  std::vector<std::size_t> breaks;
  bool is_log_concave = true;
  bool is_unimodal = true;
  std::optional<ModeRange> modes;
  std::size_t tail_start = 0;
  bool tail_monotone = true;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const RootedTree& tree);

/// Report for an already computed sequence of a tree on n vertices.
AnalysisReport analyze_sequence(std::size_t n, IntPolynomial coeffs);

/// JSON object with keys n, alpha, coeffs, breaks, is_log_concave,
/// is_unimodal, mode_lo, mode_hi, tail_start, tail_monotone (in that order).
/// Coefficients are decimal strings; the mode fields are null when the
/// sequence is not unimodal.
std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const std::string& text);

}  // namespace indlab

#endif  // INDLAB_SEQLAB_HPP
