/*
 * Copyright 2026 The weilcodes authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilcodes/bent.hpp"
#include "weilcodes/codes.hpp"
#include "weilcodes/cyclotomic.hpp"
#include "weilcodes/field.hpp"
#include "weilcodes/predict.hpp"

namespace weilcodes {

// Every builder returns a single-line JSON document with lexicographically
// sorted keys, so identical inputs render byte-identical output regardless of
// insertion order or platform.

std::string params_document(const FieldParams& params);

/// One evaluated character sum.  kind is "s" for S(a, b), "period" for the
/// 2 ell^k-term sum S(a), and "w" for w(u, b); `a` carries u when kind is
/// "w".  i_b is the residue class of b, with -1 encoding b = 0 (and no b at
/// all for period entries).  Either evaluation may be absent when only one
/// mode was requested.
struct WeilEntry {
  std::string kind;
  int64_t a = 0;
  int64_t i_b = -1;
  std::optional<CycInt> brute;
  std::optional<CycInt> closed;

  /// False only when both evaluations are present and differ.
  bool agree() const { return !brute || !closed || *brute == *closed; }
};

bool all_agree(const std::vector<WeilEntry>& entries);

std::string weil_document(const FieldParams& params, const std::vector<int>& trace_of_xi,
                          const std::vector<WeilEntry>& entries);

std::string bent_document(const FieldParams& params, const BentProfile& profile,
                          const std::vector<int64_t>& dual_levels);

std::string construct_document(const CodeSpec& spec, int64_t n);

/// {"d": ..., "dim": ..., "dist": [[w, A_w], ...] ascending, "griesmer":
///  {"bound": ..., "meets": ...}, "n": ..., "params": {...}, "spec": {...}}
std::string distribution_document(const CodeSpec& spec, const WeightDistribution& dist,
                                  const GriesmerResult& griesmer);

/// Same layout plus "source": "theorem" and the branch id under "table".
std::string prediction_document(const CodeSpec& spec, const Prediction& pred,
                                const GriesmerResult& griesmer);

/// Two-column export, header line "weight,frequency", rows ascending by weight.
std::string distribution_csv(const WeightDistribution& dist);

/// Rows [weight, frequency in a, frequency in b] for every weight whose
/// frequency differs between the two spectra, 0 standing in for an absent
/// weight.  same_shape records whether length and dimension match.
struct DistributionDiff {
  std::vector<std::array<int64_t, 3>> rows;
  bool same_shape = false;

  bool agree() const { return same_shape && rows.empty(); }
};

DistributionDiff diff_distributions(const WeightDistribution& a, const WeightDistribution& b);

std::string verify_document(const CodeSpec& spec, const WeightDistribution& observed,
                            const Prediction& predicted, const GriesmerResult& griesmer,
                            const DistributionDiff& diff);

std::string sample_document(const CodeSpec& spec, const SampleReport& report,
                            const WeightDistribution& closed_dist, const GriesmerResult& griesmer);

}  // namespace weilcodes
