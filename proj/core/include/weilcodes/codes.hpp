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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "weilcodes/bent.hpp"
#include "weilcodes/charsum.hpp"
#include "weilcodes/field.hpp"

namespace weilcodes {

/// Which defining set the code is built on:
///   Du:     D = {(x, y) != (0,0) : Tr(x + y^N) = u},
///   Dprime: D = {(x, y) != (0,0) : f(x) + Tr(y^N) = 0} for a certified
///           profile f.
/// The codewords are c(gamma, delta) = (Tr(gamma x + delta y))_{(x,y) in D}.
class CodeSpec {
 public:
  static CodeSpec du(const FieldParams& params, int64_t u);
  static CodeSpec dprime(const FieldParams& params, std::shared_ptr<const BentProfile> profile);

  const FieldParams& params() const { return params_; }
  bool is_du() const { return profile_ == nullptr; }
  int64_t u() const;
  const BentProfile& profile() const;
  std::shared_ptr<const BentProfile> profile_ptr() const { return profile_; }

 private:
  FieldParams params_;
  int64_t u_ = 0;
  std::shared_ptr<const BentProfile> profile_;
};

/// Materialized defining set.  Pairs are enumerated x-major in the
/// deterministic element order (zero first, then ascending log), so the
/// column order of the code is reproducible.
struct DefiningSet {
  CodeSpec spec;
  std::vector<std::pair<int32_t, int32_t>> pairs;  // (x.lg, y.lg), -1 encodes 0
  int64_t n() const { return static_cast<int64_t>(pairs.size()); }
};

/// Closed-form size of the defining set:
///   Du:      p^(2e-1) - 1 for u = 0, else p^(2e-1),
///   Dprime:  q^2/p - 1 + (eps (p*)^(e/2) / p) (q (p-1) - p (ell-1)(q-1)/ell^k)
///            when ell = 1 mod p, with (q-1)/ell^(k-1) replacing
///            (ell-1)(q-1)/ell^k otherwise.
int64_t defining_set_size_closed(const CodeSpec& spec);

/// Enumerates the q^2 pairs; raises CeilingExceededError when q^2 exceeds
/// `pair_ceiling` and SizeMismatchError when the enumerated size differs from
/// the closed form.
DefiningSet build_defining_set(const CodeSpec& spec, const FieldTable& field,
                               int64_t pair_ceiling = 100000000);

/// Hamming weight of c(gamma, delta) by counting nonzero traces position by
/// position over the materialized set.
int64_t codeword_weight_direct(const FieldTable& field, const DefiningSet& ds, FieldElement gamma,
                               FieldElement delta);

/// Closed-form count N of positions (x, y) in D with Tr(gamma x + delta y) = 0,
/// for the Du construction; the weight is n - N.
int64_t N1_closed(const CodeSpec& spec, const FieldTable& field, const PartitionTables& part,
                  FieldElement gamma, FieldElement delta);

/// Same count for the Dprime construction.
int64_t N2_closed(const CodeSpec& spec, const FieldTable& field, const PartitionTables& part,
                  FieldElement gamma, FieldElement delta);

/// Closed-form zero count for either construction.
int64_t zero_count_closed(const CodeSpec& spec, const FieldTable& field,
                          const PartitionTables& part, FieldElement gamma, FieldElement delta);

struct GriesmerResult {
  int64_t bound = 0;  // sum of ceil(d / p^i) over i = 0..dim-1
  bool meets = false; // n == bound
};

GriesmerResult griesmer_check(int64_t n, int64_t dim, int64_t d, int64_t p);

/// Weight distribution of the full code (all q^2 codewords including zero).
struct WeightDistribution {
  std::map<int64_t, int64_t> dist;  // weight -> frequency
  int64_t n = 0;
  int64_t dim = 0;      // log_p of the code size; equals 2e when no collision
  int64_t d_min = 0;    // smallest nonzero weight

  /// Checks A_0 = 1, frequencies positive, total mass p^(2e), weights
  /// within [0, n]; raises InternalInconsistencyError on violation.
  void validate(const FieldParams& params) const;
};

enum class Method { Direct, Closed };

/// Full spectrum by the chosen method.  Direct enumerates all q^2 codewords
/// over the materialized set (whose construction raises CeilingExceededError
/// when q^2 exceeds `pair_ceiling`).  Closed evaluates the zero-count
/// formulas, per pair when q^2 is within `pair_ceiling` and by class
/// aggregation otherwise; both closed paths produce identical distributions.
WeightDistribution weight_distribution(const CodeSpec& spec, const FieldTable& field,
                                       const PartitionTables& part, Method method,
                                       int64_t pair_ceiling = 100000000);

/// Closed-method spectrum via class aggregation only (no q^2 loop).
WeightDistribution weight_distribution_closed_aggregated(const CodeSpec& spec,
                                                         const FieldTable& field,
                                                         const PartitionTables& part);

/// Raises MethodDisagreementError carrying the first differing weight when
/// the two distributions are not identical.
void require_same_distribution(const WeightDistribution& a, const WeightDistribution& b);

struct SampleMismatch {
  int32_t gamma_lg = -1, delta_lg = -1;
  int64_t direct = 0, closed = 0;
};

struct SampleReport {
  uint64_t seed = 0;
  int64_t samples = 0;
  std::vector<int64_t> weights;          // direct weight per draw
  std::vector<SampleMismatch> mismatches;

  /// Raises VerificationFailedError on the first mismatch.
  void check() const;
};

/// Draws `samples` nonzero pairs (gamma, delta) from mt19937_64(seed) and
/// compares the direct weight over the materialized set with the closed
/// prediction.
SampleReport sample_verify(const CodeSpec& spec, const FieldTable& field,
                           const PartitionTables& part, const DefiningSet& ds, int64_t samples,
                           uint64_t seed);

}  // namespace weilcodes
