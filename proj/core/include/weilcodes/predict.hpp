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
#include <string>
#include <vector>

#include "weilcodes/codes.hpp"
#include "weilcodes/field.hpp"

namespace weilcodes {

struct PredictRow {
  int64_t weight = 0;
  int64_t frequency = 0;
};

/// One evaluated case table: a descriptive branch id plus the nonzero-weight
/// rows exactly as the case analysis lists them, before merging equal weights
/// or dropping rows whose frequency vanishes.  Raises NonIntegerEntryError
/// when an entry does not evaluate to an integer.
struct CaseTable {
  std::string id;
  std::vector<PredictRow> rows;
};

/// Case table for the Du construction.  Only arithmetic fields of `params`
/// are read, so synthetic parameter structs (not constructible as real
/// fields at reasonable sizes) can exercise every branch.
CaseTable du_case_table(const FieldParams& params, int64_t u);

/// Case table for the Dprime construction with profile sign `eps`.
CaseTable dprime_case_table(const FieldParams& params, int eps);

/// Predicted spectrum: picks the branch for the spec, evaluates the rows,
/// merges equal weights, drops empty rows, prepends the zero codeword, and
/// validates total mass, so a prediction that cannot describe a linear code
/// fails loudly instead of propagating.
struct Prediction {
  std::string table;
  WeightDistribution dist;
};

Prediction predict_distribution(const CodeSpec& spec);

}  // namespace weilcodes
