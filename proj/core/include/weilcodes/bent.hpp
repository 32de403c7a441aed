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
#include <memory>
#include <string>
#include <vector>

#include "weilcodes/cyclotomic.hpp"
#include "weilcodes/field.hpp"

namespace weilcodes {

/// Catalog of candidate functions f : F_q -> F_p with f(0) = 0.
///   TraceSquare       f(x) = Tr(x^2)
///   TraceAlphaKasami  f(x) = Tr(alpha x^(p^i + 1))
///   TraceKasami       f(x) = Tr(x^(p^i + 1))
///   TraceCoulter      f(x) = Tr(x^((3^i + 1)/2)), characteristic 3 only
enum class BentFamily { TraceSquare, TraceAlphaKasami, TraceKasami, TraceCoulter };

const char* family_name(BentFamily f);
/// Parses "square", "alphakasami", "kasami", "coulter"; raises Error otherwise.
BentFamily family_from_name(const std::string& name);

struct BentCandidate {
  BentFamily family;
  int64_t i = 0;  // exponent parameter; ignored by TraceSquare
};

/// Values f(x) for every x, indexed by element rank.
std::vector<uint8_t> candidate_values(const FieldTable& field, const BentCandidate& cand);

/// Walsh coefficient W_f(lambda) = sum over x of zeta^(f(x) - Tr(lambda x)),
/// evaluated term by term over all q elements.
CycInt walsh_transform(const FieldTable& field, const std::vector<uint8_t>& f_values,
                       FieldElement lambda);

/// Certified profile of a weakly regular bent function with the structure the
/// code construction needs:
///   - every Walsh coefficient has the shape eps * (p*)^(e/2) * zeta^(f*(lambda)),
///     eps in {-1, +1} shared by all lambda (f bent, weakly regular),
///   - the dual values f*(lambda) satisfy f*(c lambda) = c^2 f*(lambda) for
///     c in F_p^* (quadratic-type dual, l_f = 2),
///   - f itself is homogeneous: f(c x) = c^(k_f) f(x) with k_f even and
///     gcd(k_f - 1, p - 1) = 1.
struct BentProfile {
  BentCandidate candidate;
  int epsilon = 0;             // sign of W_f relative to (p*)^(e/2)
  int64_t k_f = 0;             // homogeneity degree of f
  int64_t l_f = 2;             // homogeneity degree of the dual
  std::vector<uint8_t> f;      // f(x) by element rank
  std::vector<uint8_t> dual;   // f*(lambda) by element rank
};

/// Computes the full Walsh spectrum and certifies the profile.
/// Raises NotBentError (some |W|^2 != q), NotWeaklyRegularError (coefficient
/// signs or unit parts inconsistent), DualNotQuadraticError, or
/// NotHomogeneousError.
BentProfile extract_profile(const FieldTable& field, const BentCandidate& cand);

/// Occurrence counts N(c) = #{lambda : f*(lambda) = c} for c = 0..p-1.
/// The counts are taken from the dual table and compared against the closed
/// form for even e,
///   N(0)      = p^(e-1) + eps (p-1) (p*)^(e/2) / p,
///   N(c != 0) = p^(e-1) - eps (p*)^(e/2) / p,
/// raising CountMismatchError when they differ (the observed count is the
/// authoritative one; a mismatch stops the run rather than trusting either).
std::vector<int64_t> dual_level_counts(const FieldTable& field, const BentProfile& profile);

}  // namespace weilcodes
