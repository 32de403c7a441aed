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
#include <optional>
#include <vector>

#include "weilcodes/errors.hpp"

namespace weilcodes {

/// Validated parameter triple (p, ell, k) together with the derived
/// quantities of the ambient field F_q:
///
///   e     = phi(ell^k) = (ell-1) ell^(k-1), always even here,
///   q     = p^e,
///   exp_n = (q-1) / (2 ell^k), the exponent N with xi = alpha^N of order 2 ell^k.
///
/// The defining requirement is that p is a primitive root modulo 2 ell^k,
/// i.e. ord(p mod 2 ell^k) = e.
struct FieldParams {
  int64_t p = 0;
  int64_t ell = 0;
  int64_t k = 0;
  int64_t e = 0;
  int64_t q = 0;
  int64_t exp_n = 0;
  int64_t ell_k = 0;    // ell^k
  int64_t ell_k1 = 0;   // ell^(k-1)
  int64_t two_ell_k = 0;
};

/// Checks (p, ell, k) and derives FieldParams.
///
/// Raises NotPrimeError, EvenInputError, EqualPrimesError,
/// NotPrimitiveRootError, or OverflowError (q above `q_ceiling`).
FieldParams validate_params(int64_t p, int64_t ell, int64_t k,
                            int64_t q_ceiling = int64_t{1} << 31);

/// Field element in discrete-log form: lg = -1 encodes 0, otherwise the
/// element is alpha^lg with 0 <= lg <= q-2.
struct FieldElement {
  int32_t lg = -1;
  bool is_zero() const { return lg < 0; }
  friend bool operator==(FieldElement a, FieldElement b) { return a.lg == b.lg; }
  friend bool operator!=(FieldElement a, FieldElement b) { return a.lg != b.lg; }
};

/// Lookup tables for F_{p^m} = F_p[x]/(f) with f the deterministically chosen
/// primitive polynomial (smallest coefficient vector in the base-p integer
/// order of (c_{m-1}, ..., c_1, c_0)).  alpha is the residue class of x and
/// generates the multiplicative group.  All tables are built once in the
/// constructor and never mutated.
class FieldTable {
 public:
  /// Generic field, no (p, ell, k) structure attached.  `poly_index` skips
  /// that many primitive polynomials before picking one; the default 0 gives
  /// the canonical choice.
  FieldTable(int64_t p, int64_t degree, int64_t table_ceiling = int64_t{1} << 31,
             int64_t poly_index = 0);

  /// Field for a validated parameter triple; additionally fixes
  /// xi = alpha^exp_n of multiplicative order 2 ell^k.
  explicit FieldTable(const FieldParams& params, int64_t table_ceiling = int64_t{1} << 31,
                      int64_t poly_index = 0);

  int64_t p() const { return p_; }
  int64_t degree() const { return m_; }
  int64_t q() const { return q_; }
  const std::optional<FieldParams>& params() const { return params_; }
  /// Coefficients c_0..c_{m-1} of the modulus x^m + c_{m-1} x^{m-1} + ... + c_0.
  const std::vector<int32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {}; }
  FieldElement one() const { return {0}; }
  FieldElement alpha() const { return from_log(1 % (q_ - 1)); }
  /// xi = alpha^exp_n; requires parameter structure.
  FieldElement xi() const;

  FieldElement from_log(int64_t lg) const;
  /// Embeds the residue z mod p as a constant.
  FieldElement from_residue(int64_t z) const;
  /// Deterministic enumeration order: rank 0 is 0, rank r >= 1 is alpha^(r-1).
  FieldElement element_at(int64_t rank) const;
  int64_t rank_of(FieldElement a) const { return a.lg + 1; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  /// a^n with a != 0 or n > 0; exponents may be any integer for nonzero a.
  FieldElement pow(FieldElement a, int64_t n) const;

  /// Absolute trace onto F_p, as a residue in 0..p-1.
  int trace(FieldElement a) const { return trace_by_rank_[a.lg + 1]; }

  /// True iff a lies in the prime subfield F_p.
  bool in_prime_field(FieldElement a) const { return packed_of(a) < p_; }
  /// Value in 0..p-1 of an element of the prime subfield.
  int64_t prime_residue(FieldElement a) const;

  /// Packed base-p encoding sum c_j p^j of the coordinate vector.
  int64_t packed_of(FieldElement a) const { return a.is_zero() ? 0 : antilog_[a.lg]; }
  FieldElement from_packed(int64_t v) const;

  /// Index i_b = (-log_alpha b) mod 2 ell^k, so that b^{-exp_n} = xi^{i_b}.
  /// Requires parameter structure; raises ZeroElementError on b = 0.
  int64_t residue_class(FieldElement b) const;

 private:
  void build(int64_t poly_index, int64_t table_ceiling);

  int64_t p_ = 0, m_ = 0, q_ = 0;
  std::optional<FieldParams> params_;
  std::vector<int32_t> modulus_;       // c_0..c_{m-1}
  std::vector<uint32_t> antilog_;      // packed value of alpha^i
  std::vector<int32_t> log_of_;        // packed value -> log, -1 for 0
  std::vector<int32_t> zech_;          // log(1 + alpha^i), -1 when 1 + alpha^i = 0
  std::vector<int32_t> trace_by_rank_; // rank-indexed absolute trace
  int64_t neg_shift_ = 0;              // log(-1) = (q-1)/2 for odd q > 1
};

/// Builds the table set for validated parameters (spec-level entry point).
FieldTable build_field(const FieldParams& params, int64_t table_ceiling = int64_t{1} << 31);

inline int trace(const FieldTable& f, FieldElement a) { return f.trace(a); }
inline int64_t residue_class(const FieldTable& f, FieldElement b) { return f.residue_class(b); }

}  // namespace weilcodes
