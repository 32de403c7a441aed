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
#include <vector>

#include "weilcodes/cyclotomic.hpp"
#include "weilcodes/field.hpp"

namespace weilcodes {

/// Class labels for the residue indices i in 0..2*ell^k - 1.  Writing
/// e = (ell-1) ell^(k-1) and L = ell^k, the coarse blocks are
///
///   P1 = [1, e],  P2 = (e, L],  P3 = (L, 2L - L/ell],  P4 = (2L - L/ell, 2L),
///
/// and P1, P3 split further by divisibility by ell^(k-1):
///   P1_1: ell^(k-1) does not divide i;  P1_2: i = j ell^(k-1), j odd;
///   P1_3: i = j ell^(k-1), j even.
///   P3_1: i - L not divisible by ell^(k-1);  among the rest, i = L + j ell^(k-1)
///   goes to P3_2 for j even, P3_3 for j odd.
/// Zero and EllK are the singletons {0} and {L}; EllK carries xi^L = -1.
enum class IndexClass : uint8_t {
  Zero, P1_1, P1_2, P1_3, P2, P3_1, P3_2, P3_3, P4, EllK
};

/// Index partition plus the trace table of the powers of xi.
/// trace_of_xi[i] = Tr(xi^i) as a residue mod p, computed from the field
/// tables and cross-checked at construction against the closed form
///
///   Tr(xi^i) = e               for i = 0,
///              -e              for i = L,
///              ell^(k-1)       for i in P1_2 or P3_2,
///              -ell^(k-1)      for i in P1_3 or P3_3,
///              0               otherwise,
///
/// all mod p.  A mismatch means corrupted tables and raises
/// InternalInconsistencyError.
struct PartitionTables {
  FieldParams params;
  std::vector<IndexClass> class_of;   // size 2 ell^k
  std::vector<int> trace_of_xi;       // size 2 ell^k, residues 0..p-1

  IndexClass label(int64_t i) const { return class_of[i]; }
  /// P1_2 u P1_3 u P3_2 u P3_3: the indices divisible by ell^(k-1)
  /// other than 0 and L.
  bool in_quartet(int64_t i) const;
  /// P1_2 u P3_2 (trace +ell^(k-1)).
  bool in_plus_pair(int64_t i) const;
  /// P1_3 u P3_3 (trace -ell^(k-1)).
  bool in_minus_pair(int64_t i) const;
};

PartitionTables build_partition(const FieldTable& field);

/// Congruence type of a residue u mod p relative to t1 = phi(ell^k) mod p and
/// t2 = ell^(k-1) mod p:
///   PhiOnly:  u^2 = t1^2 but u^2 != t2^2 (sign from u = +-t1),
///   EllOnly:  u^2 = t2^2 but u^2 != t1^2,
///   Both:     u^2 = t1^2 = t2^2 (the signs agree; mixed signs cannot occur),
///   Generic:  neither congruence holds,
///   ZeroU:    u = 0.
enum class CongruenceCase {
  Generic, PhiOnlyPlus, PhiOnlyMinus, EllOnlyPlus, EllOnlyMinus, BothPlus, BothMinus, ZeroU
};

CongruenceCase classify_u(const FieldParams& params, int64_t u);

/// Sign of the quadratic-character Gauss sum of F_q.  By the Hasse-Davenport
/// lift of the prime-field sum it equals -(p*)^(e/2) / sqrt(q) with
/// p* = (-1)^((p-1)/2) p, hence -1 unless p = 3 (mod 4) and e = 2 (mod 4).
/// Every sqrt(q) in the closed forms below enters through this sum, so the
/// sign decides on which side of the period the character term sits.
int quadratic_gauss_sign(const FieldParams& params);

/// Residue index of g * xi^i with g the quadratic Gauss sign: i itself when
/// g = +1, the antipode i + ell^k (mod 2 ell^k) when g = -1.
int64_t gauss_signed_index(const FieldParams& params, int64_t i);

/// S(a, b) = sum over x in F_q^* of zeta^Tr(a x^N + b x), term by term.
CycInt weil_sum_bruteforce(const FieldTable& field, FieldElement a, FieldElement b);

/// S(a) = sum over i in 0..2 ell^k - 1 of zeta^Tr(a xi^i), term by term.
CycInt weil_sum_period(const FieldTable& field, FieldElement a);

/// Closed form of the 2 ell^k-term period sum S(a) for a in F_p:
/// zeta^(e a) + zeta^(-e a) + (ell-1)(zeta^(L' a) + zeta^(-L' a)) + 2 ell^k - 2 ell
/// with L' = ell^(k-1).
CycInt weil_sum_period_closed(const FieldParams& params, int64_t a);

/// Closed form of S(a, b) for prime-field a:
///   b = 0: N * S(a),
///   b != 0: zeta^(g * a * Tr(xi^{i_b})) sqrt(q) - ((sqrt(q)+1)/(2 ell^k)) S(a),
/// where i_b = residue_class(b) and g = quadratic_gauss_sign: the character
/// term evaluates at g * a * b^{-N}.  Exact at every input; the brute-force
/// path is the independent oracle for it.
CycInt weil_sum_closed(const FieldTable& field, const PartitionTables& part, int64_t a,
                       FieldElement b);
/// Same, taking a as a field element; raises NonPrimeFieldError when a is
/// outside F_p.
CycInt weil_sum_closed(const FieldTable& field, const PartitionTables& part, FieldElement a,
                       FieldElement b);

enum class SumMode { Brute, Closed };

/// w(u, b) = sum over z in F_p^* of zeta^(-u z) S(z, b).  The brute mode
/// assembles the sum from brute-force S values; the closed mode returns the
/// rational integer of the case analysis.  With sq = sqrt(q), L = ell^k,
/// L' = ell^(k-1), Q4 the quartet of index classes, and j the gauss-signed
/// index of i_b (so the special sets face the character term of S(z, b)):
///
///   u = 0, b = 0:   ((q-1)/L) ((p-1) L - p ell + p)   if ell = 1 mod p,
///                   ((q-1)/L') ((p-1) L' - p)         otherwise.
///   u = 0, b != 0:  C - p + 1, minus the extra p sq when j lies in the
///                   special set, where
///                     ell = 1 mod p:  C = p (ell-1)(sq+1)/L,   special Q4,
///                     otherwise:      C = p (sq+1)/L',         special {0, L} u Q4.
///   u != 0, b = 0:  PhiOnly  ((q-1)/(2L)) (p - 2L),
///                   Both     ((q-1)/(2L')) (p - 2L'),
///                   EllOnly  ((q-1)/(2L)) (p (ell-1) - 2L),
///                   Generic  1 - q.
///   u != 0, b != 0: Generic 1; otherwise 1 - C, plus the extra p sq when
///                   j lies in the special set, where
///                     PhiOnlyPlus   C = p (sq+1)/(2L),          special {0},
///                     PhiOnlyMinus  C = p (sq+1)/(2L),          special {L},
///                     EllOnlyPlus   C = p (ell-1)(sq+1)/(2L),   special P1_2 u P3_2,
///                     EllOnlyMinus  C = p (ell-1)(sq+1)/(2L),   special P1_3 u P3_3,
///                     BothPlus      C = p (sq+1)/(2L'),         special {0} u P1_2 u P3_2,
///                     BothMinus     C = p (sq+1)/(2L'),         special {L} u P1_3 u P3_3.
CycInt w_sum(const FieldTable& field, const PartitionTables& part, int64_t u, FieldElement b,
             SumMode mode);

/// Integer value of the closed-mode w(u, b); i_b is ignored when b_zero.
int64_t w_sum_closed_value(const PartitionTables& part, int64_t u, bool b_zero, int64_t i_b);

}  // namespace weilcodes
