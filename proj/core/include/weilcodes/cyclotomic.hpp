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
#include <span>
#include <string>
#include <vector>

#include "weilcodes/errors.hpp"

namespace weilcodes {

/// Element of Z[zeta_p] for an odd prime p, held exactly in the power basis
/// {zeta^0, ..., zeta^(p-2)}.  The relation 1 + zeta + ... + zeta^(p-1) = 0
/// rewrites zeta^(p-1) as -(zeta^0 + ... + zeta^(p-2)), which makes the
/// representation unique.  Coefficients are checked 64-bit integers; any
/// overflow raises instead of wrapping.
class CycInt {
 public:
  /// Zero element of Z[zeta_p].
  explicit CycInt(int64_t p);
  /// The rational integer n.
  static CycInt integer(int64_t p, int64_t n);
  /// zeta^j (j taken mod p).
  static CycInt root(int64_t p, int64_t j);
  /// counts[r] copies of zeta^r summed over r = 0..p-1.
  static CycInt from_counts(int64_t p, std::span<const int64_t> counts);

  int64_t prime() const { return p_; }
  /// Basis coefficients of zeta^0..zeta^(p-2).
  const std::vector<int64_t>& coeffs() const { return c_; }

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt operator-() const;
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  CycInt scaled(int64_t n) const;
  friend bool operator==(const CycInt& a, const CycInt& b) = default;

  /// Galois action sigma_z : zeta -> zeta^z, for z in 1..p-1
  /// (raises BadAutomorphismError otherwise).
  CycInt automorphism(int64_t z) const;
  /// Complex conjugation sigma_{p-1}.
  CycInt conj() const { return automorphism(p_ - 1); }

  bool is_rational() const;
  /// Value of a rational element; raises NotRationalIntegerError otherwise.
  int64_t as_integer() const;

  /// {"coeffs": [...], "p": p}
  std::string to_json() const;

 private:
  void check_same(const CycInt& o) const;

  int64_t p_;
  std::vector<int64_t> c_;
};

inline CycInt cyc_from_root(int64_t p, int64_t j) { return CycInt::root(p, j); }
inline CycInt apply_automorphism(const CycInt& a, int64_t z) { return a.automorphism(z); }

/// Gauss sum of the quadratic character of F_{p^m} with its canonical
/// additive character, in closed form:
///   m even: the rational integer (-1)^(m-1) (p*)^(m/2),
///   m odd:  (sum over c in F_p^* of (c/p) zeta^c) * (p*)^((m-1)/2),
/// where p* = (-1)^((p-1)/2) p.
CycInt gauss_sum_closed(int64_t p, int64_t m);

}  // namespace weilcodes
