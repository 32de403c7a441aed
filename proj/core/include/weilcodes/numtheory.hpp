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

#include "weilcodes/errors.hpp"

namespace weilcodes {

/// Checked 64-bit addition; raises OverflowError instead of wrapping.
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

/// Checked 64-bit multiplication; raises OverflowError instead of wrapping.
inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Checked base^exp for non-negative exp.
inline int64_t checked_pow(int64_t base, int64_t exp) {
  int64_t r = 1;
  for (int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

/// Deterministic primality test by trial division; intended for desk-scale
/// inputs (up to ~2^31 the scan stays below 50k divisions).
inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// a*b mod m without overflow.
inline int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

/// a^e mod m for e >= 0.
inline int64_t powmod(int64_t a, int64_t e, int64_t m) {
  int64_t r = 1 % m;
  a %= m;
  if (a < 0) a += m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
inline int64_t mult_order(int64_t a, int64_t m) {
  int64_t x = a % m;
  if (x < 0) x += m;
  int64_t cur = x % m, ord = 1;
  while (cur != 1 % m) {
    cur = mulmod(cur, x, m);
    if (++ord > m) throw Error("mult_order: argument is not a unit");
  }
  return ord;
}

/// Distinct prime factors of n, ascending.
inline std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Legendre symbol (z/p) in {-1, 0, 1} for an odd prime p.
inline int quad_char(int64_t p, int64_t z) {
  int64_t r = z % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace weilcodes
