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

#include "weilcodes/cyclotomic.hpp"

#include <sstream>

#include "weilcodes/numtheory.hpp"

namespace weilcodes {

CycInt::CycInt(int64_t p) : p_(p) {
  if (!is_prime(p) || p == 2) throw NotPrimeError("CycInt needs an odd prime p");
  c_.assign(p - 1, 0);
}

CycInt CycInt::integer(int64_t p, int64_t n) {
  CycInt r(p);
  r.c_[0] = n;
  return r;
}

CycInt CycInt::root(int64_t p, int64_t j) {
  CycInt r(p);
  int64_t e = j % p;
  if (e < 0) e += p;
  if (e < p - 1) {
    r.c_[e] = 1;
  } else {
    for (auto& c : r.c_) c = -1;
  }
  return r;
}

CycInt CycInt::from_counts(int64_t p, std::span<const int64_t> counts) {
  if (static_cast<int64_t>(counts.size()) != p) throw Error("from_counts: need p counts");
  CycInt r(p);
  for (int64_t j = 0; j < p - 1; ++j) r.c_[j] = checked_add(counts[j], -counts[p - 1]);
  return r;
}

void CycInt::check_same(const CycInt& o) const {
  if (p_ != o.p_) throw MixedPrimeError("CycInt operands live in different Z[zeta_p]");
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (int64_t j = 0; j < p_ - 1; ++j) c_[j] = checked_add(c_[j], o.c_[j]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (int64_t j = 0; j < p_ - 1; ++j) c_[j] = checked_add(c_[j], -o.c_[j]);
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r(p_);
  for (int64_t j = 0; j < p_ - 1; ++j) r.c_[j] = -c_[j];
  return r;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same(b);
  int64_t p = a.p_;
  // Convolve into exponent buckets mod p, then eliminate the zeta^(p-1) bucket.
  std::vector<int64_t> bucket(p, 0);
  for (int64_t i = 0; i < p - 1; ++i) {
    if (a.c_[i] == 0) continue;
    for (int64_t j = 0; j < p - 1; ++j) {
      if (b.c_[j] == 0) continue;
      int64_t e = i + j;
      if (e >= p) e -= p;
      bucket[e] = checked_add(bucket[e], checked_mul(a.c_[i], b.c_[j]));
    }
  }
  CycInt r(p);
  for (int64_t j = 0; j < p - 1; ++j) r.c_[j] = checked_add(bucket[j], -bucket[p - 1]);
  return r;
}

CycInt CycInt::scaled(int64_t n) const {
  CycInt r(p_);
  for (int64_t j = 0; j < p_ - 1; ++j) r.c_[j] = checked_mul(c_[j], n);
  return r;
}

CycInt CycInt::automorphism(int64_t z) const {
  int64_t zr = z % p_;
  if (zr < 0) zr += p_;
  if (zr == 0) throw BadAutomorphismError("sigma_z needs z nonzero mod p");
  std::vector<int64_t> bucket(p_, 0);
  for (int64_t j = 0; j < p_ - 1; ++j) {
    if (c_[j] == 0) continue;
    int64_t e = mulmod(zr, j, p_);
    bucket[e] = checked_add(bucket[e], c_[j]);
  }
  CycInt r(p_);
  for (int64_t j = 0; j < p_ - 1; ++j) r.c_[j] = checked_add(bucket[j], -bucket[p_ - 1]);
  return r;
}

bool CycInt::is_rational() const {
  for (int64_t j = 1; j < p_ - 1; ++j)
    if (c_[j] != 0) return false;
  return true;
}

int64_t CycInt::as_integer() const {
  if (!is_rational()) throw NotRationalIntegerError("CycInt has nonzero zeta coefficients");
  return c_[0];
}

std::string CycInt::to_json() const {
  std::ostringstream os;
  os << "{\"coeffs\":[";
  for (int64_t j = 0; j < p_ - 1; ++j) {
    if (j) os << ',';
    os << c_[j];
  }
  os << "],\"p\":" << p_ << "}";
  return os.str();
}

CycInt gauss_sum_closed(int64_t p, int64_t m) {
  if (!is_prime(p) || p == 2) throw NotPrimeError("gauss_sum_closed needs an odd prime p");
  if (m < 1) throw Error("gauss_sum_closed needs m >= 1");
  int64_t p_star = (p % 4 == 1) ? p : -p;
  if (m % 2 == 0) return CycInt::integer(p, -checked_pow(p_star, m / 2));
  CycInt quad(p);
  for (int64_t c = 1; c < p; ++c) quad += CycInt::root(p, c).scaled(quad_char(p, c));
  return quad.scaled(checked_pow(p_star, (m - 1) / 2));
}

}  // namespace weilcodes
