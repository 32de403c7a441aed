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

#include "weilcodes/charsum.hpp"

#include <string>

#include "weilcodes/numtheory.hpp"

namespace weilcodes {

namespace {

IndexClass classify_index(const FieldParams& fp, int64_t i) {
  int64_t e = fp.e, L = fp.ell_k, L1 = fp.ell_k1;
  if (i == 0) return IndexClass::Zero;
  if (i == L) return IndexClass::EllK;
  if (i <= e) {
    if (i % L1 != 0) return IndexClass::P1_1;
    return (i / L1) % 2 == 1 ? IndexClass::P1_2 : IndexClass::P1_3;
  }
  if (i < L) return IndexClass::P2;
  if (i <= 2 * L - L1) {
    int64_t d = i - L;
    if (d % L1 != 0) return IndexClass::P3_1;
    return (d / L1) % 2 == 0 ? IndexClass::P3_2 : IndexClass::P3_3;
  }
  return IndexClass::P4;
}

int64_t sqrt_q(const FieldParams& fp) {
  int64_t r = 1;
  for (int64_t i = 0; i < fp.e / 2; ++i) r *= fp.p;
  return r;
}

int64_t exact_div(int64_t a, int64_t b) {
  if (a % b != 0) throw InternalInconsistencyError("closed form produced a non-integer");
  return a / b;
}

}  // namespace

bool PartitionTables::in_quartet(int64_t i) const {
  IndexClass c = class_of[i];
  return c == IndexClass::P1_2 || c == IndexClass::P1_3 || c == IndexClass::P3_2 ||
         c == IndexClass::P3_3;
}

bool PartitionTables::in_plus_pair(int64_t i) const {
  IndexClass c = class_of[i];
  return c == IndexClass::P1_2 || c == IndexClass::P3_2;
}

bool PartitionTables::in_minus_pair(int64_t i) const {
  IndexClass c = class_of[i];
  return c == IndexClass::P1_3 || c == IndexClass::P3_3;
}

PartitionTables build_partition(const FieldTable& field) {
  if (!field.params()) throw Error("build_partition requires (p, ell, k) parameter structure");
  const FieldParams& fp = *field.params();
  PartitionTables part;
  part.params = fp;
  int64_t n = fp.two_ell_k, p = fp.p;
  part.class_of.resize(n);
  part.trace_of_xi.resize(n);

  int64_t counts[10] = {0};
  for (int64_t i = 0; i < n; ++i) {
    part.class_of[i] = classify_index(fp, i);
    ++counts[static_cast<int>(part.class_of[i])];
  }
  // Structural sizes of the partition blocks.
  auto expect = [](int64_t got, int64_t want, const char* what) {
    if (got != want) throw InternalInconsistencyError(std::string("partition block ") + what);
  };
  expect(counts[static_cast<int>(IndexClass::Zero)], 1, "{0}");
  expect(counts[static_cast<int>(IndexClass::EllK)], 1, "{ell^k}");
  expect(counts[static_cast<int>(IndexClass::P1_2)], (fp.ell - 1) / 2, "P1_2");
  expect(counts[static_cast<int>(IndexClass::P1_3)], (fp.ell - 1) / 2, "P1_3");
  expect(counts[static_cast<int>(IndexClass::P3_2)], (fp.ell - 1) / 2, "P3_2");
  expect(counts[static_cast<int>(IndexClass::P3_3)], (fp.ell - 1) / 2, "P3_3");
  expect(counts[static_cast<int>(IndexClass::P1_1)] + counts[static_cast<int>(IndexClass::P1_2)] +
             counts[static_cast<int>(IndexClass::P1_3)],
         fp.e, "P1");

  // Trace of xi^i from the tables, checked against the closed form.
  FieldElement xi = field.xi();
  for (int64_t i = 0; i < n; ++i) {
    int direct = field.trace(field.pow(xi, i));
    int64_t closed;
    switch (part.class_of[i]) {
      case IndexClass::Zero: closed = fp.e; break;
      case IndexClass::EllK: closed = -fp.e; break;
      case IndexClass::P1_2:
      case IndexClass::P3_2: closed = fp.ell_k1; break;
      case IndexClass::P1_3:
      case IndexClass::P3_3: closed = -fp.ell_k1; break;
      default: closed = 0; break;
    }
    closed %= p;
    if (closed < 0) closed += p;
    if (direct != closed)
      throw InternalInconsistencyError("trace of xi^" + std::to_string(i) +
                                       " disagrees with its closed form");
    part.trace_of_xi[i] = direct;
  }
  return part;
}

CongruenceCase classify_u(const FieldParams& params, int64_t u) {
  int64_t p = params.p;
  int64_t ur = ((u % p) + p) % p;
  if (ur == 0) return CongruenceCase::ZeroU;
  int64_t t1 = mulmod(params.ell - 1, params.ell_k1 % p, p);  // phi(ell^k) mod p
  int64_t t2 = params.ell_k1 % p;
  bool c1 = mulmod(ur, ur, p) == mulmod(t1, t1, p);
  bool c2 = mulmod(ur, ur, p) == mulmod(t2, t2, p);
  if (c1 && c2) {
    bool plus = ur == t1;
    // Mixed signs would force ell = 0 mod p, impossible for distinct primes.
    if (plus != (ur == t2))
      throw InternalInconsistencyError("congruence signs disagree between phi(ell^k) and ell^(k-1)");
    return plus ? CongruenceCase::BothPlus : CongruenceCase::BothMinus;
  }
  if (c1) return ur == t1 ? CongruenceCase::PhiOnlyPlus : CongruenceCase::PhiOnlyMinus;
  if (c2) return ur == t2 ? CongruenceCase::EllOnlyPlus : CongruenceCase::EllOnlyMinus;
  return CongruenceCase::Generic;
}

int quadratic_gauss_sign(const FieldParams& params) {
  return (params.p % 4 == 3 && params.e % 4 == 2) ? 1 : -1;
}

int64_t gauss_signed_index(const FieldParams& params, int64_t i) {
  if (quadratic_gauss_sign(params) == 1) return i;
  return (i + params.ell_k) % params.two_ell_k;
}

CycInt weil_sum_bruteforce(const FieldTable& field, FieldElement a, FieldElement b) {
  if (!field.params()) throw Error("weil_sum_bruteforce requires parameter structure");
  int64_t p = field.p(), qm1 = field.q() - 1, N = field.params()->exp_n;
  std::vector<int64_t> counts(p, 0);
  for (int64_t lx = 0; lx < qm1; ++lx) {
    FieldElement x{static_cast<int32_t>(lx)};
    FieldElement xn = field.from_log(mulmod(lx, N, qm1));
    ++counts[field.trace(field.add(field.mul(a, xn), field.mul(b, x)))];
  }
  return CycInt::from_counts(p, counts);
}

CycInt weil_sum_period(const FieldTable& field, FieldElement a) {
  if (!field.params()) throw Error("weil_sum_period requires parameter structure");
  int64_t p = field.p(), n = field.params()->two_ell_k;
  FieldElement xi = field.xi();
  std::vector<int64_t> counts(p, 0);
  FieldElement cur = field.one();
  for (int64_t i = 0; i < n; ++i) {
    ++counts[field.trace(field.mul(a, cur))];
    cur = field.mul(cur, xi);
  }
  return CycInt::from_counts(p, counts);
}

CycInt weil_sum_period_closed(const FieldParams& fp, int64_t a) {
  int64_t p = fp.p;
  CycInt s = CycInt::root(p, fp.e * a) + CycInt::root(p, -fp.e * a);
  s += (CycInt::root(p, fp.ell_k1 * a) + CycInt::root(p, -fp.ell_k1 * a)).scaled(fp.ell - 1);
  s += CycInt::integer(p, fp.two_ell_k - 2 * fp.ell);
  return s;
}

CycInt weil_sum_closed(const FieldTable& field, const PartitionTables& part, int64_t a,
                       FieldElement b) {
  const FieldParams& fp = part.params;
  int64_t p = fp.p;
  CycInt period = weil_sum_period_closed(fp, a);
  if (b.is_zero()) return period.scaled(fp.exp_n);
  int64_t sq = sqrt_q(fp);
  int64_t i_b = field.residue_class(b);
  // The sqrt(q) enters through the quadratic-character Gauss sum, so the
  // additive-character term evaluates at g * a * b^{-n}, g its sign.
  int g = quadratic_gauss_sign(fp);
  CycInt s = CycInt::root(p, g * a * part.trace_of_xi[i_b]).scaled(sq);
  s -= period.scaled(exact_div(sq + 1, fp.two_ell_k));
  return s;
}

CycInt weil_sum_closed(const FieldTable& field, const PartitionTables& part, FieldElement a,
                       FieldElement b) {
  if (!a.is_zero() && !field.in_prime_field(a))
    throw NonPrimeFieldError("closed Weil sum needs a in the prime subfield");
  return weil_sum_closed(field, part, a.is_zero() ? 0 : field.prime_residue(a), b);
}

int64_t w_sum_closed_value(const PartitionTables& part, int64_t u, bool b_zero, int64_t i_b) {
  const FieldParams& fp = part.params;
  int64_t p = fp.p, q = fp.q, L = fp.ell_k, L1 = fp.ell_k1, ell = fp.ell;
  int64_t sq = sqrt_q(fp);
  bool ell_is_one = (ell % p) == 1;
  CongruenceCase cc = classify_u(fp, u);

  // Special sets face the character term of S(z, b), hence the signed index.
  const int64_t j = b_zero ? 0 : gauss_signed_index(fp, i_b);

  if (cc == CongruenceCase::ZeroU) {
    if (b_zero) {
      return ell_is_one ? exact_div(q - 1, L) * ((p - 1) * L - p * ell + p)
                        : exact_div(q - 1, L1) * ((p - 1) * L1 - p);
    }
    int64_t corr = ell_is_one ? p * (ell - 1) * exact_div(sq + 1, L) : p * exact_div(sq + 1, L1);
    bool special = ell_is_one
                       ? part.in_quartet(j)
                       : (j == 0 || j == L || part.in_quartet(j));
    return corr - p + 1 - (special ? p * sq : 0);
  }

  if (b_zero) {
    switch (cc) {
      case CongruenceCase::PhiOnlyPlus:
      case CongruenceCase::PhiOnlyMinus: return exact_div(q - 1, 2 * L) * (p - 2 * L);
      case CongruenceCase::BothPlus:
      case CongruenceCase::BothMinus: return exact_div(q - 1, 2 * L1) * (p - 2 * L1);
      case CongruenceCase::EllOnlyPlus:
      case CongruenceCase::EllOnlyMinus: return exact_div(q - 1, 2 * L) * (p * (ell - 1) - 2 * L);
      default: return 1 - q;
    }
  }

  int64_t corr;
  bool special;
  switch (cc) {
    case CongruenceCase::PhiOnlyPlus:
      corr = p * exact_div(sq + 1, 2 * L);
      special = j == 0;
      break;
    case CongruenceCase::PhiOnlyMinus:
      corr = p * exact_div(sq + 1, 2 * L);
      special = j == L;
      break;
    case CongruenceCase::EllOnlyPlus:
      corr = p * (ell - 1) * exact_div(sq + 1, 2 * L);
      special = part.in_plus_pair(j);
      break;
    case CongruenceCase::EllOnlyMinus:
      corr = p * (ell - 1) * exact_div(sq + 1, 2 * L);
      special = part.in_minus_pair(j);
      break;
    case CongruenceCase::BothPlus:
      corr = p * exact_div(sq + 1, 2 * L1);
      special = j == 0 || part.in_plus_pair(j);
      break;
    case CongruenceCase::BothMinus:
      corr = p * exact_div(sq + 1, 2 * L1);
      special = j == L || part.in_minus_pair(j);
      break;
    default: return 1;
  }
  return 1 - corr + (special ? p * sq : 0);
}

CycInt w_sum(const FieldTable& field, const PartitionTables& part, int64_t u, FieldElement b,
             SumMode mode) {
  int64_t p = field.p();
  if (mode == SumMode::Closed) {
    int64_t i_b = b.is_zero() ? 0 : field.residue_class(b);
    return CycInt::integer(p, w_sum_closed_value(part, u, b.is_zero(), i_b));
  }
  CycInt acc(p);
  for (int64_t z = 1; z < p; ++z) {
    CycInt s = weil_sum_bruteforce(field, field.from_residue(z), b);
    acc += (CycInt::root(p, -u * z) * s);
  }
  return acc;
}

}  // namespace weilcodes
