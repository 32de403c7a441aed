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

#include "weilcodes/predict.hpp"

#include <map>
#include <utility>

#include "weilcodes/charsum.hpp"
#include "weilcodes/errors.hpp"
#include "weilcodes/numtheory.hpp"
#include "weilcodes/rational.hpp"

namespace weilcodes {

namespace {

void push_row(CaseTable& t, const Rat& weight, const Rat& frequency) {
  if (!weight.is_integral() || !frequency.is_integral())
    throw NonIntegerEntryError("case table entry for " + t.id + " is not an integer");
  const int64_t f = frequency.as_int();
  if (f < 0)
    throw NonIntegerEntryError("case table entry for " + t.id + " has a negative frequency");
  t.rows.push_back({weight.as_int(), f});
}

}  // namespace

CaseTable du_case_table(const FieldParams& pr, int64_t u) {
  const int64_t p = pr.p, ell = pr.ell, q = pr.q, e = pr.e;
  const int64_t L = pr.ell_k, L1 = pr.ell_k1;
  const int64_t sq = checked_pow(p, e / 2);
  const Rat pe1 = Rat(checked_pow(p, e - 1));
  const Rat high = pe1 * checked_pow(p, e - 1) * p;  // p^(2e-1)
  const Rat bulk = pe1 * checked_pow(p, e - 1) * (p - 1);  // p^(2e-2)(p-1)

  CaseTable t;
  const CongruenceCase cc = classify_u(pr, ((u % p) + p) % p);
  switch (cc) {
    case CongruenceCase::ZeroU: {
      const bool ell1 = ell % p == 1;
      t.id = ell1 ? "du_u0_ell1" : "du_u0_ell_not1";
      // The two branches differ only in this share of each index period.
      const Rat unit = ell1 ? Rat(ell - 1) / L : Rat(1) / L1;
      push_row(t, pe1 * unit * (q - 1), Rat(p - 1));
      push_row(t, bulk + pe1 * (Rat(sq) - unit * (sq + 1)), Rat(p - 1) * unit * (q - 1));
      push_row(t, bulk - pe1 * unit * (sq + 1), Rat(p - 1) * (Rat(1) - unit) * (q - 1));
      push_row(t, bulk, Rat(q - 1) + Rat(q - p) * q);
      return t;
    }
    case CongruenceCase::Generic:
      t.id = "du_generic";
      push_row(t, high, Rat(p - 1));
      push_row(t, bulk, Rat(q) * q - p);
      return t;
    default:
      break;
  }

  Rat unit(0);
  if (cc == CongruenceCase::PhiOnlyPlus || cc == CongruenceCase::PhiOnlyMinus) {
    t.id = "du_phi_only";
    unit = Rat(1) / (2 * L);
  } else if (cc == CongruenceCase::BothPlus || cc == CongruenceCase::BothMinus) {
    t.id = "du_both";
    unit = Rat(1) / (2 * L1);
  } else {
    t.id = "du_ell_only";
    unit = Rat(ell - 1) / (2 * L);
  }
  push_row(t, high - pe1 * unit * (q - 1), Rat(p - 1));
  push_row(t, bulk - pe1 * sq + pe1 * unit * (sq + 1), Rat(p - 1) * unit * (q - 1));
  push_row(t, bulk + pe1 * unit * (sq + 1), Rat(p - 1) * (Rat(1) - unit) * (q - 1));
  push_row(t, bulk, Rat(q - 1) + Rat(q) * (q - p));
  return t;
}

CaseTable dprime_case_table(const FieldParams& pr, int eps) {
  if (eps != 1 && eps != -1) throw Error("dprime case table needs eps = +1 or -1");
  const int64_t p = pr.p, ell = pr.ell, q = pr.q, e = pr.e;
  const int64_t L = pr.ell_k, L1 = pr.ell_k1;
  const int64_t sq = checked_pow(p, e / 2);
  const int64_t pstar = p % 4 == 1 ? p : -p;
  const Rat S = Rat(eps) * checked_pow(pstar, e / 2);
  const Rat share = S / p;
  // Occurrence counts of dual values: A0 many gammas with f*(gamma) = 0
  // (including gamma = 0), A1 many with f*(gamma) = c for each fixed c != 0.
  const Rat A0 = Rat(checked_pow(p, e - 1)) + Rat(p - 1) * share;
  const Rat A1 = Rat(checked_pow(p, e - 1)) - share;
  const Rat w0 = Rat(q) * q * (p - 1) / (p * p);
  const Rat narrow = Rat(q) * (p - 1) * (p - 1) / (p * p);  // q(p-1)^2/p^2
  const Rat wide = Rat(q) * (p - 1) / p;                    // q(p-1)/p
  const bool ell1 = ell % p == 1, p1 = p % 4 == 1;

  CaseTable t;
  if (ell1) {
    t.id = p1 ? "dprime_ell1_p1mod4" : "dprime_ell1_p3mod4";
    push_row(t, w0, A0 - 1);
    push_row(t, w0 + S * (narrow + Rat(sq) * (p - 1) / p - Rat(ell - 1) * (q + sq) * (p - 1) / (Rat(p) * L)),
             Rat(q - 1) * (ell - 1) / L * A0);
    push_row(t, w0 + S * (narrow - Rat(ell - 1) * (q + sq) * (p - 1) / (Rat(p) * L)),
             Rat(q - 1) * (L - ell + 1) / L * A0);
    if (p1) {
      push_row(t, w0 + S * (wide - Rat(ell - 1) * (q - 1) * (p + 1) / (Rat(p) * L)),
               Rat(p - 1) / 2 * A1);
      push_row(t, w0 + S * (wide - Rat(ell - 1) * (q - 1) * (p - 1) / (Rat(p) * L)),
               Rat(p - 1) / 2 * A1);
      const Rat steep = Rat(ell - 1) * (sq + 1) * (Rat(sq) * (p - 1) - (p + 1)) / (Rat(p) * L);
      push_row(t, w0 + S * (narrow - Rat(2) * sq / p - steep),
               Rat(q - 1) * (ell - 1) * (p - 1) / (2 * L) * A1);
      push_row(t, w0 + S * (narrow - steep), Rat(q - 1) * (L - ell + 1) * (p - 1) / (2 * L) * A1);
      push_row(t, w0 + S * (narrow - Rat(ell - 1) * (q - 1) * (p - 1) / (Rat(p) * L)),
               Rat(p - 1) * (q - 1) / 2 * A1);
    } else {
      push_row(t, w0 + S * (wide - Rat(ell - 1) * (q - 1) / L), Rat(p - 1) * A1);
      const Rat steep = Rat(ell - 1) * (sq + 1) * (Rat(sq) * (p - 1) - p) / (Rat(p) * L);
      push_row(t, w0 + S * (narrow - Rat(2) * sq / p - steep),
               Rat(q - 1) * (ell - 1) * (p - 1) / (2 * L) * A1);
      push_row(t, w0 + S * (narrow - steep),
               Rat(q - 1) * (2 * L - ell + 1) * (p - 1) / (2 * L) * A1);
    }
    return t;
  }

  push_row(t, w0, A0 - 1);
  push_row(t, w0 + S * (narrow + Rat(sq) * (p - 1) / p - Rat(q + sq) * (p - 1) / (Rat(p) * L1)),
           Rat(q - 1) / L1 * A0);
  push_row(t, w0 + S * (narrow - Rat(q + sq) * (p - 1) / (Rat(p) * L1)),
           Rat(q - 1) * (L1 - 1) / L1 * A0);
  if (p1) {
    const int et1 = quad_char(p, (ell - 1) * L1);
    const int64_t T = et1 + (ell - 1) * quad_char(p, L1);
    push_row(t, w0 + S * (wide - Rat(q - 1) * (p * ell + T) / (Rat(p) * L)), Rat(p - 1) / 2 * A1);
    push_row(t, w0 + S * (wide - Rat(q - 1) * (p * ell - T) / (Rat(p) * L)), Rat(p - 1) / 2 * A1);
    const Rat common = narrow - Rat(q - 1) / L1;
    const Rat plus_t = Rat(sq + 1) * (Rat(ell) * sq + et1 * T) / (Rat(p) * L);
    const Rat minus_t = Rat(sq + 1) * (Rat(ell) * sq - et1 * T) / (Rat(p) * L);
    if (et1 == quad_char(p, L1)) {
      t.id = "dprime_ell_not1_p1mod4_same_sign";
      push_row(t, w0 + S * (common - Rat(2) * sq / p + plus_t),
               Rat(q - 1) * (p - 1) / (2 * L1) * A1);
      push_row(t, w0 + S * (common + minus_t), Rat(p - 1) * (q - 1) / 2 * A1);
      push_row(t, w0 + S * (common + plus_t), Rat(p - 1) * (q - 1) * (L1 - 1) / (2 * L1) * A1);
    } else {
      t.id = "dprime_ell_not1_p1mod4_opp_sign";
      push_row(t, w0 + S * (common - Rat(2) * sq / p + plus_t),
               Rat(q - 1) * (p - 1) / (2 * L) * A1);
      push_row(t, w0 + S * (common + plus_t), Rat(q - 1) * (p - 1) * (L - 1) / (2 * L) * A1);
      push_row(t, w0 + S * (common - Rat(2) * sq / p + minus_t),
               Rat(q - 1) * (p - 1) * (ell - 1) / (2 * L) * A1);
      push_row(t, w0 + S * (common + minus_t),
               Rat(q - 1) * (p - 1) * (L - ell + 1) / (2 * L) * A1);
    }
  } else {
    t.id = "dprime_ell_not1_p3mod4";
    push_row(t, w0 + S * (wide - Rat(q - 1) / L1), Rat(p - 1) * A1);
    const Rat steep = Rat(sq + 1) * (Rat(sq) * (p - 1) - p) / (Rat(p) * L1);
    push_row(t, w0 + S * (narrow - Rat(2) * sq / p - steep),
             Rat(q - 1) * (p - 1) / (2 * L1) * A1);
    push_row(t, w0 + S * (narrow - steep), Rat(q - 1) * (p - 1) * (2 * L1 - 1) / (2 * L1) * A1);
  }
  return t;
}

Prediction predict_distribution(const CodeSpec& spec) {
  const FieldParams& pr = spec.params();
  CaseTable table = spec.is_du() ? du_case_table(pr, spec.u())
                                 : dprime_case_table(pr, spec.profile().epsilon);
  std::map<int64_t, int64_t> rows;
  for (const PredictRow& r : table.rows)
    if (r.frequency > 0) rows[r.weight] += r.frequency;
  rows[0] += 1;

  Prediction out;
  out.table = std::move(table.id);
  out.dist.dist = std::move(rows);
  out.dist.n = defining_set_size_closed(spec);
  out.dist.dim = 2 * pr.e;
  for (const auto& [w, freq] : out.dist.dist) {
    if (w > 0) {
      out.dist.d_min = w;
      break;
    }
  }
  out.dist.validate(pr);
  return out;
}

}  // namespace weilcodes
