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

#include "weilcodes/bent.hpp"

#include <numeric>

#include "weilcodes/numtheory.hpp"
#include "weilcodes/parallel.hpp"

namespace weilcodes {

const char* family_name(BentFamily f) {
  switch (f) {
    case BentFamily::TraceSquare: return "square";
    case BentFamily::TraceAlphaKasami: return "alphakasami";
    case BentFamily::TraceKasami: return "kasami";
    case BentFamily::TraceCoulter: return "coulter";
  }
  return "?";
}

BentFamily family_from_name(const std::string& name) {
  if (name == "square") return BentFamily::TraceSquare;
  if (name == "alphakasami") return BentFamily::TraceAlphaKasami;
  if (name == "kasami") return BentFamily::TraceKasami;
  if (name == "coulter") return BentFamily::TraceCoulter;
  throw Error("unknown candidate family '" + name + "'");
}

std::vector<uint8_t> candidate_values(const FieldTable& field, const BentCandidate& cand) {
  int64_t q = field.q(), qm1 = q - 1, p = field.p();
  // Values are residues mod p stored in 8 bits; wider primes would wrap
  // silently, so refuse them outright.
  if (p > 255) throw Error("candidate values are 8-bit residues; p > 255 is unsupported");

  // Monomial exponent reduced mod q-1; the trailing alpha factor of
  // TraceAlphaKasami is a log shift of 1.
  int64_t exp_mod, log_shift = 0;
  switch (cand.family) {
    case BentFamily::TraceSquare:
      exp_mod = 2 % qm1;
      break;
    case BentFamily::TraceAlphaKasami:
      log_shift = 1;
      exp_mod = (powmod(p, cand.i, qm1) + 1) % qm1;
      break;
    case BentFamily::TraceKasami:
      exp_mod = (powmod(p, cand.i, qm1) + 1) % qm1;
      break;
    case BentFamily::TraceCoulter: {
      if (p != 3) throw Error("coulter candidates require characteristic 3");
      // (3^i + 1)/2 mod (q-1): halve modulo 2(q-1), where the numerator is even.
      int64_t n = (powmod(3, cand.i, 2 * qm1) + 1) % (2 * qm1);
      exp_mod = (n / 2) % qm1;
      break;
    }
  }

  std::vector<uint8_t> f(q, 0);
  for (int64_t lx = 0; lx < qm1; ++lx) {
    int64_t lg = (mulmod(lx, exp_mod, qm1) + log_shift) % qm1;
    f[lx + 1] = static_cast<uint8_t>(field.trace(field.from_log(lg)));
  }
  return f;
}

CycInt walsh_transform(const FieldTable& field, const std::vector<uint8_t>& f_values,
                       FieldElement lambda) {
  int64_t p = field.p(), q = field.q();
  std::vector<int64_t> counts(p, 0);
  for (int64_t rank = 0; rank < q; ++rank) {
    FieldElement x = field.element_at(rank);
    int64_t r = f_values[rank] - field.trace(field.mul(lambda, x));
    ++counts[((r % p) + p) % p];
  }
  return CycInt::from_counts(p, counts);
}

namespace {

/// Matches v against eps * zeta^j; returns true and fills (eps, j) on success.
bool match_signed_root(const CycInt& v, int& eps, int64_t& j) {
  int64_t p = v.prime();
  for (int s : {1, -1}) {
    for (int64_t e = 0; e < p; ++e) {
      if (v == CycInt::root(p, e).scaled(s)) {
        eps = s;
        j = e;
        return true;
      }
    }
  }
  return false;
}

int64_t homogeneity_degree(const FieldTable& field, const std::vector<uint8_t>& f) {
  int64_t p = field.p(), q = field.q();
  for (int64_t kf = 2; kf <= 2 * (p - 1); kf += 2) {
    if (std::gcd(kf - 1, p - 1) != 1) continue;
    bool ok = true;
    for (int64_t c = 2; c < p && ok; ++c) {
      int64_t ck = powmod(c, kf, p);
      FieldElement ce = field.from_residue(c);
      for (int64_t rank = 1; rank < q; ++rank) {
        FieldElement cx = field.mul(ce, field.element_at(rank));
        if (f[field.rank_of(cx)] != mulmod(ck, f[rank], p)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return kf;
  }
  throw NotHomogeneousError("candidate is not homogeneous of any admissible even degree");
}

}  // namespace

BentProfile extract_profile(const FieldTable& field, const BentCandidate& cand) {
  int64_t p = field.p(), e = field.degree(), q = field.q();
  if (e % 2 != 0) throw Error("profile extraction expects even extension degree");

  BentProfile prof;
  prof.candidate = cand;
  prof.f = candidate_values(field, cand);
  prof.k_f = homogeneity_degree(field, prof.f);

  int64_t p_star = (p % 4 == 1) ? p : -p;
  int64_t magnitude = checked_pow(p_star, e / 2);  // (p*)^(e/2), signed

  prof.dual.assign(q, 0);
  std::vector<int> eps_of(q, 0);
  std::vector<std::string> failure(worker_count() + 1);

  parallel_chunks(q, [&](int64_t begin, int64_t end, int chunk) {
    for (int64_t rank = begin; rank < end; ++rank) {
      CycInt w = walsh_transform(field, prof.f, field.element_at(rank));
      CycInt norm = w * w.conj();
      if (!norm.is_rational() || norm.as_integer() != q) {
        failure[chunk] = "walsh coefficient at rank " + std::to_string(rank) +
                         " has |W|^2 != q";
        return;
      }
      // W = unit * (p*)^(e/2) requires exact divisibility of every coefficient.
      bool exact = true;
      std::vector<int64_t> unit_coeffs(p - 1);
      for (int64_t t = 0; t < p - 1; ++t) {
        int64_t c = w.coeffs()[t];
        if (c % magnitude != 0) {
          exact = false;
          break;
        }
        unit_coeffs[t] = c / magnitude;
      }
      CycInt unit(p);
      if (exact) {
        CycInt rebuilt(p);
        for (int64_t t = 0; t < p - 1; ++t) rebuilt += CycInt::root(p, t).scaled(unit_coeffs[t]);
        unit = rebuilt;
      }
      int eps;
      int64_t dual_val;
      if (!exact || !match_signed_root(unit, eps, dual_val)) {
        failure[chunk] = "walsh coefficient at rank " + std::to_string(rank) +
                         " is not a signed root times (p*)^(e/2)";
        return;
      }
      eps_of[rank] = eps;
      prof.dual[rank] = static_cast<uint8_t>(dual_val);
    }
  });

  for (const auto& msg : failure)
    if (!msg.empty()) {
      // |W|^2 != q is non-bentness; a bad unit part is a regularity failure.
      if (msg.find("|W|^2") != std::string::npos) throw NotBentError(msg);
      throw NotWeaklyRegularError(msg);
    }

  for (int64_t rank = 1; rank < q; ++rank)
    if (eps_of[rank] != eps_of[0])
      throw NotWeaklyRegularError("walsh coefficient signs are not constant");
  prof.epsilon = eps_of[0];
  if (prof.dual[0] != 0) throw NotWeaklyRegularError("dual does not vanish at 0");

  // Dual homogeneity f*(c lambda) = c^2 f*(lambda).
  for (int64_t c = 2; c < p; ++c) {
    int64_t c2 = mulmod(c, c, p);
    FieldElement ce = field.from_residue(c);
    for (int64_t rank = 1; rank < q; ++rank) {
      FieldElement cl = field.mul(ce, field.element_at(rank));
      if (prof.dual[field.rank_of(cl)] != mulmod(c2, prof.dual[rank], p))
        throw DualNotQuadraticError("dual is not homogeneous of degree 2");
    }
  }
  prof.l_f = 2;
  return prof;
}

std::vector<int64_t> dual_level_counts(const FieldTable& field, const BentProfile& profile) {
  int64_t p = field.p(), e = field.degree(), q = field.q();
  std::vector<int64_t> counts(p, 0);
  for (int64_t rank = 0; rank < q; ++rank) ++counts[profile.dual[rank]];

  int64_t p_star = (p % 4 == 1) ? p : -p;
  int64_t mag_over_p = checked_pow(p_star, e / 2) / p;
  int64_t pe1 = checked_pow(p, e - 1);
  int64_t want0 = pe1 + profile.epsilon * (p - 1) * mag_over_p;
  int64_t want_nz = pe1 - profile.epsilon * mag_over_p;
  if (counts[0] != want0)
    throw CountMismatchError("observed dual level count at 0 is " + std::to_string(counts[0]) +
                             ", closed form gives " + std::to_string(want0));
  for (int64_t c = 1; c < p; ++c)
    if (counts[c] != want_nz)
      throw CountMismatchError("observed dual level count at " + std::to_string(c) + " is " +
                               std::to_string(counts[c]) + ", closed form gives " +
                               std::to_string(want_nz));
  return counts;
}

}  // namespace weilcodes
