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

#include "weilcodes/codes.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <string>
#include <utility>

#include "weilcodes/errors.hpp"
#include "weilcodes/numtheory.hpp"
#include "weilcodes/parallel.hpp"
#include "weilcodes/rational.hpp"

namespace weilcodes {

namespace {

// Division that must leave no remainder anywhere in the closed formulas;
// a nonzero remainder means the parameter preconditions were violated.
int64_t ediv(int64_t a, int64_t b) {
  if (b == 0 || a % b != 0)
    throw InternalInconsistencyError("closed form expected " + std::to_string(b) + " | " +
                                     std::to_string(a));
  return a / b;
}

// (p*)^(e/2) with p* = (-1)^((p-1)/2) p; an integer because e is even.
int64_t pstar_half_power(const FieldParams& pr) {
  const int64_t pstar = (pr.p % 4 == 1) ? pr.p : -pr.p;
  return checked_pow(pstar, pr.e / 2);
}

/// Zero-position count for the first construction.  `gamma_unit` says whether
/// gamma is a nonzero prime-field scalar (the only gammas with special
/// behaviour); `i` is the index class of delta and is ignored when
/// `delta_zero`.  Grouping the arguments this way lets the aggregated
/// spectrum reuse the formulas without materializing any field element.
int64_t n1_value(const FieldParams& pr, const PartitionTables& part, CongruenceCase cc,
                 bool gamma_unit, bool delta_zero, int64_t i) {
  const int64_t p = pr.p, ell = pr.ell, q = pr.q;
  const int64_t L = pr.ell_k, L1 = pr.ell_k1;
  const int64_t sq = checked_pow(p, pr.e / 2);
  const int64_t pe1 = checked_pow(p, pr.e - 1);
  const int64_t p2e2 = checked_mul(pe1, pe1);
  const int64_t spike = checked_mul(pe1, sq);  // p^(e-1) sqrt(q)
  // Special sets face the character term of the Weil sums, hence the signed
  // index; j is unused when delta_zero.
  const int64_t j = delta_zero ? 0 : gauss_signed_index(pr, i);

  if (cc == CongruenceCase::ZeroU) {
    if (!gamma_unit) return p2e2 - 1;
    const bool ell1 = ell % p == 1;
    if (delta_zero) {
      const int64_t drop = ell1 ? checked_mul(pe1, (ell - 1) * ediv(q - 1, L))
                                : checked_mul(pe1, ediv(q - 1, L1));
      return checked_mul(p2e2, p) - 1 - drop;
    }
    const int64_t lift = ell1 ? checked_mul(pe1, (ell - 1) * ediv(sq + 1, L))
                              : checked_mul(pe1, ediv(sq + 1, L1));
    const bool special = ell1 ? part.in_quartet(j) : (j == 0 || j == L || part.in_quartet(j));
    // Unlike the u != 0 cases, the special classes sit sqrt(q) _below_ here.
    return p2e2 - 1 + lift - (special ? spike : 0);
  }

  if (!gamma_unit) return p2e2;
  switch (cc) {
    case CongruenceCase::Generic:
      return delta_zero ? 0 : p2e2;
    case CongruenceCase::PhiOnlyPlus:
    case CongruenceCase::PhiOnlyMinus: {
      if (delta_zero) return checked_mul(pe1, ediv(q - 1, 2 * L));
      const bool special = cc == CongruenceCase::PhiOnlyPlus ? j == 0 : j == L;
      return p2e2 - checked_mul(pe1, ediv(sq + 1, 2 * L)) + (special ? spike : 0);
    }
    case CongruenceCase::BothPlus:
    case CongruenceCase::BothMinus: {
      if (delta_zero) return checked_mul(pe1, ediv(q - 1, 2 * L1));
      const bool special = cc == CongruenceCase::BothPlus ? (j == 0 || part.in_plus_pair(j))
                                                          : (j == L || part.in_minus_pair(j));
      return p2e2 - checked_mul(pe1, ediv(sq + 1, 2 * L1)) + (special ? spike : 0);
    }
    case CongruenceCase::EllOnlyPlus:
    case CongruenceCase::EllOnlyMinus: {
      if (delta_zero) return checked_mul(pe1, (ell - 1) * ediv(q - 1, 2 * L));
      const bool special =
          cc == CongruenceCase::EllOnlyPlus ? part.in_plus_pair(j) : part.in_minus_pair(j);
      return p2e2 - checked_mul(pe1, (ell - 1) * ediv(sq + 1, 2 * L)) + (special ? spike : 0);
    }
    default:
      throw InternalInconsistencyError("n1_value: unhandled congruence case");
  }
}

/// Zero-position count for the second construction.  `eta_f` is the
/// prime-field quadratic character of f*(gamma): 0 when f*(gamma) = 0,
/// otherwise +-1.  The per-term fractions are not individually integral, so
/// the bracket is accumulated exactly and scaled by eps (p*)^(e/2) at the end.
int64_t n2_value(const FieldParams& pr, const PartitionTables& part, int eps, int eta_f,
                 bool delta_zero, int64_t i) {
  const int64_t p = pr.p, ell = pr.ell, q = pr.q;
  const int64_t L = pr.ell_k, L1 = pr.ell_k1;
  const int64_t sq = checked_pow(p, pr.e / 2);
  const int64_t S = eps * pstar_half_power(pr);
  const int64_t Q2 = checked_pow(p, 2 * pr.e - 2);
  const bool ell1 = ell % p == 1;
  const bool p1 = p % 4 == 1;
  const Rat base = Rat(q) * (p - 1) / (p * p);  // q(p-1)/p^2
  const Rat mid = Rat(sq) / p;
  // Special sets face the character term of the Weil sums, hence the signed
  // index; j is unused when delta_zero.
  const int64_t j = delta_zero ? 0 : gauss_signed_index(pr, i);

  Rat br(0);
  if (eta_f == 0) {
    if (delta_zero) {
      // gamma != 0 here: the excluded pair (0, 0) never reaches this point.
      br = Rat(q) * (p - 1) / p -
           (ell1 ? Rat(q - 1) * (ell - 1) / L : Rat(q - 1) / L1);
    } else if (ell1) {
      const Rat tail = Rat(ell - 1) * (sq + 1) * (sq - p) / (Rat(p) * L);
      br = (part.in_quartet(j) ? Rat(sq) * (sq - p) * (p - 1) / (p * p) : base) - tail;
    } else {
      const Rat tail = Rat(sq + 1) * (sq - p) / (Rat(p) * L1);
      const bool special = j == 0 || j == L || part.in_quartet(j);
      br = (special ? Rat(sq) * (p - 1) * (sq - p) / (p * p) : base) - tail;
    }
  } else if (delta_zero) {
    if (!p1) {
      br = Rat(0);
    } else if (ell1) {
      br = Rat(eta_f) * (ell - 1) * (q - 1) / (Rat(p) * L);
    } else {
      const int64_t T = quad_char(p, (ell - 1) * L1) + (ell - 1) * quad_char(p, L1);
      br = Rat(eta_f) * T * (q - 1) / (Rat(p) * L);
    }
  } else {
    const int s = eta_f;
    if (ell1 && p1) {
      const Rat tail = Rat(ell - 1) * (sq + 1) * (sq + s) / (Rat(p) * L);
      br = base - tail + (part.in_quartet(j) ? mid * (1 + s) : Rat(0));
    } else if (!ell1 && p1) {
      const int e1t1 = quad_char(p, (ell - 1) * L1);
      const int e1t2 = quad_char(p, L1);
      const int64_t T = e1t1 + (ell - 1) * e1t2;
      const Rat tail = Rat(sq + 1) * (ell * sq + s * T) / (Rat(p) * L);
      if (j == 0 || j == L)
        br = base + mid * (1 + s * e1t1) - tail;
      else if (part.in_quartet(j))
        br = base + mid * (1 + s * e1t2) - tail;
      else
        br = base - tail;
    } else if (ell1 && !p1) {
      const Rat tail = Rat(ell - 1) * (q + sq) / (Rat(p) * L);
      if (part.in_minus_pair(j))
        br = base + mid * (1 + s) - tail;
      else if (part.in_plus_pair(j))
        br = base + mid * (1 - s) - tail;
      else
        br = base - tail;
    } else {
      const int e1t1 = quad_char(p, (ell - 1) * L1);
      const int e1t2 = quad_char(p, L1);
      const Rat tail = Rat(q + sq) / (Rat(p) * L1);
      if (j == 0)
        br = base + mid * (1 - s * e1t1) - tail;
      else if (j == L)
        br = base + mid * (1 + s * e1t1) - tail;
      else if (part.in_minus_pair(j))
        br = base + mid * (1 + s * e1t2) - tail;
      else if (part.in_plus_pair(j))
        br = base + mid * (1 - s * e1t2) - tail;
      else
        br = base - tail;
    }
  }

  const Rat total = Rat(Q2) - Rat(1) + Rat(S) * br;
  if (!total.is_integral())
    throw InternalInconsistencyError("zero-position count is not an integer");
  return total.as_int();
}

WeightDistribution finalize_distribution(std::map<int64_t, int64_t> rows, int64_t n,
                                         const FieldParams& pr) {
  rows[0] += 1;  // the zero codeword, from the excluded pair (0, 0)
  WeightDistribution w;
  w.dist = std::move(rows);
  w.n = n;
  w.dim = 2 * pr.e;
  for (const auto& [wt, freq] : w.dist) {
    if (wt > 0) {
      w.d_min = wt;
      break;
    }
  }
  w.validate(pr);
  return w;
}

void reject_zero_pair(FieldElement gamma, FieldElement delta) {
  if (gamma.is_zero() && delta.is_zero())
    throw Error("(gamma, delta) = (0, 0) does not index a codeword position count");
}

}  // namespace

CodeSpec CodeSpec::du(const FieldParams& params, int64_t u) {
  CodeSpec s;
  s.params_ = params;
  s.u_ = ((u % params.p) + params.p) % params.p;
  return s;
}

CodeSpec CodeSpec::dprime(const FieldParams& params, std::shared_ptr<const BentProfile> profile) {
  if (!profile) throw Error("dprime spec needs a certified profile");
  CodeSpec s;
  s.params_ = params;
  s.profile_ = std::move(profile);
  return s;
}

int64_t CodeSpec::u() const {
  if (!is_du()) throw Error("u() applies to the Du construction only");
  return u_;
}

const BentProfile& CodeSpec::profile() const {
  if (is_du()) throw Error("profile() applies to the Dprime construction only");
  return *profile_;
}

int64_t defining_set_size_closed(const CodeSpec& spec) {
  const FieldParams& pr = spec.params();
  if (spec.is_du()) {
    const int64_t p2e1 = checked_pow(pr.p, 2 * pr.e - 1);
    return spec.u() == 0 ? p2e1 - 1 : p2e1;
  }
  const int64_t S = spec.profile().epsilon * pstar_half_power(pr);
  const bool ell1 = pr.ell % pr.p == 1;
  const Rat inner = Rat(pr.q) * (pr.p - 1) -
                    (ell1 ? Rat(pr.p) * (pr.ell - 1) * (pr.q - 1) / pr.ell_k
                          : Rat(pr.p) * (pr.q - 1) / pr.ell_k1);
  const Rat total = Rat(pr.q) * pr.q / pr.p - Rat(1) + Rat(S) * inner / pr.p;
  if (!total.is_integral())
    throw InternalInconsistencyError("defining set size is not an integer");
  return total.as_int();
}

DefiningSet build_defining_set(const CodeSpec& spec, const FieldTable& field,
                               int64_t pair_ceiling) {
  const FieldParams& pr = spec.params();
  const int64_t q = field.q();
  const int64_t p = field.p();
  if (q != pr.q) throw SizeMismatchError("field size does not match the spec parameters");
  if (pair_ceiling < q || q > pair_ceiling / q)
    throw CeilingExceededError("materializing the defining set needs q^2 = " +
                               std::to_string(q) + "^2 pair checks, above the ceiling of " +
                               std::to_string(pair_ceiling));

  // Both membership predicates split as left(x) + right(y) = const in F_p.
  std::vector<int> left(q), right(q);
  int target;
  if (spec.is_du()) {
    target = static_cast<int>(spec.u());
  } else {
    const BentProfile& prof = spec.profile();
    if (prof.f.size() != static_cast<size_t>(q))
      throw SizeMismatchError("profile value table does not match the field size");
    target = 0;
  }
  for (int64_t r = 0; r < q; ++r) {
    const FieldElement v = field.element_at(r);
    left[r] = spec.is_du() ? field.trace(v) : spec.profile().f[r];
    right[r] = field.trace(field.pow(v, pr.exp_n));
  }

  const int64_t expect = defining_set_size_closed(spec);
  DefiningSet ds{spec, {}};
  ds.pairs.reserve(static_cast<size_t>(expect));
  for (int64_t rx = 0; rx < q; ++rx) {
    const int lx = left[rx];
    for (int64_t ry = rx == 0 ? 1 : 0; ry < q; ++ry) {
      if ((lx + right[ry]) % p == target)
        ds.pairs.emplace_back(static_cast<int32_t>(rx - 1), static_cast<int32_t>(ry - 1));
    }
  }
  if (ds.n() != expect)
    throw SizeMismatchError("enumerated defining set has " + std::to_string(ds.n()) +
                            " pairs, closed form gives " + std::to_string(expect));
  return ds;
}

int64_t codeword_weight_direct(const FieldTable& field, const DefiningSet& ds, FieldElement gamma,
                               FieldElement delta) {
  const int64_t q = field.q();
  const int p = static_cast<int>(field.p());
  // Tr(gamma x + delta y) = Tr(gamma x) + Tr(delta y); tabulate both factors.
  std::vector<int> tg(q), td(q);
  for (int64_t r = 0; r < q; ++r) {
    const FieldElement v = field.element_at(r);
    tg[r] = field.trace(field.mul(gamma, v));
    td[r] = field.trace(field.mul(delta, v));
  }
  int64_t nonzero = 0;
  for (const auto& [lx, ly] : ds.pairs)
    nonzero += (tg[lx + 1] + td[ly + 1]) % p != 0;
  return nonzero;
}

int64_t N1_closed(const CodeSpec& spec, const FieldTable& field, const PartitionTables& part,
                  FieldElement gamma, FieldElement delta) {
  if (!spec.is_du()) throw Error("N1_closed applies to the Du construction only");
  reject_zero_pair(gamma, delta);
  const bool gamma_unit = !gamma.is_zero() && field.in_prime_field(gamma);
  const CongruenceCase cc = classify_u(spec.params(), spec.u());
  const bool dz = delta.is_zero();
  return n1_value(spec.params(), part, cc, gamma_unit, dz, dz ? 0 : field.residue_class(delta));
}

int64_t N2_closed(const CodeSpec& spec, const FieldTable& field, const PartitionTables& part,
                  FieldElement gamma, FieldElement delta) {
  if (spec.is_du()) throw Error("N2_closed applies to the Dprime construction only");
  reject_zero_pair(gamma, delta);
  const BentProfile& prof = spec.profile();
  const int64_t fstar = prof.dual[field.rank_of(gamma)];
  const int eta_f = fstar == 0 ? 0 : quad_char(field.p(), fstar);
  const bool dz = delta.is_zero();
  return n2_value(spec.params(), part, prof.epsilon, eta_f, dz,
                  dz ? 0 : field.residue_class(delta));
}

int64_t zero_count_closed(const CodeSpec& spec, const FieldTable& field,
                          const PartitionTables& part, FieldElement gamma, FieldElement delta) {
  return spec.is_du() ? N1_closed(spec, field, part, gamma, delta)
                      : N2_closed(spec, field, part, gamma, delta);
}

GriesmerResult griesmer_check(int64_t n, int64_t dim, int64_t d, int64_t p) {
  if (n <= 0 || dim <= 0 || d <= 0 || p < 2) throw Error("griesmer_check: inputs must be positive");
  GriesmerResult r;
  int64_t pi = 1;
  for (int64_t i = 0; i < dim; ++i) {
    r.bound = checked_add(r.bound, (d + pi - 1) / pi);
    if (pi > d) {
      r.bound = checked_add(r.bound, dim - i - 1);  // remaining ceilings are all 1
      break;
    }
    pi = checked_mul(pi, p);
  }
  r.meets = n == r.bound;
  return r;
}

void WeightDistribution::validate(const FieldParams& params) const {
  const auto zero = dist.find(0);
  if (zero == dist.end() || zero->second != 1)
    throw InternalInconsistencyError("weight distribution: A_0 != 1");
  int64_t mass = 0, min_w = 0;
  for (const auto& [w, freq] : dist) {
    if (freq <= 0) throw InternalInconsistencyError("weight distribution: empty row kept");
    if (w < 0 || w > n) throw InternalInconsistencyError("weight distribution: weight outside [0, n]");
    mass = checked_add(mass, freq);
    if (w > 0 && min_w == 0) min_w = w;
  }
  if (mass != checked_mul(params.q, params.q))
    throw InternalInconsistencyError("weight distribution: total mass != q^2");
  if (min_w != d_min || d_min <= 0)
    throw InternalInconsistencyError("weight distribution: minimum distance mismatch");
  if (dim != 2 * params.e)
    throw InternalInconsistencyError("weight distribution: dimension != 2e");
}

WeightDistribution weight_distribution(const CodeSpec& spec, const FieldTable& field,
                                       const PartitionTables& part, Method method,
                                       int64_t pair_ceiling) {
  const FieldParams& pr = spec.params();
  const int64_t q = pr.q;
  const int64_t n = defining_set_size_closed(spec);

  std::optional<DefiningSet> ds;
  if (method == Method::Direct) {
    ds = build_defining_set(spec, field, pair_ceiling);
  } else if (pair_ceiling < q || q > pair_ceiling / q) {
    return weight_distribution_closed_aggregated(spec, field, part);
  }

  const int slots = worker_count();
  std::vector<std::map<int64_t, int64_t>> local(slots);
  std::vector<std::exception_ptr> errors(slots);
  parallel_chunks(q, [&](int64_t begin, int64_t end, int chunk) {
    try {
      for (int64_t rg = begin; rg < end; ++rg) {
        const FieldElement gamma = field.element_at(rg);
        for (int64_t rd = rg == 0 ? 1 : 0; rd < q; ++rd) {
          const FieldElement delta = field.element_at(rd);
          const int64_t w = ds ? codeword_weight_direct(field, *ds, gamma, delta)
                               : n - zero_count_closed(spec, field, part, gamma, delta);
          ++local[chunk][w];
        }
      }
    } catch (...) {
      errors[chunk] = std::current_exception();
    }
  });
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);

  std::map<int64_t, int64_t> rows;
  for (const auto& m : local)
    for (const auto& [w, freq] : m) rows[w] += freq;
  return finalize_distribution(std::move(rows), n, pr);
}

WeightDistribution weight_distribution_closed_aggregated(const CodeSpec& spec,
                                                         const FieldTable& field,
                                                         const PartitionTables& part) {
  const FieldParams& pr = spec.params();
  const int64_t q = pr.q, p = pr.p;
  const int64_t per_class = pr.exp_n;  // nonzero deltas in each index class
  const int64_t n = defining_set_size_closed(spec);
  std::map<int64_t, int64_t> rows;
  const auto add = [&rows](int64_t w, int64_t freq) {
    if (freq > 0) rows[w] += freq;
  };

  if (spec.is_du()) {
    const CongruenceCase cc = classify_u(pr, spec.u());
    add(n - n1_value(pr, part, cc, true, true, 0), p - 1);
    for (int64_t i = 0; i < pr.two_ell_k; ++i)
      add(n - n1_value(pr, part, cc, true, false, i), (p - 1) * per_class);
    // All remaining gammas share one count independent of delta; drop the
    // excluded pair (0, 0) from their tally.
    add(n - n1_value(pr, part, cc, false, true, 0), (q - p + 1) * q - 1);
  } else {
    const BentProfile& prof = spec.profile();
    const std::vector<int64_t> counts = dual_level_counts(field, prof);
    int64_t plus = 0, minus = 0;
    for (int64_t c = 1; c < p; ++c)
      (quad_char(p, c) == 1 ? plus : minus) += counts[c];
    const int eps = prof.epsilon;
    add(n - n2_value(pr, part, eps, 0, true, 0), counts[0] - 1);  // gamma != 0 only
    add(n - n2_value(pr, part, eps, 1, true, 0), plus);
    add(n - n2_value(pr, part, eps, -1, true, 0), minus);
    for (int64_t i = 0; i < pr.two_ell_k; ++i) {
      add(n - n2_value(pr, part, eps, 0, false, i), counts[0] * per_class);
      add(n - n2_value(pr, part, eps, 1, false, i), plus * per_class);
      add(n - n2_value(pr, part, eps, -1, false, i), minus * per_class);
    }
  }
  return finalize_distribution(std::move(rows), n, pr);
}

void require_same_distribution(const WeightDistribution& a, const WeightDistribution& b) {
  if (a.n != b.n)
    throw MethodDisagreementError("length " + std::to_string(a.n) + " vs " + std::to_string(b.n));
  if (a.dist == b.dist) return;
  auto ia = a.dist.begin(), ib = b.dist.begin();
  while (ia != a.dist.end() || ib != b.dist.end()) {
    int64_t w, fa = 0, fb = 0;
    if (ib == b.dist.end() || (ia != a.dist.end() && ia->first < ib->first)) {
      w = ia->first, fa = ia->second, ++ia;
    } else if (ia == a.dist.end() || ib->first < ia->first) {
      w = ib->first, fb = ib->second, ++ib;
    } else {
      w = ia->first, fa = ia->second, fb = ib->second, ++ia, ++ib;
    }
    if (fa != fb)
      throw MethodDisagreementError("weight " + std::to_string(w) + ": frequency " +
                                    std::to_string(fa) + " vs " + std::to_string(fb));
  }
  throw InternalInconsistencyError("distributions differ but no differing weight found");
}

void SampleReport::check() const {
  if (mismatches.empty()) return;
  const SampleMismatch& m = mismatches.front();
  throw VerificationFailedError("direct weight " + std::to_string(m.direct) +
                                " != closed weight " + std::to_string(m.closed) +
                                " at logs (" + std::to_string(m.gamma_lg) + ", " +
                                std::to_string(m.delta_lg) + ")");
}

SampleReport sample_verify(const CodeSpec& spec, const FieldTable& field,
                           const PartitionTables& part, const DefiningSet& ds, int64_t samples,
                           uint64_t seed) {
  SampleReport rep;
  rep.seed = seed;
  rep.samples = samples;
  rep.weights.reserve(static_cast<size_t>(samples));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int64_t> rank(0, field.q() - 1);
  const int64_t n = ds.n();
  for (int64_t s = 0; s < samples; ++s) {
    int64_t rg = rank(rng), rd = rank(rng);
    while (rg == 0 && rd == 0) {
      rg = rank(rng);
      rd = rank(rng);
    }
    const FieldElement gamma = field.element_at(rg);
    const FieldElement delta = field.element_at(rd);
    const int64_t direct = codeword_weight_direct(field, ds, gamma, delta);
    const int64_t closed = n - zero_count_closed(spec, field, part, gamma, delta);
    rep.weights.push_back(direct);
    if (direct != closed)
      rep.mismatches.push_back({gamma.lg, delta.lg, direct, closed});
  }
  return rep;
}

}  // namespace weilcodes
