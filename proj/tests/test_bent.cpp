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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "weilcodes/bent.hpp"
#include "weilcodes/cyclotomic.hpp"
#include "weilcodes/field.hpp"
#include "weilcodes/numtheory.hpp"

using namespace weilcodes;

namespace {

int64_t sqrt_q_signed(const FieldTable& f) {
  int64_t p_star = f.p() % 4 == 1 ? f.p() : -f.p();
  return checked_pow(p_star, f.degree() / 2);
}

void check_profile(const FieldTable& f, BentCandidate cand, int eps,
                   const std::vector<int64_t>& levels) {
  BentProfile prof = extract_profile(f, cand);
  CHECK(prof.epsilon == eps);
  CHECK(prof.k_f == 2);
  CHECK(prof.l_f == 2);
  CHECK(prof.f == candidate_values(f, cand));
  CHECK(prof.f[0] == 0);
  CHECK(prof.dual[0] == 0);
  CHECK(dual_level_counts(f, prof) == levels);

  int64_t total = 0;
  for (int64_t n : levels) total += n;
  CHECK(total == f.q());

  // Both f and its dual scale quadratically along F_p^* lines.
  for (int64_t c = 2; c < f.p(); ++c) {
    FieldElement cf = f.from_residue(c);
    for (int64_t rank = 0; rank < f.q(); ++rank) {
      FieldElement x = f.element_at(rank);
      int64_t cx = f.rank_of(f.mul(cf, x));
      CHECK(prof.f[cx] == c * c % f.p() * prof.f[rank] % f.p());
      CHECK(prof.dual[cx] == c * c % f.p() * prof.dual[rank] % f.p());
    }
  }
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (BentFamily fam : {BentFamily::TraceSquare, BentFamily::TraceAlphaKasami,
                         BentFamily::TraceKasami, BentFamily::TraceCoulter})
    CHECK(family_from_name(family_name(fam)) == fam);
  CHECK(family_from_name("square") == BentFamily::TraceSquare);
  CHECK(family_from_name("alphakasami") == BentFamily::TraceAlphaKasami);
  CHECK(family_from_name("kasami") == BentFamily::TraceKasami);
  CHECK(family_from_name("coulter") == BentFamily::TraceCoulter);
  CHECK_THROWS_AS(family_from_name("quadratic"), Error);
  CHECK_THROWS_AS(family_from_name(""), Error);
}

TEST_CASE("candidate values evaluate the catalog formulas") {
  FieldTable f = build_field(validate_params(5, 3, 1));
  std::vector<uint8_t> square = candidate_values(f, {BentFamily::TraceSquare});
  std::vector<uint8_t> kasami2 = candidate_values(f, {BentFamily::TraceKasami, 2});
  std::vector<uint8_t> akasami2 = candidate_values(f, {BentFamily::TraceAlphaKasami, 2});
  int64_t kas_exp = checked_pow(5, 2) + 1;
  for (int64_t rank = 0; rank < f.q(); ++rank) {
    FieldElement x = f.element_at(rank);
    CHECK(square[rank] == f.trace(f.mul(x, x)));
    if (!x.is_zero()) {
      CHECK(kasami2[rank] == f.trace(f.pow(x, kas_exp)));
      CHECK(akasami2[rank] == f.trace(f.mul(f.alpha(), f.pow(x, kas_exp))));
    }
  }
  CHECK(square[0] == 0);
  CHECK(kasami2[0] == 0);
  CHECK(akasami2[0] == 0);

  FieldTable f81 = build_field(validate_params(3, 5, 1));
  std::vector<uint8_t> coulter5 = candidate_values(f81, {BentFamily::TraceCoulter, 5});
  for (int64_t rank = 1; rank < f81.q(); ++rank)
    CHECK(coulter5[rank] == f81.trace(f81.pow(f81.element_at(rank), 122)));
  CHECK(coulter5[0] == 0);
}

TEST_CASE("Walsh transform at fixed points") {
  FieldTable f = build_field(validate_params(5, 3, 1));
  std::vector<uint8_t> square = candidate_values(f, {BentFamily::TraceSquare});
  CHECK(walsh_transform(f, square, f.zero()) == CycInt::integer(5, -5));

  // Summing W over all lambda collapses the lambda-character to q delta_0,
  // leaving q zeta^f(0) = q.
  CycInt total(5);
  for (int64_t rank = 0; rank < f.q(); ++rank)
    total += walsh_transform(f, square, f.element_at(rank));
  CHECK(total == CycInt::integer(5, 25));
}

TEST_CASE("certified profiles across the catalog") {
  using BF = BentFamily;
  {
    FieldTable f = build_field(validate_params(5, 3, 1));
    check_profile(f, {BF::TraceSquare}, -1, {1, 6, 6, 6, 6});
    check_profile(f, {BF::TraceAlphaKasami, 2}, +1, {9, 4, 4, 4, 4});
    check_profile(f, {BF::TraceKasami, 2}, -1, {1, 6, 6, 6, 6});
    check_profile(f, {BF::TraceAlphaKasami, 1}, -1, {1, 6, 6, 6, 6});
    check_profile(f, {BF::TraceKasami, 1}, -1, {1, 6, 6, 6, 6});
  }
  {
    FieldTable f = build_field(validate_params(3, 5, 1));
    check_profile(f, {BF::TraceSquare}, -1, {21, 30, 30});
    check_profile(f, {BF::TraceAlphaKasami, 2}, -1, {21, 30, 30});
    check_profile(f, {BF::TraceKasami, 2}, -1, {21, 30, 30});
    check_profile(f, {BF::TraceCoulter, 5}, -1, {21, 30, 30});
    check_profile(f, {BF::TraceCoulter, 3}, -1, {21, 30, 30});
  }
  {
    FieldTable f = build_field(validate_params(3, 7, 1));
    check_profile(f, {BF::TraceSquare}, -1, {261, 234, 234});
    check_profile(f, {BF::TraceAlphaKasami, 2}, +1, {225, 252, 252});
    check_profile(f, {BF::TraceKasami, 2}, -1, {261, 234, 234});
    check_profile(f, {BF::TraceCoulter, 5}, -1, {261, 234, 234});
    check_profile(f, {BF::TraceCoulter, 1}, -1, {261, 234, 234});
  }
  {
    FieldTable f = build_field(validate_params(7, 5, 1));
    check_profile(f, {BF::TraceSquare}, -1, {301, 350, 350, 350, 350, 350, 350});
    check_profile(f, {BF::TraceAlphaKasami, 2}, -1, {301, 350, 350, 350, 350, 350, 350});
    check_profile(f, {BF::TraceKasami, 2}, -1, {301, 350, 350, 350, 350, 350, 350});
    check_profile(f, {BF::TraceAlphaKasami, 1}, +1, {385, 336, 336, 336, 336, 336, 336});
  }
  {
    FieldTable f = build_field(validate_params(11, 3, 1));
    check_profile(f, {BF::TraceSquare}, -1, {21, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10});
    check_profile(f, {BF::TraceAlphaKasami, 2}, +1, {1, 12, 12, 12, 12, 12, 12, 12, 12, 12, 12});
    check_profile(f, {BF::TraceKasami, 2}, -1, {21, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10});
  }
  {
    FieldTable f = build_field(validate_params(5, 3, 2));
    check_profile(f, {BF::TraceSquare}, -1, {3025, 3150, 3150, 3150, 3150});
  }
}

TEST_CASE("Walsh coefficients have magnitude sqrt(q) and the certified shape") {
  struct Point {
    int64_t p, ell, k;
    BentCandidate cand;
  };
  const std::vector<Point> points{{3, 7, 1, {BentFamily::TraceSquare}},
                                  {5, 3, 1, {BentFamily::TraceAlphaKasami, 2}},
                                  {5, 3, 1, {BentFamily::TraceKasami, 2}},
                                  {3, 5, 1, {BentFamily::TraceCoulter, 5}}};
  for (const Point& pt : points) {
    CAPTURE(pt.p);
    CAPTURE(pt.ell);
    FieldTable f = build_field(validate_params(pt.p, pt.ell, pt.k));
    BentProfile prof = extract_profile(f, pt.cand);
    std::vector<uint8_t> values = candidate_values(f, pt.cand);
    int64_t unit = prof.epsilon * sqrt_q_signed(f);
    for (int64_t rank = 0; rank < f.q(); ++rank) {
      FieldElement lambda = f.element_at(rank);
      CycInt w = walsh_transform(f, values, lambda);
      CHECK(w * w.conj() == CycInt::integer(f.p(), f.q()));
      CHECK(w == CycInt::root(f.p(), prof.dual[rank]).scaled(unit));
    }
  }
}

TEST_CASE("level counts follow the closed form") {
  FieldTable f = build_field(validate_params(3, 7, 1));
  BentProfile prof = extract_profile(f, {BentFamily::TraceSquare});
  std::vector<int64_t> levels = dual_level_counts(f, prof);
  int64_t s = prof.epsilon * sqrt_q_signed(f);
  CHECK(levels[0] == checked_pow(3, 5) + (3 - 1) * s / 3);
  for (int64_t c = 1; c < 3; ++c) CHECK(levels[c] == checked_pow(3, 5) - s / 3);
}

TEST_CASE("non-bent and malformed candidates are rejected") {
  {
    FieldTable f = build_field(validate_params(3, 5, 1));
    CHECK_THROWS_AS(extract_profile(f, {BentFamily::TraceKasami, 1}), NotBentError);
    CHECK_THROWS_AS(extract_profile(f, {BentFamily::TraceCoulter, 2}), NotHomogeneousError);
    CHECK_THROWS_AS(extract_profile(f, {BentFamily::TraceCoulter, 4}), NotHomogeneousError);
  }
  {
    FieldTable f = build_field(validate_params(7, 5, 1));
    CHECK_THROWS_AS(extract_profile(f, {BentFamily::TraceKasami, 1}), NotBentError);
  }
  {
    FieldTable f = build_field(validate_params(3, 7, 1));
    CHECK_THROWS_AS(extract_profile(f, {BentFamily::TraceCoulter, 3}), NotBentError);
    CHECK_THROWS_AS(extract_profile(f, {BentFamily::TraceCoulter, 2}), NotHomogeneousError);
  }
  {
    // Candidate values are 8-bit residues; a prime above 255 would wrap.
    FieldTable wide(257, 1);
    CHECK_THROWS_AS(candidate_values(wide, {BentFamily::TraceSquare}), Error);
  }
  {
    FieldTable f = build_field(validate_params(5, 3, 1));
    CHECK_THROWS_AS(candidate_values(f, {BentFamily::TraceCoulter, 1}), Error);
    try {
      candidate_values(f, {BentFamily::TraceCoulter, 1});
    } catch (const Error& err) {
      CHECK(std::string(err.what()).find("characteristic 3") != std::string::npos);
    }
  }
}
