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

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "weilcodes/field.hpp"
#include "weilcodes/numtheory.hpp"

using namespace weilcodes;

namespace {

// The parameter sets most tests run against; all satisfy the primitive-root
// requirement with q small enough for exhaustive loops.
const std::vector<std::array<int64_t, 3>> kSets = {
    {5, 3, 1}, {3, 5, 1}, {11, 3, 1}, {17, 3, 1}, {3, 7, 1}, {7, 5, 1}, {5, 3, 2}};

}  // namespace

TEST_CASE("validate_params derives the field quantities") {
  FieldParams pr = validate_params(5, 3, 1);
  CHECK(pr.e == 2);
  CHECK(pr.q == 25);
  CHECK(pr.exp_n == 4);
  CHECK(pr.ell_k == 3);
  CHECK(pr.ell_k1 == 1);
  CHECK(pr.two_ell_k == 6);

  pr = validate_params(3, 5, 1);
  CHECK(pr.e == 4);
  CHECK(pr.q == 81);
  CHECK(pr.exp_n == 8);

  pr = validate_params(7, 5, 1);
  CHECK(pr.e == 4);
  CHECK(pr.q == 2401);
  CHECK(pr.exp_n == 240);

  pr = validate_params(3, 7, 1);
  CHECK(pr.e == 6);
  CHECK(pr.q == 729);
  CHECK(pr.exp_n == 52);

  pr = validate_params(5, 3, 2);
  CHECK(pr.e == 6);
  CHECK(pr.q == 15625);
  CHECK(pr.exp_n == 868);
  CHECK(pr.ell_k == 9);
  CHECK(pr.ell_k1 == 3);

  pr = validate_params(11, 3, 1);
  CHECK(pr.e == 2);
  CHECK(pr.q == 121);
  CHECK(pr.exp_n == 20);
}

TEST_CASE("validate_params invariant checks") {
  for (const auto& [p, ell, k] : kSets) {
    FieldParams pr = validate_params(p, ell, k);
    CHECK(pr.e == (ell - 1) * pr.ell_k1);
    CHECK(pr.e % 2 == 0);
    CHECK((pr.q - 1) % pr.two_ell_k == 0);
    CHECK(pr.exp_n * pr.two_ell_k == pr.q - 1);
    CHECK(mult_order(p, pr.two_ell_k) == pr.e);
  }
}

TEST_CASE("validate_params rejects out-of-regime inputs") {
  CHECK_THROWS_AS(validate_params(3, 3, 1), EqualPrimesError);
  CHECK_THROWS_AS(validate_params(5, 5, 1), EqualPrimesError);
  CHECK_THROWS_AS(validate_params(2, 3, 1), EvenInputError);
  CHECK_THROWS_AS(validate_params(5, 2, 1), EvenInputError);
  CHECK_THROWS_AS(validate_params(4, 3, 1), NotPrimeError);
  CHECK_THROWS_AS(validate_params(9, 3, 1), NotPrimeError);
  CHECK_THROWS_AS(validate_params(5, 9, 1), NotPrimeError);
  // p = 1 mod 2 ell^k can never generate the unit group.
  CHECK_THROWS_AS(validate_params(7, 3, 1), NotPrimitiveRootError);
  CHECK_THROWS_AS(validate_params(13, 3, 1), NotPrimitiveRootError);
  CHECK_THROWS_AS(validate_params(313, 3, 1), NotPrimitiveRootError);
  CHECK_THROWS_AS(validate_params(3, 5, 2), OverflowError);       // q = 3^20
  CHECK_THROWS_AS(validate_params(5, 3, 2, 10000), OverflowError);
  CHECK_THROWS_AS(validate_params(5, 3, 0), Error);
  CHECK_THROWS_AS(validate_params(5, 0, 1), Error);
}

TEST_CASE("modulus selection is the canonical primitive polynomial") {
  // For p = 5, degree 2, the coefficient order (c1, c0) visits x^2 + 1,
  // x^2 + 2, x^2 + 3, x^2 + 4, x^2 + x, x^2 + x + 1 before reaching the
  // first primitive polynomial x^2 + x + 2 (orders 8, 8, 8, split, split, 3).
  FieldTable f = build_field(validate_params(5, 3, 1));
  CHECK(f.modulus() == std::vector<int32_t>{2, 1});

  // Rebuilding yields the identical table set.
  FieldTable g = build_field(validate_params(5, 3, 1));
  CHECK(g.modulus() == f.modulus());
  for (int64_t r = 0; r < f.q(); ++r)
    CHECK(f.packed_of(f.element_at(r)) == g.packed_of(g.element_at(r)));

  // poly_index skips past the canonical choice and still yields a field of
  // the same size with the same prime-subfield behaviour.
  FieldTable h(5, 2, int64_t{1} << 31, 1);
  CHECK(h.modulus() != f.modulus());
  CHECK(h.q() == 25);
  CHECK(h.trace(h.one()) == 2);
}

TEST_CASE("table construction respects the size ceiling") {
  FieldParams pr = validate_params(5, 3, 2);
  CHECK_THROWS_AS(FieldTable(pr, 10000), OverflowError);
}

TEST_CASE("field arithmetic satisfies the ring axioms") {
  for (const auto& [p, ell, k] : kSets) {
    FieldTable f = build_field(validate_params(p, ell, k));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int64_t> pick(0, f.q() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      FieldElement a = f.element_at(pick(rng));
      FieldElement b = f.element_at(pick(rng));
      FieldElement c = f.element_at(pick(rng));
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      CHECK(f.mul(a, f.one()) == a);
      CHECK(f.mul(a, f.zero()) == f.zero());
      if (!a.is_zero()) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.pow(a, f.q() - 1) == f.one());
        CHECK(f.pow(a, -3) == f.inv(f.pow(a, 3)));
      }
    }
    CHECK_THROWS_AS(f.inv(f.zero()), ZeroElementError);
  }
}

TEST_CASE("pow matches repeated multiplication") {
  FieldTable f = build_field(validate_params(3, 5, 1));
  for (int64_t r = 0; r < f.q(); ++r) {
    FieldElement a = f.element_at(r);
    FieldElement acc = f.one();
    for (int64_t n = 0; n <= 12; ++n) {
      if (n > 0 || !a.is_zero()) CHECK(f.pow(a, n) == acc);
      acc = f.mul(acc, a);
    }
  }
}

TEST_CASE("prime subfield embedding round trips") {
  for (const auto& [p, ell, k] : kSets) {
    FieldTable f = build_field(validate_params(p, ell, k));
    for (int64_t z = 0; z < p; ++z) {
      FieldElement a = f.from_residue(z);
      CHECK(f.in_prime_field(a));
      CHECK(f.prime_residue(a) == z);
      // Addition in the subfield is addition of residues.
      CHECK(f.add(a, f.one()) == f.from_residue((z + 1) % p));
    }
    if (f.q() > f.p()) CHECK_FALSE(f.in_prime_field(f.alpha()));
  }
}

TEST_CASE("packed and rank encodings are bijective") {
  FieldTable f = build_field(validate_params(5, 3, 1));
  std::vector<bool> seen(f.q(), false);
  for (int64_t r = 0; r < f.q(); ++r) {
    FieldElement a = f.element_at(r);
    CHECK(f.rank_of(a) == r);
    int64_t v = f.packed_of(a);
    CHECK(v >= 0);
    CHECK(v < f.q());
    CHECK_FALSE(seen[v]);
    seen[v] = true;
    CHECK(f.from_packed(v) == a);
  }
}

TEST_CASE("trace is the F_p-linear Frobenius-stable form") {
  FieldTable f51 = build_field(validate_params(5, 3, 1));
  CHECK(f51.trace(f51.one()) == 2);
  CHECK(f51.trace(f51.from_residue(4)) == 3);

  for (const auto& [p, ell, k] : kSets) {
    FieldParams pr = validate_params(p, ell, k);
    FieldTable f = build_field(pr);
    CHECK(f.trace(f.one()) == pr.e % p);
    CHECK(f.trace(f.zero()) == 0);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int64_t> pick(0, f.q() - 1);
    std::vector<int64_t> hits(p, 0);
    for (int64_t r = 0; r < f.q(); ++r) hits[f.trace(f.element_at(r))]++;
    for (int64_t c = 0; c < p; ++c) CHECK(hits[c] == f.q() / p);  // balanced fibers

    for (int trial = 0; trial < 100; ++trial) {
      FieldElement a = f.element_at(pick(rng));
      FieldElement b = f.element_at(pick(rng));
      CHECK(f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % p);
      CHECK(f.trace(f.pow(a, p)) == f.trace(a));
      int64_t z = 1 + trial % (p - 1);
      CHECK(f.trace(f.mul(f.from_residue(z), a)) == z * f.trace(a) % p);
    }
  }
}

TEST_CASE("xi has multiplicative order exactly 2 ell^k") {
  for (const auto& [p, ell, k] : kSets) {
    FieldParams pr = validate_params(p, ell, k);
    FieldTable f = build_field(pr);
    FieldElement xi = f.xi();
    CHECK(xi == f.pow(f.alpha(), pr.exp_n));
    CHECK(f.pow(xi, pr.two_ell_k) == f.one());
    for (int64_t d = 1; d < pr.two_ell_k; ++d)
      if (pr.two_ell_k % d == 0) CHECK(f.pow(xi, d) != f.one());
    // xi^(ell^k) = -1, the unique element of order 2.
    CHECK(f.pow(xi, pr.ell_k) == f.neg(f.one()));
  }
}

TEST_CASE("powers of xi span the field over F_p") {
  for (const auto& [p, ell, k] : kSets) {
    FieldParams pr = validate_params(p, ell, k);
    FieldTable f = build_field(pr);
    // Row-reduce the coordinate vectors of xi^1 .. xi^e.
    std::vector<std::vector<int64_t>> rows;
    for (int64_t i = 1; i <= pr.e; ++i) {
      int64_t v = f.packed_of(f.pow(f.xi(), i));
      std::vector<int64_t> row(pr.e);
      for (int64_t j = 0; j < pr.e; ++j, v /= p) row[j] = v % p;
      rows.push_back(std::move(row));
    }
    int64_t rank = 0;
    for (int64_t col = 0; col < pr.e; ++col) {
      int64_t pivot = -1;
      for (int64_t r = rank; r < pr.e; ++r)
        if (rows[r][col] != 0) { pivot = r; break; }
      if (pivot < 0) continue;
      std::swap(rows[rank], rows[pivot]);
      int64_t inv = powmod(rows[rank][col], p - 2, p);
      for (auto& x : rows[rank]) x = x * inv % p;
      for (int64_t r = 0; r < pr.e; ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        int64_t m = rows[r][col];
        for (int64_t j = 0; j < pr.e; ++j)
          rows[r][j] = ((rows[r][j] - m * rows[rank][j]) % p + p) % p;
      }
      ++rank;
    }
    CHECK(rank == pr.e);
  }
}

TEST_CASE("residue_class indexes cosets of the 2 ell^k-th power residues") {
  for (const auto& [p, ell, k] : kSets) {
    FieldParams pr = validate_params(p, ell, k);
    FieldTable f = build_field(pr);
    CHECK(f.residue_class(f.one()) == 0);
    CHECK(f.residue_class(f.alpha()) == pr.two_ell_k - 1);
    CHECK_THROWS_AS(f.residue_class(f.zero()), ZeroElementError);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int64_t> pick(1, f.q() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      FieldElement b = f.element_at(pick(rng));
      int64_t i = f.residue_class(b);
      CHECK(i >= 0);
      CHECK(i < pr.two_ell_k);
      // The defining property: b^(-N) lands on xi^i.
      CHECK(f.pow(b, -pr.exp_n) == f.pow(f.xi(), i));
    }
  }
  // Worked instance: xi = alpha^4 at q = 25, so its class is -4 mod 6 = 2.
  FieldTable f = build_field(validate_params(5, 3, 1));
  CHECK(f.residue_class(f.xi()) == 2);
}

TEST_CASE("prime-field residues of nonzero classes partition evenly") {
  FieldParams pr = validate_params(3, 5, 1);
  FieldTable f = build_field(pr);
  std::vector<int64_t> per_class(pr.two_ell_k, 0);
  for (int64_t lg = 0; lg < f.q() - 1; ++lg) per_class[f.residue_class(f.from_log(lg))]++;
  for (int64_t i = 0; i < pr.two_ell_k; ++i) CHECK(per_class[i] == pr.exp_n);
}

TEST_CASE("generic tables carry no parameter structure") {
  FieldTable f(5, 2);
  CHECK(f.q() == 25);
  CHECK_FALSE(f.params().has_value());
  CHECK_THROWS_AS(f.xi(), Error);
  CHECK_THROWS_AS(f.residue_class(f.one()), Error);
}

TEST_CASE("quad_char is the multiplicative square indicator") {
  for (int64_t p : {3, 5, 7, 11, 13, 17}) {
    CHECK(quad_char(p, 0) == 0);
    int64_t squares = 0;
    for (int64_t a = 1; a < p; ++a) {
      for (int64_t b = 1; b < p; ++b)
        CHECK(quad_char(p, a * b) == quad_char(p, a) * quad_char(p, b));
      CHECK(quad_char(p, a * a) == 1);
      if (quad_char(p, a) == 1) ++squares;
    }
    CHECK(squares == (p - 1) / 2);
  }
}
