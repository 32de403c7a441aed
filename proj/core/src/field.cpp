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

#include "weilcodes/field.hpp"

#include <numeric>
#include <string>

#include "weilcodes/numtheory.hpp"

namespace weilcodes {

namespace {

/// Arithmetic in F_p[x]/(f) on dense coefficient vectors, used only while
/// searching for the primitive modulus and building the tables.
struct PolyMod {
  int64_t p;
  std::vector<int32_t> f;  // c_0..c_{m-1} of monic x^m + ...

  std::vector<int32_t> one() const {
    std::vector<int32_t> r(f.size(), 0);
    r[0] = 1;
    return r;
  }

  std::vector<int32_t> mul(const std::vector<int32_t>& a, const std::vector<int32_t>& b) const {
    size_t m = f.size();
    std::vector<int64_t> prod(2 * m - 1, 0);
    for (size_t i = 0; i < m; ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < m; ++j) prod[i + j] += int64_t{a[i]} * b[j];
    }
    // Reduce x^(m+t) = -x^t * (c_{m-1} x^{m-1} + ... + c_0), top down.
    for (size_t d = 2 * m - 2; d >= m; --d) {
      int64_t c = prod[d] % p;
      if (c == 0) continue;
      prod[d] = 0;
      for (size_t j = 0; j < m; ++j) prod[d - m + j] = (prod[d - m + j] - c * f[j]) % p;
    }
    std::vector<int32_t> r(m);
    for (size_t j = 0; j < m; ++j) {
      int64_t c = prod[j] % p;
      if (c < 0) c += p;
      r[j] = static_cast<int32_t>(c);
    }
    return r;
  }

  std::vector<int32_t> pow_x(int64_t n) const {
    std::vector<int32_t> base(f.size(), 0);
    if (f.size() == 1) {
      int64_t c = (p - f[0]) % p;  // x = -c_0 once reduced
      base[0] = static_cast<int32_t>(c);
    } else {
      base[1] = 1;
    }
    std::vector<int32_t> r = one();
    while (n > 0) {
      if (n & 1) r = mul(r, base);
      base = mul(base, base);
      n >>= 1;
    }
    return r;
  }
};

bool is_one(const std::vector<int32_t>& v) {
  if (v[0] != 1) return false;
  for (size_t j = 1; j < v.size(); ++j)
    if (v[j] != 0) return false;
  return true;
}

/// True iff the residue class of x in F_p[x]/(f) has multiplicative order
/// exactly q-1.  That forces f irreducible and x primitive simultaneously.
bool x_is_primitive(const PolyMod& ring, int64_t qm1, const std::vector<int64_t>& qm1_factors) {
  if (!is_one(ring.pow_x(qm1))) return false;
  for (int64_t r : qm1_factors)
    if (is_one(ring.pow_x(qm1 / r))) return false;
  return true;
}

}  // namespace

FieldParams validate_params(int64_t p, int64_t ell, int64_t k, int64_t q_ceiling) {
  if (p < 1 || ell < 1 || k < 1) throw Error("validate_params: inputs must be positive");
  if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
  if (!is_prime(ell)) throw NotPrimeError("ell = " + std::to_string(ell) + " is not prime");
  if (p % 2 == 0 || ell % 2 == 0) throw EvenInputError("p and ell must be odd primes");
  if (p == ell) throw EqualPrimesError("p and ell must be distinct");

  FieldParams fp;
  fp.p = p;
  fp.ell = ell;
  fp.k = k;
  fp.ell_k1 = checked_pow(ell, k - 1);
  fp.ell_k = checked_mul(fp.ell_k1, ell);
  fp.two_ell_k = checked_mul(2, fp.ell_k);
  fp.e = checked_mul(ell - 1, fp.ell_k1);

  if (mult_order(p, fp.two_ell_k) != fp.e)
    throw NotPrimitiveRootError("p = " + std::to_string(p) + " is not a primitive root modulo " +
                                std::to_string(fp.two_ell_k));

  int64_t q = 1;
  for (int64_t i = 0; i < fp.e; ++i) {
    q = checked_mul(q, p);
    if (q > q_ceiling)
      throw OverflowError("q = p^" + std::to_string(fp.e) + " exceeds the ceiling " +
                          std::to_string(q_ceiling));
  }
  fp.q = q;
  if ((q - 1) % fp.two_ell_k != 0)
    throw InternalInconsistencyError("2 ell^k does not divide q - 1");
  fp.exp_n = (q - 1) / fp.two_ell_k;
  return fp;
}

FieldTable::FieldTable(int64_t p, int64_t degree, int64_t table_ceiling, int64_t poly_index)
    : p_(p), m_(degree) {
  if (!is_prime(p) || p == 2) throw NotPrimeError("field characteristic must be an odd prime");
  if (degree < 1) throw Error("field degree must be positive");
  build(poly_index, table_ceiling);
}

FieldTable::FieldTable(const FieldParams& params, int64_t table_ceiling, int64_t poly_index)
    : p_(params.p), m_(params.e), params_(params) {
  build(poly_index, table_ceiling);
  // xi = alpha^exp_n must have order exactly 2 ell^k.
  int64_t ord = (q_ - 1) / std::gcd(q_ - 1, params.exp_n);
  if (ord != params.two_ell_k)
    throw InternalInconsistencyError("xi does not have order 2 ell^k");
}

void FieldTable::build(int64_t poly_index, int64_t table_ceiling) {
  int64_t q = 1;
  for (int64_t i = 0; i < m_; ++i) {
    q = checked_mul(q, p_);
    if (q > table_ceiling)
      throw OverflowError("table size q = " + std::to_string(q) + " exceeds the ceiling " +
                          std::to_string(table_ceiling));
  }
  q_ = q;
  int64_t qm1 = q - 1;
  auto qm1_factors = prime_factors(qm1);

  // Scan monic candidates x^m + c_{m-1} x^{m-1} + ... + c_0 in increasing
  // packed order of (c_{m-1}, ..., c_0); skip c_0 = 0 since x must be a unit.
  PolyMod ring{p_, {}};
  int64_t seen = 0;
  bool found = false;
  for (int64_t code = 1; code < q_; ++code) {
    if (code % p_ == 0) continue;
    std::vector<int32_t> f(m_);
    int64_t v = code;
    for (int64_t j = 0; j < m_; ++j) {
      f[j] = static_cast<int32_t>(v % p_);
      v /= p_;
    }
    ring.f = f;
    if (x_is_primitive(ring, qm1, qm1_factors)) {
      if (seen++ == poly_index) {
        modulus_ = f;
        found = true;
        break;
      }
    }
  }
  if (!found) throw InternalInconsistencyError("no primitive polynomial found");

  // Power table of alpha (the class of x), with reduction by the modulus.
  antilog_.assign(qm1, 0);
  log_of_.assign(q_, -1);
  std::vector<int32_t> cur(m_, 0);
  cur[0] = 1;
  for (int64_t i = 0; i < qm1; ++i) {
    int64_t packed = 0;
    for (int64_t j = m_ - 1; j >= 0; --j) packed = packed * p_ + cur[j];
    if (packed == 0 || log_of_[packed] != -1)
      throw InternalInconsistencyError("power table of alpha is degenerate");
    antilog_[i] = static_cast<uint32_t>(packed);
    log_of_[packed] = static_cast<int32_t>(i);
    // cur <- cur * x
    int32_t top = cur[m_ - 1];
    for (int64_t j = m_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int64_t j = 0; j < m_; ++j) {
        int64_t c = (cur[j] - int64_t{top} * modulus_[j]) % p_;
        if (c < 0) c += p_;
        cur[j] = static_cast<int32_t>(c);
      }
    }
  }
  if (!is_one(cur)) throw InternalInconsistencyError("alpha^(q-1) != 1");
  neg_shift_ = qm1 / 2;

  // zech_[i] = log(1 + alpha^i); adding 1 only touches the constant digit.
  zech_.assign(qm1, -1);
  for (int64_t i = 0; i < qm1; ++i) {
    int64_t v = antilog_[i];
    int64_t d0 = v % p_;
    int64_t w = v - d0 + (d0 + 1) % p_;
    zech_[i] = w == 0 ? -1 : log_of_[w];
  }

  // Absolute traces of the power basis, then of every element by linearity.
  std::vector<int64_t> basis_tr(m_, 0);
  for (int64_t j = 0; j < m_; ++j) {
    std::vector<int64_t> acc(m_, 0);
    for (int64_t i = 0; i < m_; ++i) {
      int64_t lg = mulmod(j, powmod(p_, i, qm1), qm1);
      int64_t v = j == 0 ? 1 : antilog_[lg];
      for (int64_t t = 0; t < m_; ++t) {
        acc[t] = (acc[t] + v % p_) % p_;
        v /= p_;
      }
    }
    for (int64_t t = 1; t < m_; ++t)
      if (acc[t] != 0) throw InternalInconsistencyError("trace of a basis power is not scalar");
    basis_tr[j] = acc[0];
  }
  if (basis_tr[0] != m_ % p_) throw InternalInconsistencyError("trace of 1 is not e mod p");

  trace_by_rank_.assign(q_, 0);
  for (int64_t i = 0; i < qm1; ++i) {
    int64_t v = antilog_[i], t = 0;
    for (int64_t j = 0; j < m_; ++j) {
      t += (v % p_) * basis_tr[j];
      v /= p_;
    }
    trace_by_rank_[i + 1] = static_cast<int32_t>(t % p_);
  }
}

FieldElement FieldTable::xi() const {
  if (!params_) throw Error("xi requires (p, ell, k) parameter structure");
  return from_log(params_->exp_n % (q_ - 1));
}

FieldElement FieldTable::from_log(int64_t lg) const {
  int64_t r = lg % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return {static_cast<int32_t>(r)};
}

FieldElement FieldTable::from_residue(int64_t z) const {
  int64_t r = z % p_;
  if (r < 0) r += p_;
  return r == 0 ? zero() : FieldElement{log_of_[r]};
}

FieldElement FieldTable::element_at(int64_t rank) const {
  if (rank < 0 || rank >= q_) throw Error("element rank out of range");
  return {static_cast<int32_t>(rank - 1)};
}

FieldElement FieldTable::add(FieldElement a, FieldElement b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int64_t d = b.lg - a.lg;
  if (d < 0) d += q_ - 1;
  int32_t z = zech_[d];
  if (z < 0) return zero();
  int64_t r = a.lg + z;
  if (r >= q_ - 1) r -= q_ - 1;
  return {static_cast<int32_t>(r)};
}

FieldElement FieldTable::neg(FieldElement a) const {
  if (a.is_zero()) return a;
  int64_t r = a.lg + neg_shift_;
  if (r >= q_ - 1) r -= q_ - 1;
  return {static_cast<int32_t>(r)};
}

FieldElement FieldTable::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  int64_t r = int64_t{a.lg} + b.lg;
  if (r >= q_ - 1) r -= q_ - 1;
  return {static_cast<int32_t>(r)};
}

FieldElement FieldTable::inv(FieldElement a) const {
  if (a.is_zero()) throw ZeroElementError("inverse of zero");
  return {static_cast<int32_t>(a.lg == 0 ? 0 : q_ - 1 - a.lg)};
}

FieldElement FieldTable::pow(FieldElement a, int64_t n) const {
  if (a.is_zero()) {
    if (n <= 0) throw ZeroElementError("0^n needs n > 0");
    return a;
  }
  return from_log(mulmod(a.lg, ((n % (q_ - 1)) + q_ - 1) % (q_ - 1), q_ - 1));
}

int64_t FieldTable::prime_residue(FieldElement a) const {
  int64_t v = packed_of(a);
  if (v >= p_) throw NonPrimeFieldError("element is not in the prime subfield");
  return v;
}

FieldElement FieldTable::from_packed(int64_t v) const {
  if (v < 0 || v >= q_) throw Error("packed value out of range");
  return v == 0 ? zero() : FieldElement{log_of_[v]};
}

int64_t FieldTable::residue_class(FieldElement b) const {
  if (!params_) throw Error("residue_class requires (p, ell, k) parameter structure");
  if (b.is_zero()) throw ZeroElementError("residue_class of zero");
  int64_t n = params_->two_ell_k;
  return ((-int64_t{b.lg}) % n + n) % n;
}

FieldTable build_field(const FieldParams& params, int64_t table_ceiling) {
  return FieldTable(params, table_ceiling);
}

}  // namespace weilcodes
