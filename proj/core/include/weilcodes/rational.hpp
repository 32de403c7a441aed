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
#include <stdexcept>

namespace weilcodes {

/// Exact rational on 128-bit integers.  Closed-form weight and frequency
/// expressions are integral as a whole but contain non-integral subterms,
/// so they are evaluated in this type and converted at the end.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(int64_t n, int64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    normalize();
  }

  friend Rat operator+(Rat a, Rat b) { return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
  friend Rat operator-(Rat a, Rat b) { return make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
  friend Rat operator*(Rat a, Rat b) { return make(a.num_ * b.num_, a.den_ * b.den_); }
  friend Rat operator/(Rat a, Rat b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat operator-() const { return make(-num_, den_); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  bool is_integral() const { return den_ == 1; }

  /// Value as int64; caller must have checked is_integral().
  int64_t as_int() const {
    if (den_ != 1) throw std::domain_error("Rat: not an integer");
    if (num_ > INT64_MAX || num_ < INT64_MIN) throw std::overflow_error("Rat: out of int64 range");
    return static_cast<int64_t>(num_);
  }

 private:
  static Rat make(__int128 n, __int128 d) {
    Rat r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    __int128 a = num_ < 0 ? -num_ : num_, b = den_;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num_ /= a;
      den_ /= a;
    }
    if (num_ == 0) den_ = 1;
  }

  __int128 num_, den_;
};

}  // namespace weilcodes
