// Copyright 2026 The chenbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Rigorous real arithmetic on top of MPFR.
//
// Every bound in the library is computed as an Interval whose endpoints are
// rounded outward, so the exact value of the expression is always enclosed.
// A DirectedReal is one endpoint of such an enclosure, tagged with the side
// it bounds: an `up` value is >= the exact quantity, a `down` value <= it.
//
// MPFR's exponent range is widened to the maximum on first use in every
// thread; quantities such as exp(exp(17)) are then representable directly.

#pragma once

// stdint must precede mpfr.h to enable the intmax_t entry points.
#include <stdint.h>

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace chenbound {

enum class Direction { down, up, nearest };

std::string_view to_string(Direction d);
Direction direction_from_string(std::string_view s);

// Guard bits added on top of the requested decimal precision.
inline constexpr int kGuardBits = 32;
inline constexpr int kDefaultDigits = 50;

mpfr_prec_t digits_to_bits(int digits);

// Precision used by newly created values in the calling thread.
mpfr_prec_t default_bits();
int default_digits();

// Sets the calling thread's default precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_bits_;
  int saved_digits_;
};

// RAII owner of one mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = default_bits());
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }

  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(v_, rnd); }
  // Scientific notation with `digits` significant digits, rounded per `rnd`.
  std::string to_decimal(int digits, mpfr_rnd_t rnd) const;

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

class DirectedReal;

// Closed interval [lo, hi] with outward-rounded arithmetic.
class Interval {
 public:
  Interval();  // [0, 0]
  explicit Interval(mpfr_prec_t bits);

  static Interval point(double exact, mpfr_prec_t bits = default_bits());
  static Interval integer(std::int64_t v, mpfr_prec_t bits = default_bits());
  static Interval unsigned_integer(std::uint64_t v, mpfr_prec_t bits = default_bits());
  // Decimal literal such as "0.165" or "1e-20", rounded outward.
  static Interval decimal(std::string_view text, mpfr_prec_t bits = default_bits());
  static Interval rational(std::int64_t num, std::int64_t den, mpfr_prec_t bits = default_bits());
  static Interval bounds(const BigFloat& lo, const BigFloat& hi);
  static Interval bounds(double lo, double hi, mpfr_prec_t bits = default_bits());

  static Interval pi(mpfr_prec_t bits = default_bits());
  static Interval euler_gamma(mpfr_prec_t bits = default_bits());
  static Interval log2(mpfr_prec_t bits = default_bits());

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  BigFloat& lo() { return lo_; }
  BigFloat& hi() { return hi_; }
  mpfr_prec_t bits() const { return lo_.bits(); }

  double lower_double() const { return lo_.to_double(MPFR_RNDD); }
  double upper_double() const { return hi_.to_double(MPFR_RNDU); }
  double mid_double() const;
  double width_double() const;
  // Width relative to max(|lo|, |hi|); 0 for the zero interval.
  double relative_width() const;

  bool contains(double x) const;
  bool contains(const Interval& other) const;
  bool overlaps(const Interval& other) const;

  bool certainly_positive() const { return lo_.sign() > 0; }
  bool certainly_nonnegative() const { return lo_.sign() >= 0; }
  bool certainly_negative() const { return hi_.sign() < 0; }
  bool certainly_lt(const Interval& o) const;
  bool certainly_le(const Interval& o) const;
  bool certainly_gt(const Interval& o) const { return o.certainly_lt(*this); }
  bool certainly_ge(const Interval& o) const { return o.certainly_le(*this); }
  bool certainly_lt(double x) const;
  bool certainly_le(double x) const;
  bool certainly_gt(double x) const;
  bool certainly_ge(double x) const;

  DirectedReal as(Direction d, int digits = default_digits()) const;
  DirectedReal upper(int digits = default_digits()) const;
  DirectedReal lower(int digits = default_digits()) const;

  // Outward re-rounding to a different precision.
  Interval with_bits(mpfr_prec_t bits) const;

  // "[lo, hi]" in scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval operator+(const Interval& a, std::int64_t b);
Interval operator+(std::int64_t a, const Interval& b);
Interval operator-(const Interval& a, std::int64_t b);
Interval operator-(std::int64_t a, const Interval& b);
Interval operator*(const Interval& a, std::int64_t b);
Interval operator*(std::int64_t a, const Interval& b);
Interval operator/(const Interval& a, std::int64_t b);
Interval operator/(std::int64_t a, const Interval& b);

Interval hull(const Interval& a, const Interval& b);
Interval square(const Interval& x);
Interval sqrt(const Interval& x);
Interval cbrt(const Interval& x);
Interval exp(const Interval& x);
Interval expm1(const Interval& x);
Interval log(const Interval& x);
Interval log1p(const Interval& x);
// x^e for x > 0.
Interval pow(const Interval& x, const Interval& e);
Interval pow(const Interval& x, std::int64_t n);
// Real dilogarithm Li2(x) for x <= 1.
Interval li2(const Interval& x);
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);

// One side of an enclosure: value >= exact when direction is up, <= when
// down. Arithmetic keeps the direction sound and refuses combinations whose
// direction cannot be determined.
class DirectedReal {
 public:
  DirectedReal(BigFloat value, Direction dir, int precision_digits);

  const BigFloat& value() const { return value_; }
  Direction direction() const { return dir_; }
  int precision_digits() const { return digits_; }

  double to_double() const;
  // Decimal string rounded in this value's direction.
  std::string decimal() const;
  std::string decimal(int digits) const;

  // Point interval at the stored value.
  Interval as_point() const;

 private:
  BigFloat value_;
  Direction dir_;
  int digits_;
};

DirectedReal operator+(const DirectedReal& a, const DirectedReal& b);
DirectedReal operator-(const DirectedReal& a);
DirectedReal operator-(const DirectedReal& a, const DirectedReal& b);
DirectedReal operator*(const DirectedReal& a, const DirectedReal& b);

bool operator<(const DirectedReal& a, double b);
bool operator<=(const DirectedReal& a, double b);
bool operator>(const DirectedReal& a, double b);
bool operator>=(const DirectedReal& a, double b);
int compare(const DirectedReal& a, const DirectedReal& b);

// Lower/upper pair enclosing one constant.
struct Bracket {
  DirectedReal down;
  DirectedReal up;

  static Bracket of(const Interval& x, int digits = default_digits());
  Interval interval() const;
  double width() const;
  bool contains(double x) const;
};

}  // namespace chenbound
