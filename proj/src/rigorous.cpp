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

#include "chenbound/rigorous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "chenbound/errors.hpp"

namespace chenbound {
namespace {

thread_local mpfr_prec_t tl_bits = 0;
thread_local int tl_digits = kDefaultDigits;

void ensure_exponent_range() {
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    done = true;
  }
}

// Smallest/largest of the candidates, each already computed with the
// matching rounding mode.
void set_min(mpfr_ptr out, std::initializer_list<mpfr_srcptr> xs) {
  mpfr_srcptr best = *xs.begin();
  for (auto x : xs) {
    if (mpfr_less_p(x, best)) best = x;
  }
  mpfr_set(out, best, MPFR_RNDD);
}

void set_max(mpfr_ptr out, std::initializer_list<mpfr_srcptr> xs) {
  mpfr_srcptr best = *xs.begin();
  for (auto x : xs) {
    if (mpfr_greater_p(x, best)) best = x;
  }
  mpfr_set(out, best, MPFR_RNDU);
}

void check_nan(const Interval& r, const char* op) {
  if (r.lo().is_nan() || r.hi().is_nan()) {
    throw DomainError(std::string("interval ") + op + " produced NaN");
  }
}

mpfr_prec_t max_bits(const Interval& a, const Interval& b) {
  return std::max(a.bits(), b.bits());
}

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Image of an interval under a nondecreasing function.
Interval monotone_up(const Interval& x, UnaryFn f, const char* name) {
  Interval r(x.bits());
  f(r.lo().raw(), x.lo().raw(), MPFR_RNDD);
  f(r.hi().raw(), x.hi().raw(), MPFR_RNDU);
  check_nan(r, name);
  return r;
}

}  // namespace

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::down:
      return "down";
    case Direction::up:
      return "up";
    case Direction::nearest:
      return "nearest";
  }
  return "nearest";
}

Direction direction_from_string(std::string_view s) {
  if (s == "down") return Direction::down;
  if (s == "up") return Direction::up;
  if (s == "nearest") return Direction::nearest;
  throw UsageError("unknown rounding direction '" + std::string(s) + "'");
}

mpfr_prec_t digits_to_bits(int digits) {
  if (digits < 1) throw DomainError("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + kGuardBits;
}

mpfr_prec_t default_bits() {
  if (tl_bits == 0) tl_bits = digits_to_bits(tl_digits);
  return tl_bits;
}

int default_digits() { return tl_digits; }

PrecisionScope::PrecisionScope(int digits)
    : saved_bits_(default_bits()), saved_digits_(tl_digits) {
  tl_bits = digits_to_bits(digits);
  tl_digits = digits;
}

PrecisionScope::~PrecisionScope() {
  tl_bits = saved_bits_;
  tl_digits = saved_digits_;
}

// ---------------------------------------------------------------- BigFloat

BigFloat::BigFloat(mpfr_prec_t bits) {
  ensure_exponent_range();
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  ensure_exponent_range();
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, other.bits());
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_swap(v_, other.v_);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_decimal(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t exp10 = 0;
  char* s = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, rnd);
  std::string mant(s);
  mpfr_free_str(s);
  std::string out;
  if (mant[0] == '-') {
    out.push_back('-');
    mant.erase(0, 1);
  }
  // mantissa is d1 d2 d3 ... with value 0.d1d2d3 * 10^exp10
  out.push_back(mant[0]);
  if (mant.size() > 1) {
    out.push_back('.');
    out.append(mant, 1, std::string::npos);
  }
  out.push_back('e');
  out += std::to_string(static_cast<long long>(exp10 - 1));
  return out;
}

// ---------------------------------------------------------------- Interval

Interval::Interval() : Interval(default_bits()) {}

Interval::Interval(mpfr_prec_t bits) : lo_(bits), hi_(bits) {}

Interval Interval::point(double exact, mpfr_prec_t bits) {
  if (!std::isfinite(exact)) throw DomainError("non-finite interval endpoint");
  Interval r(std::max<mpfr_prec_t>(bits, 53));
  mpfr_set_d(r.lo_.raw(), exact, MPFR_RNDD);
  mpfr_set_d(r.hi_.raw(), exact, MPFR_RNDU);
  return r;
}

Interval Interval::integer(std::int64_t v, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_set_sj(r.lo_.raw(), v, MPFR_RNDD);
  mpfr_set_sj(r.hi_.raw(), v, MPFR_RNDU);
  return r;
}

Interval Interval::unsigned_integer(std::uint64_t v, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_set_uj(r.lo_.raw(), v, MPFR_RNDD);
  mpfr_set_uj(r.hi_.raw(), v, MPFR_RNDU);
  return r;
}

Interval Interval::decimal(std::string_view text, mpfr_prec_t bits) {
  std::string s(text);
  Interval r(bits);
  char* end = nullptr;
  mpfr_strtofr(r.lo_.raw(), s.c_str(), &end, 10, MPFR_RNDD);
  if (end == s.c_str() || *end != '\0') {
    throw UsageError("malformed decimal literal '" + s + "'");
  }
  mpfr_strtofr(r.hi_.raw(), s.c_str(), &end, 10, MPFR_RNDU);
  check_nan(r, "decimal");
  return r;
}

Interval Interval::rational(std::int64_t num, std::int64_t den, mpfr_prec_t bits) {
  if (den == 0) throw DomainError("zero denominator");
  return integer(num, bits) / integer(den, bits);
}

Interval Interval::bounds(const BigFloat& lo, const BigFloat& hi) {
  if (mpfr_greater_p(lo.raw(), hi.raw())) throw DomainError("interval with lo > hi");
  Interval r(std::max(lo.bits(), hi.bits()));
  mpfr_set(r.lo_.raw(), lo.raw(), MPFR_RNDD);
  mpfr_set(r.hi_.raw(), hi.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::bounds(double lo, double hi, mpfr_prec_t bits) {
  if (!(lo <= hi)) throw DomainError("interval with lo > hi");
  Interval r(std::max<mpfr_prec_t>(bits, 53));
  mpfr_set_d(r.lo_.raw(), lo, MPFR_RNDD);
  mpfr_set_d(r.hi_.raw(), hi, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_const_pi(r.lo_.raw(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::euler_gamma(mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_const_euler(r.lo_.raw(), MPFR_RNDD);
  mpfr_const_euler(r.hi_.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::log2(mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_const_log2(r.lo_.raw(), MPFR_RNDD);
  mpfr_const_log2(r.hi_.raw(), MPFR_RNDU);
  return r;
}

double Interval::mid_double() const {
  BigFloat m(bits() + 1);
  mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
  return m.to_double(MPFR_RNDN);
}

double Interval::width_double() const {
  BigFloat w(bits());
  mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return w.to_double(MPFR_RNDU);
}

double Interval::relative_width() const {
  BigFloat w(bits());
  mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  BigFloat m(bits());
  if (mpfr_cmpabs(lo_.raw(), hi_.raw()) > 0) {
    mpfr_abs(m.raw(), lo_.raw(), MPFR_RNDD);
  } else {
    mpfr_abs(m.raw(), hi_.raw(), MPFR_RNDD);
  }
  if (mpfr_zero_p(m.raw())) return 0.0;
  mpfr_div(w.raw(), w.raw(), m.raw(), MPFR_RNDU);
  return w.to_double(MPFR_RNDU);
}

bool Interval::contains(double x) const {
  return mpfr_cmp_d(lo_.raw(), x) <= 0 && mpfr_cmp_d(hi_.raw(), x) >= 0;
}

bool Interval::contains(const Interval& o) const {
  return mpfr_lessequal_p(lo_.raw(), o.lo_.raw()) && mpfr_greaterequal_p(hi_.raw(), o.hi_.raw());
}

bool Interval::overlaps(const Interval& o) const {
  return mpfr_lessequal_p(lo_.raw(), o.hi_.raw()) && mpfr_lessequal_p(o.lo_.raw(), hi_.raw());
}

bool Interval::certainly_lt(const Interval& o) const { return mpfr_less_p(hi_.raw(), o.lo_.raw()); }
bool Interval::certainly_le(const Interval& o) const {
  return mpfr_lessequal_p(hi_.raw(), o.lo_.raw());
}
bool Interval::certainly_lt(double x) const { return mpfr_cmp_d(hi_.raw(), x) < 0; }
bool Interval::certainly_le(double x) const { return mpfr_cmp_d(hi_.raw(), x) <= 0; }
bool Interval::certainly_gt(double x) const { return mpfr_cmp_d(lo_.raw(), x) > 0; }
bool Interval::certainly_ge(double x) const { return mpfr_cmp_d(lo_.raw(), x) >= 0; }

DirectedReal Interval::as(Direction d, int digits) const {
  switch (d) {
    case Direction::down:
      return DirectedReal(lo_, Direction::down, digits);
    case Direction::up:
      return DirectedReal(hi_, Direction::up, digits);
    case Direction::nearest: {
      BigFloat m(bits());
      mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
      mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
      return DirectedReal(std::move(m), Direction::nearest, digits);
    }
  }
  throw DomainError("bad direction");
}

DirectedReal Interval::upper(int digits) const { return as(Direction::up, digits); }
DirectedReal Interval::lower(int digits) const { return as(Direction::down, digits); }

Interval Interval::with_bits(mpfr_prec_t b) const {
  Interval r(b);
  mpfr_set(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
  mpfr_set(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
  return r;
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_decimal(digits, MPFR_RNDD) + ", " + hi_.to_decimal(digits, MPFR_RNDU) + "]";
}

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(max_bits(a, b));
  mpfr_add(r.lo().raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
  mpfr_add(r.hi().raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
  check_nan(r, "add");
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(max_bits(a, b));
  mpfr_sub(r.lo().raw(), a.lo().raw(), b.hi().raw(), MPFR_RNDD);
  mpfr_sub(r.hi().raw(), a.hi().raw(), b.lo().raw(), MPFR_RNDU);
  check_nan(r, "sub");
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.bits());
  mpfr_neg(r.lo().raw(), a.hi().raw(), MPFR_RNDD);
  mpfr_neg(r.hi().raw(), a.lo().raw(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t p = max_bits(a, b);
  Interval r(p);
  if (a.lo().sign() >= 0 && b.lo().sign() >= 0) {
    mpfr_mul(r.lo().raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_mul(r.hi().raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
  } else {
    BigFloat d[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
    BigFloat u[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
    mpfr_srcptr as[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr bs[2] = {b.lo().raw(), b.hi().raw()};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        mpfr_mul(d[2 * i + j].raw(), as[i], bs[j], MPFR_RNDD);
        mpfr_mul(u[2 * i + j].raw(), as[i], bs[j], MPFR_RNDU);
      }
    }
    set_min(r.lo().raw(), {d[0].raw(), d[1].raw(), d[2].raw(), d[3].raw()});
    set_max(r.hi().raw(), {u[0].raw(), u[1].raw(), u[2].raw(), u[3].raw()});
  }
  check_nan(r, "mul");
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo().sign() <= 0 && b.hi().sign() >= 0) {
    throw DomainError("interval division by an interval containing zero");
  }
  const mpfr_prec_t p = max_bits(a, b);
  Interval r(p);
  BigFloat d[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  BigFloat u[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  mpfr_srcptr as[2] = {a.lo().raw(), a.hi().raw()};
  mpfr_srcptr bs[2] = {b.lo().raw(), b.hi().raw()};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_div(d[2 * i + j].raw(), as[i], bs[j], MPFR_RNDD);
      mpfr_div(u[2 * i + j].raw(), as[i], bs[j], MPFR_RNDU);
    }
  }
  set_min(r.lo().raw(), {d[0].raw(), d[1].raw(), d[2].raw(), d[3].raw()});
  set_max(r.hi().raw(), {u[0].raw(), u[1].raw(), u[2].raw(), u[3].raw()});
  check_nan(r, "div");
  return r;
}

Interval operator+(const Interval& a, std::int64_t b) { return a + Interval::integer(b, a.bits()); }
Interval operator+(std::int64_t a, const Interval& b) { return Interval::integer(a, b.bits()) + b; }
Interval operator-(const Interval& a, std::int64_t b) { return a - Interval::integer(b, a.bits()); }
Interval operator-(std::int64_t a, const Interval& b) { return Interval::integer(a, b.bits()) - b; }
Interval operator*(const Interval& a, std::int64_t b) { return a * Interval::integer(b, a.bits()); }
Interval operator*(std::int64_t a, const Interval& b) { return Interval::integer(a, b.bits()) * b; }
Interval operator/(const Interval& a, std::int64_t b) { return a / Interval::integer(b, a.bits()); }
Interval operator/(std::int64_t a, const Interval& b) { return Interval::integer(a, b.bits()) / b; }

Interval hull(const Interval& a, const Interval& b) {
  Interval r(max_bits(a, b));
  mpfr_min(r.lo().raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
  mpfr_max(r.hi().raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
  return r;
}

Interval square(const Interval& x) {
  Interval r(x.bits());
  if (x.lo().sign() >= 0) {
    mpfr_sqr(r.lo().raw(), x.lo().raw(), MPFR_RNDD);
    mpfr_sqr(r.hi().raw(), x.hi().raw(), MPFR_RNDU);
  } else if (x.hi().sign() <= 0) {
    mpfr_sqr(r.lo().raw(), x.hi().raw(), MPFR_RNDD);
    mpfr_sqr(r.hi().raw(), x.lo().raw(), MPFR_RNDU);
  } else {
    BigFloat a(x.bits()), b(x.bits());
    mpfr_sqr(a.raw(), x.lo().raw(), MPFR_RNDU);
    mpfr_sqr(b.raw(), x.hi().raw(), MPFR_RNDU);
    mpfr_set_zero(r.lo().raw(), 1);
    mpfr_max(r.hi().raw(), a.raw(), b.raw(), MPFR_RNDU);
  }
  return r;
}

Interval sqrt(const Interval& x) {
  if (x.lo().sign() < 0) throw DomainError("sqrt of an interval reaching below zero");
  return monotone_up(x, mpfr_sqrt, "sqrt");
}

Interval cbrt(const Interval& x) { return monotone_up(x, mpfr_cbrt, "cbrt"); }
Interval exp(const Interval& x) { return monotone_up(x, mpfr_exp, "exp"); }
Interval expm1(const Interval& x) { return monotone_up(x, mpfr_expm1, "expm1"); }

Interval log(const Interval& x) {
  if (x.lo().sign() <= 0) throw DomainError("log of an interval reaching zero or below");
  return monotone_up(x, mpfr_log, "log");
}

Interval log1p(const Interval& x) {
  if (mpfr_cmp_si(x.lo().raw(), -1) <= 0) throw DomainError("log1p argument <= -1");
  return monotone_up(x, mpfr_log1p, "log1p");
}

Interval pow(const Interval& x, const Interval& e) { return exp(e * log(x)); }

Interval pow(const Interval& x, std::int64_t n) {
  if (n == 0) return Interval::integer(1, x.bits());
  if (n < 0) return Interval::integer(1, x.bits()) / pow(x, -n);
  if (x.lo().sign() >= 0) {
    Interval r(x.bits());
    mpfr_pow_ui(r.lo().raw(), x.lo().raw(), static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_pow_ui(r.hi().raw(), x.hi().raw(), static_cast<unsigned long>(n), MPFR_RNDU);
    return r;
  }
  Interval result = Interval::integer(1, x.bits());
  Interval base = x;
  std::int64_t k = n;
  // Even powers go through square() so they stay nonnegative.
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = square(base);
  }
  return result;
}

Interval li2(const Interval& x) {
  if (mpfr_cmp_si(x.hi().raw(), 1) > 0) throw DomainError("li2 evaluated above 1");
  // Li2 is increasing on (-inf, 1].
  return monotone_up(x, mpfr_li2, "li2");
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(max_bits(a, b));
  mpfr_min(r.lo().raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
  mpfr_min(r.hi().raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(max_bits(a, b));
  mpfr_max(r.lo().raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
  mpfr_max(r.hi().raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
  return r;
}

// ------------------------------------------------------------ DirectedReal

namespace {

mpfr_rnd_t rounding_of(Direction d) {
  switch (d) {
    case Direction::down:
      return MPFR_RNDD;
    case Direction::up:
      return MPFR_RNDU;
    case Direction::nearest:
      return MPFR_RNDN;
  }
  return MPFR_RNDN;
}

Direction flip(Direction d) {
  if (d == Direction::up) return Direction::down;
  if (d == Direction::down) return Direction::up;
  return Direction::nearest;
}

}  // namespace

DirectedReal::DirectedReal(BigFloat value, Direction dir, int precision_digits)
    : value_(std::move(value)), dir_(dir), digits_(precision_digits) {}

double DirectedReal::to_double() const { return value_.to_double(rounding_of(dir_)); }

std::string DirectedReal::decimal() const { return decimal(digits_); }

std::string DirectedReal::decimal(int digits) const {
  return value_.to_decimal(digits, rounding_of(dir_));
}

Interval DirectedReal::as_point() const { return Interval::bounds(value_, value_); }

DirectedReal operator+(const DirectedReal& a, const DirectedReal& b) {
  if (a.direction() != b.direction()) {
    throw DomainError("adding bounds of opposite rounding direction");
  }
  BigFloat r(std::max(a.value().bits(), b.value().bits()));
  mpfr_add(r.raw(), a.value().raw(), b.value().raw(), rounding_of(a.direction()));
  return DirectedReal(std::move(r), a.direction(),
                      std::min(a.precision_digits(), b.precision_digits()));
}

DirectedReal operator-(const DirectedReal& a) {
  BigFloat r(a.value().bits());
  mpfr_neg(r.raw(), a.value().raw(), MPFR_RNDN);
  return DirectedReal(std::move(r), flip(a.direction()), a.precision_digits());
}

DirectedReal operator-(const DirectedReal& a, const DirectedReal& b) { return a + (-b); }

DirectedReal operator*(const DirectedReal& a, const DirectedReal& b) {
  if (a.direction() != b.direction()) {
    throw DomainError("multiplying bounds of opposite rounding direction");
  }
  if (a.direction() != Direction::nearest &&
      (a.value().sign() < 0 || b.value().sign() < 0)) {
    // The direction of a product of bounds is only known for nonnegative factors.
    throw DomainError("directed product needs nonnegative factors");
  }
  BigFloat r(std::max(a.value().bits(), b.value().bits()));
  mpfr_mul(r.raw(), a.value().raw(), b.value().raw(), rounding_of(a.direction()));
  return DirectedReal(std::move(r), a.direction(),
                      std::min(a.precision_digits(), b.precision_digits()));
}

bool operator<(const DirectedReal& a, double b) { return mpfr_cmp_d(a.value().raw(), b) < 0; }
bool operator<=(const DirectedReal& a, double b) { return mpfr_cmp_d(a.value().raw(), b) <= 0; }
bool operator>(const DirectedReal& a, double b) { return mpfr_cmp_d(a.value().raw(), b) > 0; }
bool operator>=(const DirectedReal& a, double b) { return mpfr_cmp_d(a.value().raw(), b) >= 0; }

int compare(const DirectedReal& a, const DirectedReal& b) {
  return mpfr_cmp(a.value().raw(), b.value().raw());
}

// ------------------------------------------------------------------ Bracket

Bracket Bracket::of(const Interval& x, int digits) {
  return Bracket{x.as(Direction::down, digits), x.as(Direction::up, digits)};
}

Interval Bracket::interval() const { return Interval::bounds(down.value(), up.value()); }

double Bracket::width() const { return interval().width_double(); }

bool Bracket::contains(double x) const { return interval().contains(x); }

}  // namespace chenbound
