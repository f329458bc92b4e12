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

#include "chenbound/lemma_bounds.hpp"

#include <cmath>
#include <string>

#include "chenbound/errors.hpp"

namespace chenbound {
namespace {

constexpr std::array<SieveConstantRow, kSieveTableRows> kTable{{
    {63, 32881, 32875}, {64, 7582, 7580},   {65, 3890, 3890},   {66, 2542, 2542},
    {67, 1880, 1881},   {68, 1480, 1500},   {69, 1254, 1255},   {70, 1084, 1086},
    {71, 960, 962},     {72, 865, 867},     {73, 790, 791},     {74, 729, 730},
    {75, 678, 679},     {76, 635, 636},     {77, 598, 600},     {78, 566, 568},
    {79, 538, 540},     {80, 514, 515},     {81, 492, 493},     {84, 438, 439},
    {87, 398, 400},     {93, 341, 343},     {99, 303, 305},     {114, 247, 249},
    {143, 198, 200},    {200, 162, 164},    {249, 149, 150},    {300, 141, 142},
    {400, 132, 134},    {500, 127, 129},    {600, 124, 126},    {700, 122, 124},
    {800, 121, 122},    {900, 120, 121},    {1000, 119, 120},   {1100, 118, 120},
    {1200, 117, 119},   {1400, 117, 118},   {1500, 116, 118},   {1600, 116, 117},
    {1800, 115, 117},   {2100, 115, 116},   {2300, 114, 116},   {3300, 113, 115},
    {4500, 113, 114},   {6100, 112, 114},   {12200, 112, 113},  {39500, 111, 113},
}};

mpfr_prec_t work_bits(const Interval& a) { return std::max(default_bits(), a.bits()); }

Interval dec(const char* text, mpfr_prec_t bits) { return Interval::decimal(text, bits); }

Interval endpoint(const BigFloat& v) { return Interval::bounds(v, v); }

void require_log_x2(const Interval& log_x2, const char* what) {
  if (log_x2.certainly_lt(log_four_e18(work_bits(log_x2)))) {
    throw DomainError(std::string(what) + " needs X2 >= 4e18");
  }
}

Interval log_of(double x) { return log(Interval::point(x)); }

Interval h_point(const Interval& s) {
  const mpfr_prec_t b = work_bits(s);
  if (s.certainly_le(2.0)) return exp(Interval::integer(-2, b));
  if (s.certainly_le(3.0)) return exp(-s);
  return 3 * exp(-s) / s;
}

Interval small_f_point(const Interval& s) {
  const mpfr_prec_t b = work_bits(s);
  return 2 * exp(Interval::euler_gamma(b)) * log(s - 1) / s;
}

}  // namespace

const std::array<SieveConstantRow, kSieveTableRows>& sieve_table() {
  static const bool checked = [] {
    if (sieve_table_checksum() != kSieveTableChecksum) {
      throw ResourceError("sieve constant table failed its checksum");
    }
    return true;
  }();
  (void)checked;
  return kTable;
}

const std::uint64_t kSieveTableChecksum = 10436141000083714545ULL;

std::uint64_t sieve_table_checksum() {
  std::uint64_t hash = 14695981039346656037ULL;
  auto feed = [&](int v) {
    const auto u = static_cast<std::uint32_t>(v);
    for (int i = 0; i < 4; ++i) {
      hash ^= (u >> (8 * i)) & 0xff;
      hash *= 1099511628211ULL;
    }
  };
  for (const auto& row : kTable) {
    feed(row.inv_epsilon);
    feed(row.c1);
    feed(row.c2);
  }
  return hash;
}

SieveConstants sieve_constants(const mpq_class& epsilon) {
  if (sgn(epsilon) <= 0) throw DomainError("epsilon must be positive");
  if (epsilon >= mpq_class(1, 63)) throw DomainError("epsilon must be below 1/63");
  const auto& table = sieve_table();
  for (auto it = table.rbegin(); it != table.rend(); ++it) {
    if (epsilon * it->inv_epsilon <= 1) return {it->c1, it->c2, it->inv_epsilon};
  }
  throw DomainError("1/epsilon below the first table row");
}

SieveConstants sieve_constants(double epsilon) {
  if (!std::isfinite(epsilon)) throw DomainError("epsilon must be finite");
  return sieve_constants(mpq_class(epsilon));
}

SieveConstants sieve_constants(const Interval& epsilon) {
  if (!epsilon.certainly_positive()) throw DomainError("epsilon must be positive");
  mpq_class hi;
  mpfr_get_q(hi.get_mpq_t(), epsilon.hi().raw());
  return sieve_constants(hi);
}

Interval log_four_e18(mpfr_prec_t bits) { return log(dec("4e18", bits)); }

Interval q_g_log(const Interval& L) {
  require_log_x2(L, "q_G");
  const mpfr_prec_t b = work_bits(L);
  const Interval x14 = exp(L / 4);
  const Interval x12 = exp(L / 2);
  const Interval ll = log(L);
  Interval q = dec("0.165", b);
  q += dec("12.683", b) / L;
  q += dec("254.980", b) / pow(L, 2);
  q += dec("2607.854", b) / pow(L, 3);
  q += dec("11605.056", b) / pow(L, 4);
  q += dec("1.314", b) * L / x14;
  q += dec("0.092", b) * ll / x14;
  q += dec("60.883", b) / x14;
  q += dec("8.250", b) * ll / (x14 * L);
  q += dec("939.260", b) / (x14 * L);
  q -= dec("237.934", b) / (x12 * L);
  return q;
}

Interval p_g_log(const Interval& L) {
  const mpfr_prec_t b = work_bits(L);
  return dec("0.65", b) * (dec("0.02", b) + q_g_log(L));
}

Interval c_g_log(const Interval& L) {
  const Interval p = p_g_log(L);
  const mpfr_prec_t b = work_bits(L);
  return p + dec("0.9", b) / (exp(L / 2) * log(L));
}

DirectedReal q_g(double x2, Direction dir) {
  if (!(x2 >= 4e18)) throw DomainError("q_G needs X2 >= 4e18");
  return q_g_log(log_of(x2)).as(dir);
}

DirectedReal p_g(double x2, Direction dir) {
  if (!(x2 >= 4e18)) throw DomainError("p_G needs X2 >= 4e18");
  return p_g_log(log_of(x2)).as(dir);
}

DirectedReal c_g(double x2, Direction dir) {
  if (!(x2 >= 4e18)) throw DomainError("c_G needs X2 >= 4e18");
  return c_g_log(log_of(x2)).as(dir);
}

Interval epsilon_of_u(const Interval& u) {
  if (u.certainly_lt(9551.0)) throw DomainError("epsilon(u) needs u >= 9551");
  const mpfr_prec_t b = work_bits(u);
  const Interval lu = log(u);
  const Interval f1 = 1 + 1 / (dec("0.996", b) * u - 1);
  const Interval f2 = 1 + dec("1.5e-4", b) / lu + dec("2.25e-8", b) / square(lu);
  const Interval um1 = u - 1;
  const Interval f3 = 1 + 1 / um1 + 1 / square(um1);
  return f1 * f2 * f3 - 1;
}

DirectedReal epsilon_of_u(double u, Direction dir) {
  if (!(u >= 9551)) throw DomainError("epsilon(u) needs u >= 9551");
  return epsilon_of_u(Interval::point(u)).as(dir);
}

// h is nonincreasing, so its range over s is spanned by the endpoint values.
Interval h(const Interval& s) {
  if (!s.certainly_ge(1.0)) throw DomainError("h needs s >= 1");
  const Interval at_hi = h_point(endpoint(s.hi()));
  const Interval at_lo = h_point(endpoint(s.lo()));
  return Interval::bounds(at_hi.lo(), at_lo.hi());
}

DirectedReal h(double s, Direction dir) {
  if (!(s >= 1)) throw DomainError("h needs s >= 1");
  return h(Interval::point(s)).as(dir);
}

Interval big_f(const Interval& s) {
  if (!s.certainly_ge(1.0) || !s.certainly_le(3.0)) throw DomainError("F(s) needs 1 <= s <= 3");
  return 2 * exp(Interval::euler_gamma(work_bits(s))) / s;
}

DirectedReal big_f(double s, Direction dir) {
  if (!(s >= 1 && s <= 3)) throw DomainError("F(s) needs 1 <= s <= 3");
  return big_f(Interval::point(s)).as(dir);
}

// Increasing on [2, 4].
Interval small_f(const Interval& s) {
  if (!s.certainly_ge(2.0) || !s.certainly_le(4.0)) throw DomainError("f(s) needs 2 <= s <= 4");
  const Interval at_lo = small_f_point(endpoint(s.lo()));
  const Interval at_hi = small_f_point(endpoint(s.hi()));
  return Interval::bounds(at_lo.lo(), at_hi.hi());
}

DirectedReal small_f(double s, Direction dir) {
  if (!(s >= 2 && s <= 4)) throw DomainError("f(s) needs 2 <= s <= 4");
  return small_f(Interval::point(s)).as(dir);
}

Interval m_bilinear_log(const Interval& log_x, const Interval& log_y, const Interval& log_d) {
  const mpfr_prec_t b = std::max({work_bits(log_x), work_bits(log_y), work_bits(log_d)});
  const Interval log25 = log(Interval::integer(25, b));
  if (log_x.certainly_lt(log25)) throw DomainError("m needs X >= 25");
  if (log_y.certainly_lt(log_four_e18(b))) throw DomainError("m needs Y >= 4e18");
  if (log_d.certainly_lt(log(dec("1e9", b)))) throw DomainError("m needs D* >= 1e9");
  const Interval q = q_g_log(log_y);
  const Interval q13 = cbrt(q);
  const Interval q23 = square(q13);
  const Interval ly13 = cbrt(log_y);
  const Interval ld13 = cbrt(log_d);
  Interval m = dec("2.81", b) * q13;
  m += dec("2.809", b) / (q23 * exp(log_y / 2) * log_y);
  m += dec("1.721", b) * square(ld13) /
       (q13 * exp(2 * log_y / 3) * square(ly13) * log(log_d));
  m += dec("5.498", b) * (exp(-log_x / 2) + exp(-log_y / 2)) * exp(log_y / 6) * ld13 / ly13;
  m += dec("19.044", b) * exp(log_d - log_x - 5 * log_y / 6) * ld13 / ly13;
  return m;
}

DirectedReal m_bilinear(double x, double y, double dstar, Direction dir) {
  if (!(x >= 25)) throw DomainError("m needs X >= 25");
  if (!(y >= 4e18)) throw DomainError("m needs Y >= 4e18");
  if (!(dstar >= 1e9)) throw DomainError("m needs D* >= 1e9");
  return m_bilinear_log(log_of(x), log_of(y), log_of(dstar)).as(dir);
}

Interval bilinear_side_margin(const Interval& log_y, const Interval& log_d, const Interval& log_z) {
  const mpfr_prec_t b = std::max({work_bits(log_y), work_bits(log_d), work_bits(log_z)});
  const Interval inner = log_y / 2 + log(log_d) - log(q_g_log(log_y)) - log(log_y) -
                         log(Interval::log2(b));
  return log_z - 2 * inner / 3;
}

Interval EnvelopeFactor::value() const {
  return side == Side::lower ? center * (1 - relative_error) : center * (1 + relative_error);
}

EnvelopeFactor v_envelope_log(VExponent exponent, const Interval& L, Side side) {
  if (L.certainly_lt(log_four_e18(work_bits(L)))) throw DomainError("V envelope needs N >= 4e18");
  const mpfr_prec_t b = work_bits(L);
  if (exponent == VExponent::eighth) {
    return {8 / L, dec("0.62", b) * L / exp(L / 16), side};
  }
  return {3 / L, dec("0.06", b) * L / exp(L / 6), side};
}

EnvelopeFactor v_envelope(VExponent exponent, double n, Side side) {
  if (!(n >= 4e18)) throw DomainError("V envelope needs N >= 4e18");
  return v_envelope_log(exponent, log_of(n), side);
}

std::pair<Interval, Interval> a_envelope_log(const Interval& L) {
  const mpfr_prec_t b = work_bits(L);
  if (L.certainly_lt(exp(Interval::integer(15, b)))) throw DomainError("|A| envelope needs log N >= e^15");
  return {Interval::integer(1, b), 1 + dec("4e-7", b)};
}

}  // namespace chenbound
