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

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <utility>

#include "chenbound/rigorous.hpp"

// Explicit bound functions. Every function has a log-space Interval form,
// taking L = log X where X may be far outside double range, and a
// convenience form on doubles returning a DirectedReal.
namespace chenbound {

// ---- linear sieve constants ------------------------------------------------

struct SieveConstantRow {
  int inv_epsilon;
  int c1;
  int c2;
};
inline constexpr std::size_t kSieveTableRows = 48;
const std::array<SieveConstantRow, kSieveTableRows>& sieve_table();
// FNV-1a over the rows; compared with the embedded value on first use.
std::uint64_t sieve_table_checksum();
extern const std::uint64_t kSieveTableChecksum;

struct SieveConstants {
  int c1;
  int c2;
  int row_inv_epsilon;
};
// Row with the largest inv_epsilon <= 1/epsilon. Needs 0 < epsilon < 1/63.
SieveConstants sieve_constants(const mpq_class& epsilon);
SieveConstants sieve_constants(double epsilon);
// Uses the upper end of the enclosure, which can only select an earlier row.
SieveConstants sieve_constants(const Interval& epsilon);

// ---- GRH error coefficients ------------------------------------------------

// log(4 * 10^18): the smallest admissible log X2.
Interval log_four_e18(mpfr_prec_t bits = default_bits());

Interval q_g_log(const Interval& log_x2);
Interval p_g_log(const Interval& log_x2);
Interval c_g_log(const Interval& log_x2);
DirectedReal q_g(double x2, Direction dir = Direction::up);
DirectedReal p_g(double x2, Direction dir = Direction::up);
DirectedReal c_g(double x2, Direction dir = Direction::up);

// ---- sieve ingredients -----------------------------------------------------

// (1 + 1/(0.996u - 1))(1 + 1.5e-4/log u + 2.25e-8/log^2 u)(1 + 1/(u-1) + 1/(u-1)^2) - 1
Interval epsilon_of_u(const Interval& u);
DirectedReal epsilon_of_u(double u, Direction dir = Direction::up);

// e^-2 on [1,2], e^-s on [2,3], 3 e^-s / s beyond.
Interval h(const Interval& s);
DirectedReal h(double s, Direction dir = Direction::up);

// 2 e^gamma / s on [1,3].
Interval big_f(const Interval& s);
DirectedReal big_f(double s, Direction dir = Direction::up);
// 2 e^gamma log(s - 1) / s on [2,4].
Interval small_f(const Interval& s);
DirectedReal small_f(double s, Direction dir = Direction::down);

// ---- bilinear form coefficient ---------------------------------------------

// m(X, Y, D*) with q = q_G(Y). Needs X, Y >= 25, D* >= 10^9 and Y >= 4e18
// (the range of q_G).
Interval m_bilinear_log(const Interval& log_x, const Interval& log_y, const Interval& log_dstar);
DirectedReal m_bilinear(double x, double y, double dstar, Direction dir = Direction::up);

// log Z - (2/3) log(sqrt(Y) log D* / (q_G(Y) log Y log 2)); the side
// condition holds iff this is >= 0.
Interval bilinear_side_margin(const Interval& log_y, const Interval& log_dstar,
                              const Interval& log_z);

// ---- envelopes -------------------------------------------------------------

enum class Side { lower, upper };
enum class VExponent { eighth, third };

// V(x) for x = N^{1/8} or N^{1/3}, as a multiple of U_N:
// center = 1/log x, value = center (1 -+ relative_error).
struct EnvelopeFactor {
  Interval center;
  Interval relative_error;
  Side side;
  Interval value() const;
};
EnvelopeFactor v_envelope_log(VExponent exponent, const Interval& log_n, Side side);
EnvelopeFactor v_envelope(VExponent exponent, double n, Side side);

// |A| between these multiples of N/log N. Needs N >= exp(exp(15)).
std::pair<Interval, Interval> a_envelope_log(const Interval& log_n);

}  // namespace chenbound
