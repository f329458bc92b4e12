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

#include <cstdint>
#include <string>
#include <vector>

#include "chenbound/rigorous.hpp"

namespace chenbound {

// Reference decimal expansions (rounded to the last digit shown).
inline constexpr const char* kEulerGammaLiteral =
    "0.5772156649015328606065120900824024310421593359399235988057672348848677";
inline constexpr const char* kMertensLiteral =
    "0.2614972128476427837554268386086958590515666482611992061920642139249245";
inline constexpr const char* kTwinPrimeLiteral =
    "0.6601618158468695739278121100145557784326233602847334133194484233354056";

struct ConstantsBundle {
  int precision_digits;
  Bracket gamma;
  Bracket mertens_m;
  // prod_{p > 2} (1 - 1/(p-1)^2)
  Bracket twin_prime_product;
  // 2 e^gamma times the product above; the N-independent part of U_N.
  Bracket two_e_gamma_twin;
};

// Computed once per precision and shared; safe to call concurrently.
const ConstantsBundle& constants(int digits = default_digits());

// Enclosure of a decimal literal rounded in its last digit.
Interval rounded_literal(const char* text, mpfr_prec_t bits);

Interval euler_gamma_interval(mpfr_prec_t bits);
// gamma + sum_{k >= 2} mu(k) log zeta(k) / k with an explicit tail bound.
Interval mertens_constant_recomputed(mpfr_prec_t bits);

// Product over 2 < p <= p0 with the elementary tail envelope
// 1 - sum_{n > p0} 1/(n-1)^2 <= tail <= 1.
struct TruncatedTwinProduct {
  std::uint64_t p0;
  mpq_class partial;  // exact; only filled when p0 <= 10^4
  Interval partial_interval;
  Interval bracket;
};
TruncatedTwinProduct twin_prime_truncated(std::uint64_t p0, mpfr_prec_t bits = default_bits());

// Full-precision bracket: explicit product to a cutoff and the remaining
// logarithm expanded in prime zeta values.
Bracket twin_prime_product(int precision_digits);
Interval twin_prime_interval(mpfr_prec_t bits);

// prod_{p | N, p > 2} (p - 1)/(p - 2) for the given odd prime divisors.
struct UnFactor {
  mpq_class exact;
  Bracket bracket;
};
UnFactor u_n_factor(const std::vector<std::uint64_t>& odd_prime_divisors,
                    int digits = default_digits());

// Logarithmic integral, principal value from 0. Needs x >= 2.
DirectedReal li(double x, Direction dir);
Interval li_interval(const Interval& x, mpfr_prec_t bits = default_bits());

// integral_{1/8}^{1/3} log(2 - 3b) / (b (1 - b)) db, via its dilogarithm
// closed form.
Bracket cbar(int precision_digits);
Interval cbar_interval(mpfr_prec_t bits);
// The same integral enclosed by upper and lower Riemann sums; the
// integrand is decreasing on the range.
Interval cbar_riemann(std::uint64_t panels, mpfr_prec_t bits);

struct ConstantCheck {
  std::string name;
  bool ok;
  std::string detail;
};
// Cross-checks the literal constants against independent recomputation.
std::vector<ConstantCheck> verify_constants(int digits = default_digits());

}  // namespace chenbound
