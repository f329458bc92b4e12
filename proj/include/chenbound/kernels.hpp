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

// Segmented sieve kernels. Each range is cut into fixed windows that are
// processed by an OpenMP team; per-window results land in slots indexed by
// window number and are merged in that order, so the outcome never depends
// on scheduling.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "chenbound/rigorous.hpp"

namespace chenbound::kernels {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Odd integers per prime-sieve window.
inline constexpr u64 kDefaultSegment = u64{1} << 20;
// Integers per arithmetic-function window.
inline constexpr u64 kArithmeticSegment = u64{1} << 16;

// Fixed-point fraction bits of prime reciprocal sums.
inline constexpr int kReciprocalBits = 124;

// All primes <= limit, by a plain sieve; used for base primes.
std::vector<std::uint32_t> small_primes(u64 limit);

// Primes in [a, b). `base` must hold every prime <= sqrt(b - 1).
void sieve_window(u64 a, u64 b, const std::vector<std::uint32_t>& base,
                  std::vector<std::uint8_t>& scratch, std::vector<u64>& out);

u64 isqrt(u64 n);

// Consecutive windows covering [lo, hi].
struct Windows {
  u64 lo;
  u64 hi;  // inclusive
  u64 span;

  Windows(u64 lo, u64 hi, u64 odd_per_window);
  std::size_t count() const;
  void bounds(std::size_t i, u64& a, u64& b) const;  // [a, b)
};

// Number of primes in [lo, hi].
u64 count_primes(u64 lo, u64 hi, u64 segment = kDefaultSegment);

// Primes in [lo, hi], ascending.
std::vector<u64> primes_in(u64 lo, u64 hi, u64 segment = kDefaultSegment);

// Enclosure of sum_{p <= x} log p, via exact per-window products.
Interval theta(u64 x, mpfr_prec_t bits, u64 segment = kDefaultSegment);

// Sum of floor(2^124 / p) over primes p <= bound, and the number of terms.
// The true sum times 2^124 lies in [floor_sum, floor_sum + terms].
struct ReciprocalSum {
  u128 floor_sum = 0;
  u64 terms = 0;
};

// One entry per bound in `bounds_sorted` (ascending): sum over p <= bound.
std::vector<ReciprocalSum> reciprocal_sums(const std::vector<u64>& bounds_sorted,
                                           u64 segment = kDefaultSegment);

Interval to_interval(const ReciprocalSum& s, mpfr_prec_t bits);

// Consecutive primes p < q with q in (lo, hi] and q * num > p * den.
struct GapScan {
  std::vector<std::pair<u64, u64>> violations;
  u64 pairs = 0;
  // Pair minimizing (p*den - q*num) / (p*den).
  u64 worst_p = 0;
  u64 worst_q = 0;
  double worst_margin = 0.0;
};
GapScan gap_scan(u64 lo, u64 hi, u64 num, u64 den, u64 segment = kDefaultSegment);

// Per-integer arithmetic data over a window.
struct ArithmeticWindow {
  u64 a = 0;
  std::vector<u64> phi;
  std::vector<std::uint8_t> omega;
  std::vector<std::uint8_t> big_omega;
  std::vector<std::uint8_t> squarefree;
};

// Fills the arrays (b - a entries each) for integers in [a, b), a >= 1.
// `base` holds all primes <= sqrt(b - 1); `prod` is scratch.
void arithmetic_window(u64 a, u64 b, const std::vector<std::uint32_t>& base, u64* phi,
                       std::uint8_t* omega, std::uint8_t* big_omega, std::uint8_t* squarefree,
                       u64* prod);

// Sum of mu^2(n) and of mu^2(n)/phi(n) over n <= x, the latter as 64-bit
// fixed point: true value * 2^64 in [floor_sum, floor_sum + inexact].
struct SquarefreeAccum {
  u64 count = 0;
  u128 floor_sum = 0;
  u64 inexact = 0;
};
SquarefreeAccum squarefree_sums(u64 x, u64 segment = kArithmeticSegment);

// Arithmetic data for every n in [1, x], concatenated.
ArithmeticWindow arithmetic_table(u64 x, u64 segment = kArithmeticSegment);

// Enclosure of sum over primes u <= p < z of log((p - 1) / (p - 2)).
Interval log_epsilon_product(u64 u, u64 z, mpfr_prec_t bits, u64 segment = kDefaultSegment);

// Sequential walk over the primes in [lo, hi], one window at a time.
void for_each_prime_block(u64 lo, u64 hi,
                          const std::function<void(const u64* primes, std::size_t n)>& visit,
                          u64 segment = kDefaultSegment);

}  // namespace chenbound::kernels
