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

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "chenbound/kernels.hpp"
#include "chenbound/report.hpp"
#include "chenbound/rigorous.hpp"

namespace chenbound {

using kernels::u64;

// Process-wide ceilings for table-backed operations.
struct Limits {
  u64 sieve = 1'000'000'000'000ULL;
  u64 squarefree = 10'000'000'000ULL;
  u64 pi2 = 100'000'000ULL;
  u64 sifted = 1'000'000ULL;
};
Limits& limits();

// Primes in [lo, hi] produced window by window; memory is O(segment + sqrt(hi)).
class PrimeTable {
 public:
  PrimeTable(u64 lo, u64 hi, u64 segment_size = kernels::kDefaultSegment);

  u64 lo() const { return lo_; }
  u64 hi() const { return hi_; }
  u64 segment_size() const { return segment_; }

  // Visits every prime once, ascending, in blocks.
  void for_each_block(const std::function<void(const u64*, std::size_t)>& visit) const;
  void for_each(const std::function<void(u64)>& visit) const;
  std::vector<u64> primes() const;
  u64 count() const;

 private:
  u64 lo_;
  u64 hi_;
  u64 segment_;
};

std::vector<u64> primes_up_to(u64 x);

// sum_{p <= x} log p.
DirectedReal theta(double x, Direction dir = Direction::up);
Interval theta_interval(u64 x, mpfr_prec_t bits = default_bits());

// sum_{p < x} 1/p.
DirectedReal mertens_sum(double x, Direction dir = Direction::down);
Interval mertens_sum_interval(double x, mpfr_prec_t bits = default_bits());
// Largest integer m with m < x.
u64 strict_floor(double x);

struct ArithmeticSnapshot {
  u64 n = 0;
  int omega = 0;
  int big_omega = 0;
  int mu_squared = 0;
  u64 phi = 0;
};
ArithmeticSnapshot arithmetic_snapshot(u64 n);

struct SquarefreeSums {
  u64 x = 0;
  u64 sum_mu2 = 0;
  Interval sum_mu2_over_phi;
  DirectedReal over_phi(Direction dir) const { return sum_mu2_over_phi.as(dir); }
};
SquarefreeSums squarefree_sums(u64 x);

// Exact ratio num/den, parsed from a decimal literal such as "0.996".
struct Ratio {
  u64 num = 0;
  u64 den = 1;
  static Ratio parse(std::string_view decimal);
  static Ratio from_double(double r);
  std::string str() const;
};

// A pair of consecutive primes p < q with q > p / ratio leaves the real
// interval (p / ratio, q) without a prime in [ratio * x, x]; conversely any
// such x lies in such a gap. Pairs are therefore a finite certificate.
VerificationReport prime_gap_scan(u64 lo, u64 hi, Ratio ratio);
VerificationReport prime_gap_scan(u64 lo, u64 hi, double ratio);

}  // namespace chenbound
