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
#include <map>
#include <vector>

#include "chenbound/kernels.hpp"
#include "chenbound/report.hpp"

namespace chenbound {

using kernels::u64;

struct Pi2Counts {
  u64 pi2 = 0;             // primes p < n with n - p > 1 and Omega(n - p) <= 2
  u64 pi2_squarefree = 0;  // n - p squarefree with exactly two prime factors
};
// n even, 2 <= n <= limits().pi2.
Pi2Counts pi2_enumerate(u64 n);

struct SiftedCounts {
  u64 n = 0;
  double z = 0;  // n^(1/8)
  double y = 0;  // n^(1/3)
  u64 s_a = 0;
  std::map<u64, u64> s_aq;  // every prime q in [z, y) with q not dividing n
  u64 s_b = 0;
  u64 pi2 = 0;
  u64 pi2_squarefree = 0;

  u64 s_aq_total() const;
  // 2 pi2 - 2 S(A) + sum S(A_q) + S(B): the decomposition holds iff this
  // plus 4 n^(7/8) + 2 n^(1/3) is positive.
  std::int64_t doubled_core() const;
};

// Exact tables for every integer below a ceiling; shared by the desk-scale
// oracles.
class SmallTables {
 public:
  explicit SmallTables(u64 limit);
  u64 limit() const { return limit_; }
  bool is_prime(u64 m) const { return m >= 2 && spf_[m] == m; }
  std::uint32_t spf(u64 m) const { return spf_[m]; }
  std::uint8_t big_omega(u64 m) const { return big_omega_[m]; }
  bool squarefree(u64 m) const { return squarefree_[m] != 0; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  u64 limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint8_t> big_omega_;
  std::vector<std::uint8_t> squarefree_;
  std::vector<std::uint32_t> primes_;
};

// n even, 4 <= n <= limits().sifted.
SiftedCounts sifted_counts(u64 n);
SiftedCounts sifted_counts(u64 n, const SmallTables& tables);

// Even N in [lo, hi] with the given stride; lo >= 10^4, hi <= 10^6.
VerificationReport check_chen_decomposition(u64 lo, u64 hi, u64 stride = 2);

// Sum over p < x of 1/p against log log x + M (x <= 10^8) or
// log log x + M - 1.4998e-4 / log x (above). Samples are log-spaced over
// (lo, hi], with lo itself included when include_lo is set.
VerificationReport check_mertens(double lo, double hi, u64 samples, bool include_lo = true);

// prod_{u <= p < z} (p - 1)/(p - 2) < (1 + epsilon(u)) log z / log u for each
// pair with u < z. Informational: the bound is only claimed for z > e^1000.
VerificationReport check_epsilon_product(const std::vector<u64>& u_samples,
                                         const std::vector<u64>& z_samples);

// theta(p) <= p at every prime p <= xmax, which covers every real x in
// [2, xmax].
VerificationReport check_theta(u64 xmax);

// Both squarefree inequalities at x.
VerificationReport check_squarefree(u64 x);

// pi2(n) >= 1 and pi2 >= pi2_squarefree over even n in [lo, hi].
VerificationReport check_pi2(u64 lo, u64 hi, u64 stride = 2);

}  // namespace chenbound
