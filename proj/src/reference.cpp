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

#include "chenbound/reference.hpp"

#include <cmath>
#include <limits>

namespace chenbound::reference {

using kernels::u128;

std::vector<u64> sieve_primes(u64 x) {
  std::vector<u64> out;
  if (x < 2) return out;
  std::vector<bool> comp(x + 1, false);
  for (u64 i = 2; i * i <= x; ++i) {
    if (comp[i]) continue;
    for (u64 j = i * i; j <= x; j += i) comp[j] = true;
  }
  for (u64 i = 2; i <= x; ++i) {
    if (!comp[i]) out.push_back(i);
  }
  return out;
}

u64 count_primes(u64 lo, u64 hi) {
  u64 c = 0;
  for (u64 p : sieve_primes(hi)) c += p >= lo;
  return c;
}

u64 pi_trial_division(u64 x) {
  u64 c = 0;
  for (u64 n = 2; n <= x; ++n) {
    bool prime = true;
    for (u64 d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    c += prime;
  }
  return c;
}

std::vector<std::pair<u64, int>> factorize_trial(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long double theta_long_double(u64 x) {
  long double s = 0;
  for (u64 p : sieve_primes(x)) s += std::log(static_cast<long double>(p));
  return s;
}

std::vector<kernels::ReciprocalSum> reciprocal_sums(const std::vector<u64>& bounds) {
  std::vector<kernels::ReciprocalSum> out(bounds.size());
  if (bounds.empty()) return out;
  const auto ps = sieve_primes(bounds.back());
  const u128 one = static_cast<u128>(1) << kernels::kReciprocalBits;
  kernels::ReciprocalSum acc;
  std::size_t k = 0;
  for (u64 p : ps) {
    while (k < bounds.size() && bounds[k] < p) out[k++] = acc;
    acc.floor_sum += one / p;
    ++acc.terms;
  }
  while (k < bounds.size()) out[k++] = acc;
  return out;
}

kernels::SquarefreeAccum squarefree_sums(u64 x) {
  // Linear sieve for phi and mu on [1, x].
  kernels::SquarefreeAccum acc;
  if (x < 1) return acc;
  std::vector<std::uint32_t> primes;
  std::vector<u64> phi(x + 1, 0);
  std::vector<signed char> mu(x + 1, 0);
  std::vector<bool> comp(x + 1, false);
  phi[1] = 1;
  mu[1] = 1;
  for (u64 i = 2; i <= x; ++i) {
    if (!comp[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      phi[i] = i - 1;
      mu[i] = -1;
    }
    for (std::uint32_t p : primes) {
      const u64 m = i * p;
      if (m > x) break;
      comp[m] = true;
      if (i % p == 0) {
        phi[m] = phi[i] * p;
        mu[m] = 0;
        break;
      }
      phi[m] = phi[i] * (p - 1);
      mu[m] = static_cast<signed char>(-mu[i]);
    }
  }
  const u128 one = static_cast<u128>(1) << 64;
  for (u64 n = 1; n <= x; ++n) {
    if (mu[n] == 0) continue;
    ++acc.count;
    acc.floor_sum += one / phi[n];
    if (one % phi[n] != 0) ++acc.inexact;
  }
  return acc;
}

kernels::GapScan gap_scan(u64 lo, u64 hi, u64 num, u64 den) {
  kernels::GapScan r;
  r.worst_margin = std::numeric_limits<double>::infinity();
  if (hi <= lo) return r;
  const auto ps = sieve_primes(hi);
  for (std::size_t i = 1; i < ps.size(); ++i) {
    const u64 p = ps[i - 1], q = ps[i];
    if (q <= lo) continue;
    ++r.pairs;
    const long double m = (static_cast<long double>(p) * den - static_cast<long double>(q) * num) /
                          (static_cast<long double>(p) * den);
    if (static_cast<u128>(q) * num > static_cast<u128>(p) * den) r.violations.emplace_back(p, q);
    if (static_cast<double>(m) < r.worst_margin) {
      r.worst_margin = static_cast<double>(m);
      r.worst_p = p;
      r.worst_q = q;
    }
  }
  return r;
}

}  // namespace chenbound::reference
