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

#include "chenbound/kernels.hpp"

#include <gmpxx.h>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "chenbound/errors.hpp"
#include "chenbound/numtheory.hpp"

namespace chenbound::kernels {
namespace {

constexpr u64 kU64Max = std::numeric_limits<u64>::max();

long window_count(const Windows& w) { return static_cast<long>(w.count()); }

// Product of the given factors as one big integer, by a balanced tree.
mpz_class product_tree(const u64* xs, std::size_t n) {
  std::vector<mpz_class> level;
  u64 acc = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (acc > kU64Max / xs[i]) {
      level.emplace_back(static_cast<unsigned long>(acc));
      acc = xs[i];
    } else {
      acc *= xs[i];
    }
  }
  level.emplace_back(static_cast<unsigned long>(acc));
  while (level.size() > 1) {
    std::vector<mpz_class> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level.swap(next);
  }
  return level.front();
}

Interval log_of(const mpz_class& z, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_set_z(r.lo().raw(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi().raw(), z.get_mpz_t(), MPFR_RNDU);
  return log(r);
}

u64 ceil_multiple(u64 a, u64 p) { return (a + p - 1) / p * p; }

}  // namespace

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> small_primes(u64 limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<std::uint8_t> comp(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= limit; j += i) comp[j] = 1;
  }
  return out;
}

void sieve_window(u64 a, u64 b, const std::vector<std::uint32_t>& base,
                  std::vector<std::uint8_t>& scratch, std::vector<u64>& out) {
  out.clear();
  if (b <= a) return;
  if (a <= 2 && 2 < b) out.push_back(2);
  const u64 start = std::max<u64>(a | 1, 3);
  if (start >= b) return;
  const u64 n_odd = (b - start + 1) / 2;
  scratch.assign(n_odd, 1);
  for (std::uint32_t p32 : base) {
    const u64 p = p32;
    if (p == 2) continue;
    if (p * p >= b) break;
    u64 m = std::max(p * p, ceil_multiple(start, p));
    if ((m & 1) == 0) m += p;
    for (u64 j = (m - start) / 2; j < n_odd; j += p) scratch[j] = 0;
  }
  for (u64 j = 0; j < n_odd; ++j) {
    if (scratch[j]) out.push_back(start + 2 * j);
  }
}

Windows::Windows(u64 lo_, u64 hi_, u64 odd_per_window) : lo(lo_), hi(hi_), span(2 * odd_per_window) {
  if (span == 0) throw DomainError("segment size must be positive");
}

std::size_t Windows::count() const {
  if (hi < lo) return 0;
  return static_cast<std::size_t>((hi - lo) / span + 1);
}

void Windows::bounds(std::size_t i, u64& a, u64& b) const {
  a = lo + static_cast<u64>(i) * span;
  b = std::min(a + span, hi + 1);
}

u64 count_primes(u64 lo, u64 hi, u64 segment) {
  if (hi < 2 || hi < lo) return 0;
  const Windows win(lo, hi, segment);
  const auto base = small_primes(isqrt(hi));
  std::vector<u64> counts(win.count(), 0);
#pragma omp parallel
  {
    std::vector<std::uint8_t> scratch;
    std::vector<u64> ps;
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < window_count(win); ++i) {
      u64 a, b;
      win.bounds(static_cast<std::size_t>(i), a, b);
      sieve_window(a, b, base, scratch, ps);
      counts[static_cast<std::size_t>(i)] = ps.size();
    }
  }
  u64 total = 0;
  for (u64 c : counts) total += c;
  return total;
}

std::vector<u64> primes_in(u64 lo, u64 hi, u64 segment) {
  std::vector<u64> all;
  if (hi < 2 || hi < lo) return all;
  const Windows win(lo, hi, segment);
  const auto base = small_primes(isqrt(hi));
  std::vector<std::vector<u64>> parts(win.count());
#pragma omp parallel
  {
    std::vector<std::uint8_t> scratch;
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < window_count(win); ++i) {
      u64 a, b;
      win.bounds(static_cast<std::size_t>(i), a, b);
      sieve_window(a, b, base, scratch, parts[static_cast<std::size_t>(i)]);
    }
  }
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return all;
}

void for_each_prime_block(u64 lo, u64 hi,
                          const std::function<void(const u64*, std::size_t)>& visit,
                          u64 segment) {
  if (hi < 2 || hi < lo) return;
  const Windows win(lo, hi, segment);
  const auto base = small_primes(isqrt(hi));
  std::vector<std::uint8_t> scratch;
  std::vector<u64> ps;
  for (std::size_t i = 0; i < win.count(); ++i) {
    u64 a, b;
    win.bounds(i, a, b);
    sieve_window(a, b, base, scratch, ps);
    if (!ps.empty()) visit(ps.data(), ps.size());
  }
}

Interval theta(u64 x, mpfr_prec_t bits, u64 segment) {
  Interval total = Interval::integer(0, bits);
  if (x < 2) return total;
  const Windows win(2, x, segment);
  const auto base = small_primes(isqrt(x));
  std::vector<Interval> parts(win.count(), Interval(bits));
#pragma omp parallel
  {
    std::vector<std::uint8_t> scratch;
    std::vector<u64> ps;
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < window_count(win); ++i) {
      u64 a, b;
      win.bounds(static_cast<std::size_t>(i), a, b);
      sieve_window(a, b, base, scratch, ps);
      if (ps.empty()) continue;
      parts[static_cast<std::size_t>(i)] = log_of(product_tree(ps.data(), ps.size()), bits);
    }
  }
  for (const auto& p : parts) total += p;
  return total;
}

std::vector<ReciprocalSum> reciprocal_sums(const std::vector<u64>& bounds, u64 segment) {
  std::vector<ReciprocalSum> out(bounds.size());
  if (bounds.empty()) return out;
  if (!std::is_sorted(bounds.begin(), bounds.end())) {
    throw DomainError("reciprocal_sums expects ascending bounds");
  }
  const u64 top = bounds.back();
  if (top < 2) return out;
  const Windows win(2, top, segment);
  const auto base = small_primes(isqrt(top));
  const u128 one = static_cast<u128>(1) << kReciprocalBits;
  std::vector<ReciprocalSum> totals(win.count());
#pragma omp parallel
  {
    std::vector<std::uint8_t> scratch;
    std::vector<u64> ps;
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < window_count(win); ++i) {
      u64 a, b;
      win.bounds(static_cast<std::size_t>(i), a, b);
      sieve_window(a, b, base, scratch, ps);
      auto k = static_cast<std::size_t>(std::lower_bound(bounds.begin(), bounds.end(), a) -
                                        bounds.begin());
      ReciprocalSum acc;
      for (u64 p : ps) {
        while (k < bounds.size() && bounds[k] < p) out[k++] = acc;
        acc.floor_sum += one / p;
        ++acc.terms;
      }
      while (k < bounds.size() && bounds[k] < b) out[k++] = acc;
      totals[static_cast<std::size_t>(i)] = acc;
    }
  }
  // Prefix over windows, in window order.
  ReciprocalSum carry;
  std::size_t k = 0;
  while (k < bounds.size() && bounds[k] < 2) ++k;
  for (std::size_t i = 0; i < win.count(); ++i) {
    u64 a, b;
    win.bounds(i, a, b);
    for (; k < bounds.size() && bounds[k] < b; ++k) {
      out[k].floor_sum += carry.floor_sum;
      out[k].terms += carry.terms;
    }
    carry.floor_sum += totals[i].floor_sum;
    carry.terms += totals[i].terms;
  }
  return out;
}

Interval to_interval(const ReciprocalSum& s, mpfr_prec_t bits) {
  const mpfr_prec_t p = std::max<mpfr_prec_t>(bits, 192);
  auto load = [p](u128 v, mpfr_ptr out) {
    mpfr_set_uj(out, static_cast<u64>(v >> 64), MPFR_RNDN);
    mpfr_mul_2ui(out, out, 64, MPFR_RNDN);
    BigFloat lo_part(p);
    mpfr_set_uj(lo_part.raw(), static_cast<u64>(v), MPFR_RNDN);
    mpfr_add(out, out, lo_part.raw(), MPFR_RNDN);  // exact at >= 130 bits
    mpfr_div_2ui(out, out, kReciprocalBits, MPFR_RNDN);
  };
  Interval r(p);
  load(s.floor_sum, r.lo().raw());
  load(s.floor_sum + s.terms, r.hi().raw());
  return r.with_bits(bits);
}

GapScan gap_scan(u64 lo, u64 hi, u64 num, u64 den, u64 segment) {
  GapScan result;
  result.worst_margin = std::numeric_limits<double>::infinity();
  if (hi <= lo || num == 0 || num >= den) return result;
  u64 start = lo;
  while (start >= 2 && !is_prime_u64(start)) --start;
  if (start < 2) start = 2;

  struct Part {
    u64 first = 0, last = 0, pairs = 0, wp = 0, wq = 0;
    double worst = std::numeric_limits<double>::infinity();
    std::vector<std::pair<u64, u64>> bad;
  };
  auto margin = [num, den](u64 p, u64 q) {
    const __int128 pd = static_cast<__int128>(p) * den;
    const __int128 qn = static_cast<__int128>(q) * num;
    return static_cast<double>(static_cast<long double>(pd - qn) / static_cast<long double>(pd));
  };
  auto violated = [num, den](u64 p, u64 q) {
    return static_cast<u128>(q) * num > static_cast<u128>(p) * den;
  };
  auto take = [&](Part& part, u64 p, u64 q) {
    if (q <= lo || q > hi) return;
    ++part.pairs;
    double m = margin(p, q);
    bool bad = violated(p, q);
    if (bad && m >= 0) m = -std::numeric_limits<double>::denorm_min();
    if (!bad && m < 0) m = 0;
    if (m < part.worst) {
      part.worst = m;
      part.wp = p;
      part.wq = q;
    }
    if (bad) part.bad.emplace_back(p, q);
  };

  const Windows win(start, hi, segment);
  const auto base = small_primes(isqrt(hi));
  std::vector<Part> parts(win.count());
#pragma omp parallel
  {
    std::vector<std::uint8_t> scratch;
    std::vector<u64> ps;
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < window_count(win); ++i) {
      u64 a, b;
      win.bounds(static_cast<std::size_t>(i), a, b);
      sieve_window(a, b, base, scratch, ps);
      Part& part = parts[static_cast<std::size_t>(i)];
      if (ps.empty()) continue;
      part.first = ps.front();
      part.last = ps.back();
      for (std::size_t j = 1; j < ps.size(); ++j) take(part, ps[j - 1], ps[j]);
    }
  }
  Part merged;
  u64 prev = 0;
  for (auto& part : parts) {
    if (part.first == 0) continue;
    if (prev != 0) take(merged, prev, part.first);
    merged.pairs += part.pairs;
    if (part.worst < merged.worst) {
      merged.worst = part.worst;
      merged.wp = part.wp;
      merged.wq = part.wq;
    }
    merged.bad.insert(merged.bad.end(), part.bad.begin(), part.bad.end());
    prev = part.last;
  }
  std::sort(merged.bad.begin(), merged.bad.end());
  result.violations = std::move(merged.bad);
  result.pairs = merged.pairs;
  result.worst_p = merged.wp;
  result.worst_q = merged.wq;
  result.worst_margin = merged.worst;
  return result;
}

void arithmetic_window(u64 a, u64 b, const std::vector<std::uint32_t>& base, u64* phi,
                       std::uint8_t* omega, std::uint8_t* big_omega, std::uint8_t* squarefree,
                       u64* prod) {
  const u64 n = b - a;
  std::fill(phi, phi + n, 1);
  std::fill(prod, prod + n, 1);
  std::fill(omega, omega + n, 0);
  std::fill(big_omega, big_omega + n, 0);
  std::fill(squarefree, squarefree + n, 1);
  const u64 top = b - 1;
  for (std::uint32_t p32 : base) {
    const u64 p = p32;
    if (p * p > top) break;
    for (u64 m = ceil_multiple(a, p); m < b; m += p) {
      const u64 j = m - a;
      prod[j] *= p;
      phi[j] *= p - 1;
      ++omega[j];
      ++big_omega[j];
    }
    for (u64 pk = p * p;;) {
      for (u64 m = ceil_multiple(a, pk); m < b; m += pk) {
        const u64 j = m - a;
        prod[j] *= p;
        phi[j] *= p;
        ++big_omega[j];
        squarefree[j] = 0;
      }
      if (pk > top / p) break;
      pk *= p;
    }
  }
  // What is left after removing all primes <= sqrt(b - 1) is 1 or a prime.
  const bool exact_double = b < (u64{1} << 53);
  for (u64 j = 0; j < n; ++j) {
    const u64 v = a + j;
    const u64 q = exact_double
                      ? static_cast<u64>(static_cast<double>(v) / static_cast<double>(prod[j]))
                      : v / prod[j];
    if (q > 1) {
      phi[j] *= q - 1;
      ++omega[j];
      ++big_omega[j];
    }
  }
}

SquarefreeAccum squarefree_sums(u64 x, u64 segment) {
  SquarefreeAccum total;
  if (x < 1) return total;
  const Windows win(1, x, (segment + 1) / 2);
  const auto base = small_primes(isqrt(x));
  std::vector<SquarefreeAccum> parts(win.count());
#pragma omp parallel
  {
    const std::size_t cap = static_cast<std::size_t>(win.span);
    std::vector<u64> phi(cap), prod(cap);
    std::vector<std::uint8_t> om(cap), bom(cap), sq(cap);
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < window_count(win); ++i) {
      u64 a, b;
      win.bounds(static_cast<std::size_t>(i), a, b);
      arithmetic_window(a, b, base, phi.data(), om.data(), bom.data(), sq.data(), prod.data());
      SquarefreeAccum acc;
      for (u64 j = 0; j < b - a; ++j) {
        if (!sq[j]) continue;
        ++acc.count;
        const u64 f = phi[j];
        if (f == 1) {
          acc.floor_sum += static_cast<u128>(1) << 64;
        } else if ((f & (f - 1)) == 0) {
          acc.floor_sum += (kU64Max / f) + 1;
        } else {
          acc.floor_sum += kU64Max / f;
          ++acc.inexact;
        }
      }
      parts[static_cast<std::size_t>(i)] = acc;
    }
  }
  for (const auto& p : parts) {
    total.count += p.count;
    total.floor_sum += p.floor_sum;
    total.inexact += p.inexact;
  }
  return total;
}

ArithmeticWindow arithmetic_table(u64 x, u64 segment) {
  ArithmeticWindow t;
  t.a = 1;
  if (x < 1) return t;
  t.phi.resize(x);
  t.omega.resize(x);
  t.big_omega.resize(x);
  t.squarefree.resize(x);
  const Windows win(1, x, (segment + 1) / 2);
  const auto base = small_primes(isqrt(x));
#pragma omp parallel
  {
    std::vector<u64> prod(static_cast<std::size_t>(win.span));
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < window_count(win); ++i) {
      u64 a, b;
      win.bounds(static_cast<std::size_t>(i), a, b);
      const u64 off = a - 1;
      arithmetic_window(a, b, base, t.phi.data() + off, t.omega.data() + off,
                        t.big_omega.data() + off, t.squarefree.data() + off, prod.data());
    }
  }
  return t;
}

Interval log_epsilon_product(u64 u, u64 z, mpfr_prec_t bits, u64 segment) {
  if (u <= 2 && z > 2) throw DomainError("epsilon product needs u >= 3");
  Interval total = Interval::integer(0, bits);
  if (z <= u) return total;
  const u64 lo = u;
  const u64 hi = z - 1;
  if (hi < lo) return total;
  const Windows win(lo, hi, segment);
  const auto base = small_primes(isqrt(hi));
  std::vector<Interval> parts(win.count(), Interval(bits));
#pragma omp parallel
  {
    std::vector<std::uint8_t> scratch;
    std::vector<u64> ps, nums, dens;
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < window_count(win); ++i) {
      u64 a, b;
      win.bounds(static_cast<std::size_t>(i), a, b);
      sieve_window(a, b, base, scratch, ps);
      if (ps.empty()) continue;
      nums.clear();
      dens.clear();
      for (u64 p : ps) {
        nums.push_back(p - 1);
        dens.push_back(p - 2);
      }
      parts[static_cast<std::size_t>(i)] =
          log_of(product_tree(nums.data(), nums.size()), bits) -
          log_of(product_tree(dens.data(), dens.size()), bits);
    }
  }
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace chenbound::kernels
