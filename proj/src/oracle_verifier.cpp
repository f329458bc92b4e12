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

#include "chenbound/oracle_verifier.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

#include "chenbound/analytic_constants.hpp"
#include "chenbound/errors.hpp"
#include "chenbound/format.hpp"
#include "chenbound/lemma_bounds.hpp"
#include "chenbound/prime_toolkit.hpp"

namespace chenbound {
namespace {

using kernels::u128;

// q < n^(1/k) for integers, without floating point.
bool below_root(u64 q, u64 n, int k) {
  u128 v = 1;
  for (int i = 0; i < k; ++i) {
    v *= q;
    if (v >= n) return false;
  }
  return true;
}

double root(u64 n, double k) { return std::pow(static_cast<double>(n), 1.0 / k); }

std::string str(u64 v) { return std::to_string(v); }

long window_total(const kernels::Windows& w) { return static_cast<long>(w.count()); }

}  // namespace

u64 SiftedCounts::s_aq_total() const {
  u64 t = 0;
  for (const auto& [q, c] : s_aq) t += c;
  return t;
}

std::int64_t SiftedCounts::doubled_core() const {
  return 2 * static_cast<std::int64_t>(pi2) - 2 * static_cast<std::int64_t>(s_a) +
         static_cast<std::int64_t>(s_aq_total()) + static_cast<std::int64_t>(s_b);
}

SmallTables::SmallTables(u64 limit)
    : limit_(limit), spf_(limit + 1, 0), big_omega_(limit + 1, 0), squarefree_(limit + 1, 1) {
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes_) {
      const u64 m = i * p;
      if (p > spf_[i] || m > limit) break;
      spf_[m] = p;
    }
    const u64 rest = i / spf_[i];
    big_omega_[i] = static_cast<std::uint8_t>(big_omega_[rest] + 1);
    squarefree_[i] = squarefree_[rest] && rest % spf_[i] != 0;
  }
}

Pi2Counts pi2_enumerate(u64 n) {
  if (n % 2 != 0) throw DomainError("pi2 needs an even n");
  if (n < 2) throw DomainError("pi2 needs n >= 2");
  if (n > limits().pi2) throw ResourceError("pi2 beyond the configured limit");
  Pi2Counts out;
  if (n < 4) return out;
  // Primality of p = n - m for 2 <= p <= n - 2.
  std::vector<std::uint64_t> prime_bits((n >> 6) + 1, 0);
  kernels::for_each_prime_block(2, n - 2, [&](const u64* ps, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) prime_bits[ps[i] >> 6] |= u64{1} << (ps[i] & 63);
  });
  auto is_prime = [&](u64 p) { return (prime_bits[p >> 6] >> (p & 63)) & 1; };
  const kernels::Windows win(2, n - 2, kernels::kArithmeticSegment / 2);
  const auto base = kernels::small_primes(kernels::isqrt(n));
  std::vector<Pi2Counts> parts(win.count());
#pragma omp parallel
  {
    const auto cap = static_cast<std::size_t>(win.span);
    std::vector<u64> phi(cap), prod(cap);
    std::vector<std::uint8_t> om(cap), bom(cap), sq(cap);
#pragma omp for schedule(dynamic, 1)
    for (long i = 0; i < window_total(win); ++i) {
      u64 a, b;
      win.bounds(static_cast<std::size_t>(i), a, b);
      kernels::arithmetic_window(a, b, base, phi.data(), om.data(), bom.data(), sq.data(),
                                 prod.data());
      Pi2Counts c;
      for (u64 m = a; m < b; ++m) {
        const u64 j = m - a;
        if (bom[j] > 2 || !is_prime(n - m)) continue;
        ++c.pi2;
        if (bom[j] == 2 && sq[j]) ++c.pi2_squarefree;
      }
      parts[static_cast<std::size_t>(i)] = c;
    }
  }
  for (const auto& c : parts) {
    out.pi2 += c.pi2;
    out.pi2_squarefree += c.pi2_squarefree;
  }
  return out;
}

SiftedCounts sifted_counts(u64 n) {
  if (n % 2 != 0 || n < 4) throw DomainError("sifted counts need an even n >= 4");
  if (n > limits().sifted) throw ResourceError("sifted counts beyond the configured limit");
  return sifted_counts(n, SmallTables(n));
}

SiftedCounts sifted_counts(u64 n, const SmallTables& t) {
  if (n % 2 != 0 || n < 4) throw DomainError("sifted counts need an even n >= 4");
  if (n > t.limit()) throw ResourceError("tables too small for n");
  SiftedCounts s;
  s.n = n;
  s.z = root(n, 8);
  s.y = root(n, 3);
  std::vector<std::uint32_t> sift_z, sift_y;
  for (std::uint32_t q : t.primes()) {
    if (!below_root(q, n, 3)) break;
    if (n % q == 0) continue;
    sift_y.push_back(q);
    if (below_root(q, n, 8)) {
      sift_z.push_back(q);
    } else {
      s.s_aq[q] = 0;
    }
  }
  auto survives = [&](u64 m, const std::vector<std::uint32_t>& sieve) {
    for (std::uint32_t q : sieve) {
      if (m % q == 0) return false;
    }
    return true;
  };
  for (std::uint32_t p : t.primes()) {
    if (p >= n) break;
    const u64 m = n - p;
    if (m > 1 && t.big_omega(m) <= 2) {
      ++s.pi2;
      if (t.big_omega(m) == 2 && t.squarefree(m)) ++s.pi2_squarefree;
    }
    if (n % p == 0 || !survives(m, sift_z)) continue;
    ++s.s_a;
    for (u64 r = m; r > 1;) {
      const std::uint32_t q = t.spf(r);
      auto it = s.s_aq.find(q);
      if (it != s.s_aq.end()) ++it->second;
      while (r % q == 0) r /= q;
    }
  }
  // B: z <= p1 < y <= p2 <= p3, p1 p2 p3 < n, all coprime to n.
  const auto& ps = t.primes();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const u64 p1 = ps[i];
    if (!below_root(p1, n, 3)) break;
    if (below_root(p1, n, 8) || n % p1 == 0) continue;
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const u64 p2 = ps[j];
      if (p1 * p2 * p2 >= n) break;
      if (below_root(p2, n, 3) || n % p2 == 0) continue;
      for (std::size_t k = j; k < ps.size(); ++k) {
        const u64 p3 = ps[k];
        const u64 prod = p1 * p2 * p3;
        if (prod >= n) break;
        if (n % p3 == 0) continue;
        if (survives(n - prod, sift_y)) ++s.s_b;
      }
    }
  }
  return s;
}

VerificationReport check_chen_decomposition(u64 lo, u64 hi, u64 stride) {
  if (stride == 0 || stride % 2 != 0) throw DomainError("stride must be a positive even number");
  if (hi > limits().sifted) throw ResourceError("decomposition scan beyond the configured limit");
  VerificationReport rep;
  rep.check_id = "chen-decomposition";
  rep.range_lo = str(lo);
  rep.range_hi = str(hi);
  rep.notes = "pi2(N) > S(A) - S(A_q)/2 - S(B)/2 - 2N^(7/8) - N^(1/3), both sides exact";
  if (lo < 4) lo = 4;
  if (lo % 2) ++lo;
  if (lo > hi) return rep;
  if (lo < 10000) {
    rep.informational = true;
    rep.notes += "; range starts below 10^4 where no explicit validity is claimed";
  }
  const SmallTables tables(hi);
  const u64 count = (hi - lo) / stride + 1;
  struct Row {
    SiftedCounts s;
    Interval total;
  };
  std::vector<Row> rows(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < static_cast<long>(count); ++i) {
    const u64 n = lo + static_cast<u64>(i) * stride;
    Row r;
    r.s = sifted_counts(n, tables);
    const Interval nn = Interval::unsigned_integer(n, 128);
    const Interval slack = 4 * exp(log(nn) * 7 / 8) + 2 * cbrt(nn);
    r.total = Interval::integer(r.s.doubled_core(), 128) + slack;
    rows[static_cast<std::size_t>(i)] = std::move(r);
  }
  for (const auto& r : rows) {
    // pi2 - rhs is half of the shifted core.
    const Interval margin = r.total / 2;
    const Interval rhs = Interval::unsigned_integer(r.s.pi2, 128) - margin;
    rep.record("N=" + str(r.s.n), margin.lower_double(), str(r.s.pi2), rhs.to_string(12),
               !margin.certainly_positive());
  }
  return rep;
}

VerificationReport check_mertens(double lo, double hi, u64 samples, bool include_lo) {
  if (!(lo >= 3)) throw DomainError("Mertens scan needs x >= 3");
  if (!(hi >= lo)) throw DomainError("Mertens scan needs hi >= lo");
  if (hi > static_cast<double>(limits().sieve)) throw ResourceError("Mertens scan beyond the sieve limit");
  VerificationReport rep;
  rep.check_id = "mertens";
  rep.range_lo = shortest(lo);
  rep.range_hi = shortest(hi);
  rep.notes =
      "sum_{p<x} 1/p >= log log x + M for x <= 1e8, and >= log log x + M - 1.4998e-4/log x above; "
      "the upper-bound branch needs x > e^1000 and is not checked";
  if (samples == 0) return rep;
  std::vector<double> xs(samples);
  const double span = std::log(hi / lo);
  for (u64 i = 0; i < samples; ++i) {
    double f;
    if (include_lo) {
      f = samples == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(samples - 1);
    } else {
      f = static_cast<double>(i + 1) / static_cast<double>(samples);
    }
    xs[i] = lo * std::exp(span * f);
  }
  if (include_lo) xs.front() = lo;
  xs.back() = hi;
  std::vector<u64> bounds(samples);
  for (u64 i = 0; i < samples; ++i) bounds[i] = strict_floor(xs[i]);
  const auto sums = kernels::reciprocal_sums(bounds);
  const mpfr_prec_t bits = 160;
  const Interval m = rounded_literal(kMertensLiteral, bits);
  const Interval corr = Interval::decimal("1.4998e-4", bits);
  for (u64 i = 0; i < samples; ++i) {
    const Interval x = Interval::point(xs[i], bits);
    const Interval lx = log(x);
    Interval rhs = log(lx) + m;
    if (xs[i] > 1e8) rhs -= corr / lx;
    const Interval lhs = kernels::to_interval(sums[i], bits);
    const Interval margin = lhs - rhs;
    rep.record("x=" + shortest(xs[i]), margin.lower_double(), lhs.to_string(20), rhs.to_string(20),
               !margin.certainly_nonnegative());
  }
  return rep;
}

VerificationReport check_epsilon_product(const std::vector<u64>& u_samples,
                                         const std::vector<u64>& z_samples) {
  VerificationReport rep;
  rep.check_id = "epsilon-product";
  rep.informational = true;
  rep.notes =
      "prod_{u<=p<z} (1-1/(p-1))^-1 < (1+epsilon(u)) log z / log u; the statement assumes "
      "z > e^1000, so these are observations outside its hypothesis";
  if (u_samples.empty() || z_samples.empty()) return rep;
  rep.range_lo = str(*std::min_element(u_samples.begin(), u_samples.end()));
  rep.range_hi = str(*std::max_element(z_samples.begin(), z_samples.end()));
  const mpfr_prec_t bits = 160;
  for (u64 u : u_samples) {
    if (u < 9551) throw DomainError("epsilon product needs u >= 9551");
    for (u64 z : z_samples) {
      if (z <= u) continue;
      if (z > limits().sieve) throw ResourceError("epsilon product beyond the sieve limit");
      const Interval lhs = kernels::log_epsilon_product(u, z, bits);
      const Interval uu = Interval::unsigned_integer(u, bits);
      const Interval rhs =
          log1p(epsilon_of_u(uu)) + log(log(Interval::unsigned_integer(z, bits))) - log(log(uu));
      const Interval margin = rhs - lhs;
      rep.record("u=" + str(u) + ",z=" + str(z), margin.lower_double(), lhs.to_string(20),
                 rhs.to_string(20), !margin.certainly_positive());
    }
  }
  return rep;
}

VerificationReport check_theta(u64 xmax) {
  if (xmax > limits().sieve) throw ResourceError("theta scan beyond the sieve limit");
  VerificationReport rep;
  rep.check_id = "theta";
  rep.range_lo = "2";
  rep.range_hi = str(xmax);
  rep.notes =
      "theta(p) <= p at every prime p; long double running sum with an accumulated "
      "rounding allowance of 4 (k+1) LDBL_EPSILON theta after k primes";
  if (xmax < 2) return rep;
  long double theta = 0;
  u64 k = 0;
  double worst = std::numeric_limits<double>::infinity();
  u64 worst_p = 0;
  kernels::for_each_prime_block(2, xmax, [&](const u64* ps, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const u64 p = ps[i];
      theta += std::log(static_cast<long double>(p));
      ++k;
      const long double allowance = 4.0L * static_cast<long double>(k + 1) * LDBL_EPSILON * theta;
      const long double margin = static_cast<long double>(p) - theta - allowance;
      if (static_cast<double>(margin) < worst) {
        worst = static_cast<double>(margin);
        worst_p = p;
      }
      if (margin <= 0 && rep.violations.size() < 1000) {
        rep.violations.push_back({"p=" + str(p), shortest(static_cast<double>(theta)), str(p),
                                  std::min(static_cast<double>(margin), -DBL_TRUE_MIN)});
      }
    }
  });
  rep.points_checked = k;
  if (k > 0) {
    rep.worst_margin = worst;
    rep.worst_witness = "p=" + str(worst_p);
  }
  return rep;
}

VerificationReport check_squarefree(u64 x) {
  VerificationReport rep;
  rep.check_id = "squarefree";
  rep.range_lo = str(x);
  rep.range_hi = str(x);
  rep.notes = "sum mu^2(n) <= 0.608 x and sum mu^2(n)/phi(n) <= log x + 1.333 + 58/sqrt(x)";
  if (x < 1000000000ULL) {
    rep.informational = true;
    rep.notes += "; stated for x >= 10^9";
  }
  const SquarefreeSums s = squarefree_sums(x);
  const u128 lhs1 = static_cast<u128>(s.sum_mu2) * 1000;
  const u128 rhs1 = static_cast<u128>(x) * 608;
  const double m1 = (0.608 * static_cast<double>(x) - static_cast<double>(s.sum_mu2));
  rep.record("count@" + str(x), m1, str(s.sum_mu2), "0.608*" + str(x), lhs1 > rhs1);
  const mpfr_prec_t bits = 192;
  const Interval xx = Interval::unsigned_integer(x, bits);
  const Interval rhs2 = log(xx) + Interval::decimal("1.333", bits) + 58 / sqrt(xx);
  const Interval margin = rhs2 - s.sum_mu2_over_phi.with_bits(bits);
  rep.record("over_phi@" + str(x), margin.lower_double(), s.sum_mu2_over_phi.to_string(20),
             rhs2.to_string(20), !margin.certainly_nonnegative());
  return rep;
}

VerificationReport check_pi2(u64 lo, u64 hi, u64 stride) {
  if (stride == 0 || stride % 2 != 0) throw DomainError("stride must be a positive even number");
  VerificationReport rep;
  rep.check_id = "pi2";
  rep.range_lo = str(lo);
  rep.range_hi = str(hi);
  rep.notes = "pi2(n) >= 1 and pi2(n) >= squarefree semiprime count for even n";
  if (lo < 4) lo = 4;
  if (lo % 2) ++lo;
  if (lo > hi) return rep;
  const u64 count = (hi - lo) / stride + 1;
  std::vector<Pi2Counts> res(count);
  if (hi <= limits().sifted) {
    const SmallTables t(hi);
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(count); ++i) {
      const u64 n = lo + static_cast<u64>(i) * stride;
      Pi2Counts c;
      for (std::uint32_t p : t.primes()) {
        if (p >= n) break;
        const u64 m = n - p;
        if (m > 1 && t.big_omega(m) <= 2) {
          ++c.pi2;
          if (t.big_omega(m) == 2 && t.squarefree(m)) ++c.pi2_squarefree;
        }
      }
      res[static_cast<std::size_t>(i)] = c;
    }
  } else {
    for (u64 i = 0; i < count; ++i) res[i] = pi2_enumerate(lo + i * stride);
  }
  for (u64 i = 0; i < count; ++i) {
    const u64 n = lo + i * stride;
    const auto& c = res[i];
    const double margin = static_cast<double>(c.pi2) - 1.0;
    rep.record("n=" + str(n), margin, str(c.pi2), "1 and " + str(c.pi2_squarefree),
               c.pi2 < 1 || c.pi2 < c.pi2_squarefree);
  }
  return rep;
}

}  // namespace chenbound
