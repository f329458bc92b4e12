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

#include "chenbound/analytic_constants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "chenbound/errors.hpp"
#include "chenbound/kernels.hpp"
#include "chenbound/numtheory.hpp"

namespace chenbound {
namespace {

int moebius(std::uint64_t k) {
  int mu = 1;
  for (const auto& [p, e] : factorize_u64(k)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

// 2^e as an exact interval (e may be negative).
Interval pow2(long e, mpfr_prec_t bits) {
  Interval r(bits);
  mpfr_set_ui_2exp(r.lo().raw(), 1, e, MPFR_RNDD);
  mpfr_set_ui_2exp(r.hi().raw(), 1, e, MPFR_RNDU);
  return r;
}

Interval symmetric(const Interval& radius) {
  return hull(-radius, radius);
}

class LogZeta {
 public:
  explicit LogZeta(mpfr_prec_t bits) : bits_(bits) {}
  const Interval& operator()(unsigned long s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    Interval z(bits_);
    mpfr_zeta_ui(z.lo().raw(), s, MPFR_RNDD);
    mpfr_zeta_ui(z.hi().raw(), s, MPFR_RNDU);
    return cache_.emplace(s, log(z)).first->second;
  }

 private:
  mpfr_prec_t bits_;
  std::map<unsigned long, Interval> cache_;
};

// li(e^L) by the power series in L; every term increases with L, so an
// interval L is handled directly.
Interval li_series_from_log(const Interval& L, mpfr_prec_t bits) {
  const mpfr_prec_t wp = bits + 20;
  const Interval Lw = L.with_bits(wp);
  Interval sum = euler_gamma_interval(wp) + log(Lw);
  Interval t = Interval::integer(1, wp);
  const double two_l = 2.0 * Lw.upper_double();
  const Interval eps = pow2(-static_cast<long>(bits) - 10, wp);
  for (std::int64_t k = 1;; ++k) {
    t = t * Lw / k;
    sum += t / k;
    if (static_cast<double>(k) > two_l + 1 && t.certainly_lt(eps * sum)) {
      // Terms after this one shrink by at least half each, so the rest is
      // at most the current t.
      sum += hull(Interval::integer(0, wp), t);
      break;
    }
    if (k > 100000) throw DomainError("li series failed to converge");
  }
  return sum.with_bits(bits);
}

// li(e^L) for a thin L > 1000 by repeated integration by parts from
// a = e^{2(n+1)}.
Interval li_asymptotic_from_log(const Interval& L, mpfr_prec_t bits) {
  const mpfr_prec_t wp = bits + 40;
  const Interval Lw = L.with_bits(wp);
  const double l = Lw.lower_double();
  int n = 49;
  for (int k = 1; k <= 49; ++k) {
    if (std::log(2.0) + std::lgamma(k + 1.0) - k * std::log(l) <
        -(static_cast<double>(bits) + 10) * std::log(2.0)) {
      n = k;
      break;
    }
  }
  const Interval La = Interval::integer(2 * (n + 1), wp);
  const Interval x = exp(Lw);
  const Interval a = exp(La);
  Interval sum = li_series_from_log(La, wp);
  Interval fact = Interval::integer(1, wp);
  Interval lx = Lw, la = La;  // L^{k+1}
  for (int k = 0; k < n; ++k) {
    if (k > 0) fact = fact * k;
    sum += fact * (x / lx - a / la);
    lx = lx * Lw;
    la = la * La;
  }
  fact = fact * n;  // n!
  const Interval rem = 2 * fact * x / lx;
  sum += hull(Interval::integer(0, wp), rem);
  return sum.with_bits(bits);
}

Interval li_from_log(const Interval& L, mpfr_prec_t bits) {
  if (L.upper_double() <= 1000.0) return li_series_from_log(L, bits);
  return li_asymptotic_from_log(L, bits);
}

}  // namespace

Interval rounded_literal(const char* text, mpfr_prec_t bits) {
  std::string s(text);
  const auto dot = s.find('.');
  const std::size_t places = dot == std::string::npos ? 0 : s.size() - dot - 1;
  const Interval ulp = Interval::decimal("1e-" + std::to_string(places), bits);
  const Interval mid = Interval::decimal(s, bits);
  return mid + symmetric(ulp);
}

Interval euler_gamma_interval(mpfr_prec_t bits) { return Interval::euler_gamma(bits); }

Interval mertens_constant_recomputed(mpfr_prec_t bits) {
  const mpfr_prec_t wp = bits + 32;
  LogZeta log_zeta(wp);
  Interval sum = euler_gamma_interval(wp);
  const long K = static_cast<long>(bits) + 10;
  for (long k = 2; k <= K; ++k) {
    const int mu = moebius(static_cast<std::uint64_t>(k));
    if (mu == 0) continue;
    sum += Interval::integer(mu, wp) * log_zeta(static_cast<unsigned long>(k)) / k;
  }
  // |sum_{k > K} mu(k) log zeta(k) / k| <= sum_{k > K} 2^{1-k} = 2^{1-K}.
  sum += symmetric(pow2(1 - K, wp));
  return sum.with_bits(bits);
}

TruncatedTwinProduct twin_prime_truncated(std::uint64_t p0, mpfr_prec_t bits) {
  if (p0 < 3) throw DomainError("twin_prime_truncated needs p0 >= 3");
  TruncatedTwinProduct t{p0, mpq_class(1), Interval::integer(1, bits), Interval(bits)};
  const bool exact = p0 <= 10000;
  for (std::uint32_t p : kernels::small_primes(p0)) {
    if (p == 2) continue;
    const std::int64_t d = static_cast<std::int64_t>(p) - 1;
    if (exact) t.partial *= mpq_class(d * d - 1, d * d);
    t.partial_interval = t.partial_interval * Interval::rational(d * d - 1, d * d, bits);
  }
  if (exact) t.partial.canonicalize();
  // 0 <= sum_{n > p0} 1/(n-1)^2 <= 1/(p0 - 1)
  const Interval tail_lo = 1 - Interval::rational(1, static_cast<std::int64_t>(p0) - 1, bits);
  t.bracket = hull(t.partial_interval * tail_lo, t.partial_interval);
  return t;
}

Interval twin_prime_interval(mpfr_prec_t bits) {
  constexpr std::uint64_t kP0 = 1000;
  const mpfr_prec_t wp = 2 * bits + 64;
  const auto primes = kernels::small_primes(kP0);
  Interval log_c = Interval::integer(0, wp);
  for (std::uint32_t p : primes) {
    if (p == 2) continue;
    const std::int64_t d = static_cast<std::int64_t>(p) - 1;
    log_c += log1p(-Interval::rational(1, d * d, wp));
  }
  // log(1 - 1/(p-1)^2) = sum_{m >= 2} (2 - 2^m)/m p^{-m}, summed over p > P0
  // through P(m) = sum_k mu(k)/k log zeta(k m).
  LogZeta log_zeta(wp);
  const double per_m = std::log2(static_cast<double>(kP0) / 2.0);
  const long M = static_cast<long>(std::ceil((static_cast<double>(bits) + 20) / per_m)) + 1;
  for (long m = 2; m <= M; ++m) {
    const long K = static_cast<long>(std::ceil((static_cast<double>(wp) + 10) / m)) + 1;
    Interval prime_zeta = Interval::integer(0, wp);
    for (long k = 1; k <= K; ++k) {
      const int mu = moebius(static_cast<std::uint64_t>(k));
      if (mu == 0) continue;
      prime_zeta += Interval::integer(mu, wp) * log_zeta(static_cast<unsigned long>(k * m)) / k;
    }
    // sum_{k > K} log zeta(k m)/k <= sum_{k > K} 2^{1 - k m} <= 2^{2 - (K+1) m}
    prime_zeta += symmetric(pow2(2 - (K + 1) * m, wp));
    Interval head = Interval::integer(0, wp);
    for (std::uint32_t p : primes) head += pow(Interval::integer(p, wp), -m);
    const Interval beyond = prime_zeta - head;
    log_c += (2 - pow2(m, wp)) / m * beyond;
  }
  // |term_m| <= P0 (2/P0)^m, geometric with ratio <= 1/2.
  const Interval ratio = Interval::rational(2, kP0, wp);
  const Interval rest = 2 * Interval::integer(kP0, wp) * pow(ratio, M + 1);
  log_c += symmetric(rest);
  return exp(log_c).with_bits(bits);
}

Bracket twin_prime_product(int precision_digits) {
  if (precision_digits < 10) throw DomainError("twin_prime_product needs >= 10 digits");
  return Bracket::of(twin_prime_interval(digits_to_bits(precision_digits + 4)), precision_digits);
}

const ConstantsBundle& constants(int digits) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ConstantsBundle>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(digits);
  if (it != cache.end()) return *it->second;
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const bool literal_ok = digits + 10 <= 66;
  const Interval gamma =
      literal_ok ? rounded_literal(kEulerGammaLiteral, bits) : euler_gamma_interval(bits);
  const Interval mm =
      literal_ok ? rounded_literal(kMertensLiteral, bits) : mertens_constant_recomputed(bits);
  const Interval twin = twin_prime_interval(bits);
  const Interval k = 2 * exp(gamma) * twin;
  auto bundle = std::make_unique<ConstantsBundle>(ConstantsBundle{
      digits, Bracket::of(gamma, digits), Bracket::of(mm, digits), Bracket::of(twin, digits),
      Bracket::of(k, digits)});
  return *cache.emplace(digits, std::move(bundle)).first->second;
}

UnFactor u_n_factor(const std::vector<std::uint64_t>& divisors, int digits) {
  std::set<std::uint64_t> uniq(divisors.begin(), divisors.end());
  mpq_class q(1);
  for (std::uint64_t p : uniq) {
    if (p == 2 || !is_prime_u64(p)) {
      throw DomainError("u_n_factor needs odd primes, got " + std::to_string(p));
    }
    q *= mpq_class(mpz_class(static_cast<unsigned long>(p - 1)),
                   mpz_class(static_cast<unsigned long>(p - 2)));
  }
  q.canonicalize();
  Interval r(digits_to_bits(digits));
  mpfr_set_q(r.lo().raw(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi().raw(), q.get_mpq_t(), MPFR_RNDU);
  return UnFactor{q, Bracket::of(r, digits)};
}

Interval li_interval(const Interval& x, mpfr_prec_t bits) {
  if (mpfr_cmp_ui(x.lo().raw(), 2) < 0) throw DomainError("li needs x >= 2");
  const mpfr_prec_t wp = bits + 16;
  Interval lo_pt(wp), hi_pt(wp);
  mpfr_set(lo_pt.lo().raw(), x.lo().raw(), MPFR_RNDD);
  mpfr_set(lo_pt.hi().raw(), x.lo().raw(), MPFR_RNDU);
  mpfr_set(hi_pt.lo().raw(), x.hi().raw(), MPFR_RNDD);
  mpfr_set(hi_pt.hi().raw(), x.hi().raw(), MPFR_RNDU);
  const Interval a = li_from_log(log(lo_pt), wp);
  const Interval b = li_from_log(log(hi_pt), wp);
  return Interval::bounds(a.lo(), b.hi()).with_bits(bits);
}

DirectedReal li(double x, Direction dir) {
  if (!(x >= 2)) throw DomainError("li needs x >= 2");
  return li_interval(Interval::point(x)).as(dir);
}

Interval cbar_interval(mpfr_prec_t bits) {
  const mpfr_prec_t wp = bits + 20;
  const Interval l2 = Interval::log2(wp);
  const Interval pi = Interval::pi(wp);
  const Interval l83 = log(Interval::rational(8, 3, wp));
  const Interval l218 = log(Interval::rational(21, 8, wp));
  const Interval c = l2 * l83 - square(pi) / 6 + square(l2) / 2 +
                     li2(Interval::rational(3, 16, wp)) + li2(Interval::rational(8, 21, wp)) +
                     square(l218) / 2;
  return c.with_bits(bits);
}

Bracket cbar(int precision_digits) {
  if (precision_digits < 10) throw DomainError("cbar needs >= 10 digits");
  return Bracket::of(cbar_interval(digits_to_bits(precision_digits + 4)), precision_digits);
}

Interval cbar_riemann(std::uint64_t panels, mpfr_prec_t bits) {
  if (panels == 0) throw DomainError("cbar_riemann needs at least one panel");
  const auto n = static_cast<std::int64_t>(panels);
  BigFloat lower(bits), upper(bits);
  for (std::int64_t i = 0; i <= n; ++i) {
    const Interval b = Interval::rational(3 * n + 5 * i, 24 * n, bits);
    const Interval g = log(2 - 3 * b) / (b * (1 - b));
    if (i >= 1) mpfr_add(lower.raw(), lower.raw(), g.lo().raw(), MPFR_RNDD);
    if (i < n) mpfr_add(upper.raw(), upper.raw(), g.hi().raw(), MPFR_RNDU);
  }
  const Interval h = Interval::rational(5, 24 * n, bits);
  return h * Interval::bounds(lower, upper);
}

std::vector<ConstantCheck> verify_constants(int digits) {
  std::vector<ConstantCheck> out;
  const mpfr_prec_t bits = digits_to_bits(digits + 10);
  const auto& c = constants(digits);
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  const Interval g_lit = rounded_literal(kEulerGammaLiteral, bits);
  const Interval g_lib = euler_gamma_interval(bits);
  add("gamma", g_lit.overlaps(g_lib), "literal " + g_lit.to_string(30) + " vs " + g_lib.to_string(30));
  const Interval m_lit = rounded_literal(kMertensLiteral, bits);
  const Interval m_rec = mertens_constant_recomputed(bits);
  add("mertens_M", m_lit.overlaps(m_rec), "literal " + m_lit.to_string(30) + " vs " + m_rec.to_string(30));
  const Interval t_lit = rounded_literal(kTwinPrimeLiteral, bits);
  const Interval twin = c.twin_prime_product.interval();
  add("twin_prime_product", t_lit.overlaps(twin) && twin.certainly_gt(0.66016) && twin.certainly_lt(0.66017),
      "computed " + twin.to_string(30));
  const Interval k = c.two_e_gamma_twin.interval();
  add("two_e_gamma_twin", k.certainly_gt(2.351) && k.certainly_lt(2.353), "computed " + k.to_string(30));
  const double widest = std::max({c.gamma.width(), c.mertens_m.width(), c.twin_prime_product.width(),
                                  c.two_e_gamma_twin.width()});
  add("bracket_widths", widest <= 1e-20, "widest bracket " + std::to_string(widest));
  const Interval cb = cbar_interval(bits);
  const Interval riemann = cbar_riemann(4096, bits);
  add("cbar", riemann.contains(cb) && cb.certainly_lt(0.363084),
      "closed form " + cb.to_string(30) + " inside Riemann " + riemann.to_string(12));
  return out;
}

}  // namespace chenbound
