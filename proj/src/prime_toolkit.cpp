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

#include "chenbound/prime_toolkit.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "chenbound/errors.hpp"
#include "chenbound/numtheory.hpp"

namespace chenbound {

Limits& limits() {
  static Limits l;
  return l;
}

void VerificationReport::record(const std::string& witness, double margin, const std::string& lhs,
                                const std::string& rhs, bool violated, std::size_t keep) {
  ++points_checked;
  // Keeps the sign of the margin consistent with the verdict.
  if (violated && !(margin < 0)) margin = -std::numeric_limits<double>::denorm_min();
  if (!violated && margin < 0) margin = 0;
  if (margin < worst_margin) {
    worst_margin = margin;
    worst_witness = witness;
  }
  if (violated && violations.size() < keep) violations.push_back({witness, lhs, rhs, margin});
}

PrimeTable::PrimeTable(u64 lo, u64 hi, u64 segment_size)
    : lo_(lo), hi_(hi), segment_(segment_size) {
  if (lo < 2) throw DomainError("PrimeTable needs lo >= 2");
  if (segment_size == 0) throw DomainError("segment size must be positive");
  if (hi > limits().sieve) throw RangeError("PrimeTable upper end beyond the sieve limit");
}

void PrimeTable::for_each_block(const std::function<void(const u64*, std::size_t)>& visit) const {
  kernels::for_each_prime_block(lo_, hi_, visit, segment_);
}

void PrimeTable::for_each(const std::function<void(u64)>& visit) const {
  for_each_block([&](const u64* ps, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) visit(ps[i]);
  });
}

std::vector<u64> PrimeTable::primes() const { return kernels::primes_in(lo_, hi_, segment_); }

u64 PrimeTable::count() const { return kernels::count_primes(lo_, hi_, segment_); }

std::vector<u64> primes_up_to(u64 x) {
  if (x < 2) return {};
  return PrimeTable(2, x).primes();
}

Interval theta_interval(u64 x, mpfr_prec_t bits) {
  if (x > limits().sieve) throw RangeError("theta beyond the sieve limit");
  return kernels::theta(x, bits);
}

DirectedReal theta(double x, Direction dir) {
  if (!(x >= 0)) throw DomainError("theta needs x >= 0");
  if (x > static_cast<double>(limits().sieve)) throw RangeError("theta beyond the sieve limit");
  return theta_interval(static_cast<u64>(std::floor(x))).as(dir);
}

u64 strict_floor(double x) {
  const double f = std::floor(x);
  return static_cast<u64>(f == x ? f - 1 : f);
}

Interval mertens_sum_interval(double x, mpfr_prec_t bits) {
  if (!(x >= 3)) throw DomainError("mertens_sum needs x >= 3");
  if (x > static_cast<double>(limits().sieve)) throw RangeError("mertens_sum beyond the sieve limit");
  const auto sums = kernels::reciprocal_sums({strict_floor(x)});
  return kernels::to_interval(sums.front(), bits);
}

DirectedReal mertens_sum(double x, Direction dir) { return mertens_sum_interval(x).as(dir); }

ArithmeticSnapshot arithmetic_snapshot(u64 n) {
  if (n < 1) throw DomainError("arithmetic_snapshot needs n >= 1");
  ArithmeticSnapshot s;
  s.n = n;
  s.mu_squared = 1;
  s.phi = 1;
  for (const auto& [p, e] : factorize_u64(n)) {
    ++s.omega;
    s.big_omega += e;
    if (e > 1) s.mu_squared = 0;
    s.phi *= p - 1;
    for (int k = 1; k < e; ++k) s.phi *= p;
  }
  return s;
}

SquarefreeSums squarefree_sums(u64 x) {
  if (x < 1) throw DomainError("squarefree_sums needs x >= 1");
  if (x > limits().squarefree) throw ResourceError("squarefree_sums beyond the configured limit");
  const auto acc = kernels::squarefree_sums(x);
  const mpfr_prec_t bits = std::max<mpfr_prec_t>(default_bits(), 192);
  Interval r(bits);
  auto load = [](kernels::u128 v, mpfr_ptr out) {
    BigFloat lo_part(192);
    mpfr_set_uj(out, static_cast<u64>(v >> 64), MPFR_RNDN);
    mpfr_mul_2ui(out, out, 64, MPFR_RNDN);
    mpfr_set_uj(lo_part.raw(), static_cast<u64>(v), MPFR_RNDN);
    mpfr_add(out, out, lo_part.raw(), MPFR_RNDN);
    mpfr_div_2ui(out, out, 64, MPFR_RNDN);
  };
  load(acc.floor_sum, r.lo().raw());
  load(acc.floor_sum + acc.inexact, r.hi().raw());
  return SquarefreeSums{x, acc.count, r};
}

Ratio Ratio::parse(std::string_view text) {
  std::string s(text);
  auto bad = [&]() { return UsageError("ratio must be a decimal in (0, 1), got '" + s + "'"); };
  const auto dot = s.find('.');
  std::string int_part = dot == std::string::npos ? s : s.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
  if (int_part.empty()) int_part = "0";
  if (int_part != "0" || frac.empty() || frac.size() > 18) throw bad();
  for (char c : frac) {
    if (c < '0' || c > '9') throw bad();
  }
  Ratio r;
  r.num = std::stoull(frac);
  r.den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
  if (r.num == 0) throw bad();
  const u64 g = std::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

Ratio Ratio::from_double(double v) {
  if (!(v > 0 && v < 1)) throw UsageError("ratio must lie in (0, 1)");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return parse(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

std::string Ratio::str() const { return std::to_string(num) + "/" + std::to_string(den); }

VerificationReport prime_gap_scan(u64 lo, u64 hi, Ratio ratio) {
  if (lo < 2) throw DomainError("prime_gap_scan needs lo >= 2");
  if (!(ratio.num > 0 && ratio.num < ratio.den)) throw DomainError("ratio must lie in (0, 1)");
  if (hi > limits().sieve) throw ResourceError("prime_gap_scan beyond the sieve limit");
  VerificationReport rep;
  rep.check_id = "bertrand";
  rep.range_lo = std::to_string(lo);
  rep.range_hi = std::to_string(hi);
  rep.notes = "consecutive primes p < q with q in (lo, hi]; violation iff q > p / " + ratio.str();
  if (hi <= lo) return rep;
  const auto scan = kernels::gap_scan(lo, hi, ratio.num, ratio.den);
  rep.points_checked = scan.pairs;
  if (scan.pairs > 0) {
    rep.worst_margin = scan.worst_margin;
    rep.worst_witness = std::to_string(scan.worst_p) + "->" + std::to_string(scan.worst_q);
  }
  for (const auto& [p, q] : scan.violations) {
    if (rep.violations.size() >= 1000) break;
    const double m = (static_cast<double>(p) * static_cast<double>(ratio.den) -
                      static_cast<double>(q) * static_cast<double>(ratio.num)) /
                     (static_cast<double>(p) * static_cast<double>(ratio.den));
    rep.violations.push_back({std::to_string(p) + "->" + std::to_string(q), std::to_string(q),
                              std::to_string(p) + "*" + std::to_string(ratio.den) + "/" +
                                  std::to_string(ratio.num),
                              std::min(m, -std::numeric_limits<double>::denorm_min())});
  }
  return rep;
}

VerificationReport prime_gap_scan(u64 lo, u64 hi, double ratio) {
  return prime_gap_scan(lo, hi, Ratio::from_double(ratio));
}

}  // namespace chenbound
