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

#include <doctest.h>

#include <cmath>
#include <string>

#include "chenbound/analytic_constants.hpp"
#include "chenbound/errors.hpp"
#include "chenbound/kernels.hpp"
#include "chenbound/reference.hpp"

using namespace chenbound;
using kernels::u64;

namespace {

// Published decimal expansions, used as an external reference.
const char* kGammaRef = "0.5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917467495";
const char* kTwinRef = "0.6601618158468695739278121100145557784326233602847334133194484233354056423044952771437600314138398679";
const char* kMertensRef = "0.2614972128476427837554268386086958590515666482611992061920642139249245108973682097141426314342466510";

long double cbar_simpson(int panels) {
  auto f = [](long double b) { return std::log(2.0L - 3.0L * b) / (b * (1.0L - b)); };
  const long double a = 1.0L / 8, c = 1.0L / 3;
  const long double hstep = (c - a) / panels;
  long double s = f(a) + f(c);
  for (int i = 1; i < panels; ++i) s += f(a + i * hstep) * (i % 2 ? 4 : 2);
  return s * hstep / 3;
}

// Ramanujan's series for li(x).
long double li_ramanujan(long double x) {
  const long double g = 0.57721566490153286060651209L;
  const long double lx = std::log(x);
  long double sum = 0, term = 1, inner = 0;
  for (int n = 1; n < 200; ++n) {
    term *= lx / n;  // (log x)^n / n!
    if ((n - 1) % 2 == 0) inner += 1.0L / (2 * ((n - 1) / 2) + 1);
    const long double sign = (n - 1) % 2 ? -1 : 1;
    sum += sign * term / std::pow(2.0L, n - 1) * inner;
  }
  return g + std::log(lx) + std::sqrt(x) * sum;
}

// A published expansion truncated after n digits encloses the constant in
// [v, v + 10^-n].
Interval published(const char* text) {
  const std::string s(text);
  const auto digits = static_cast<long>(s.size() - s.find('.') - 1);
  const Interval v = Interval::decimal(s, 400);
  return Interval::bounds(v.lo(), (v + pow(Interval::integer(10, 400), -digits)).hi());
}

}  // namespace

TEST_CASE("gamma and Mertens brackets match published expansions") {
  for (int d : {30, 50, 70}) {
    const auto& k = constants(d);
    CHECK(k.gamma.interval().overlaps(published(kGammaRef)));
    CHECK(k.mertens_m.interval().overlaps(published(kMertensRef)));
    CHECK(k.twin_prime_product.interval().overlaps(published(kTwinRef)));
    CHECK(k.gamma.width() < std::pow(10.0, -d + 1));
    CHECK(k.twin_prime_product.width() < std::pow(10.0, -d + 1));
  }
  CHECK(constants(100).gamma.interval().overlaps(published(kGammaRef)));
}

TEST_CASE("Mertens constant from a direct prime sum") {
  // M = gamma + sum_p (log(1 - 1/p) + 1/p); the tail beyond P is in (-1/P, 0).
  long double s = 0;
  const u64 P = 2000000;
  for (u64 p : reference::sieve_primes(P)) s += std::log1p(-1.0L / p) + 1.0L / p;
  const long double m = 0.57721566490153286060651209L + s;
  const double mid = constants(40).mertens_m.interval().mid_double();
  CHECK(mid <= static_cast<double>(m) + 1e-12);
  CHECK(mid >= static_cast<double>(m) - 1.0 / P);
  CHECK(mertens_constant_recomputed(200).overlaps(published(kMertensRef)));
}

TEST_CASE("twin prime product against a direct product") {
  long double prod = 1;
  const u64 P = 2000000;
  for (u64 p : reference::sieve_primes(P)) {
    if (p == 2) continue;
    const long double r = 1.0L / (p - 1);
    prod *= 1 - r * r;
  }
  const double mid = twin_prime_interval(200).mid_double();
  // tail factor lies in [1 - 1/(P - 1), 1]
  CHECK(mid <= static_cast<double>(prod) + 1e-15);
  CHECK(mid >= static_cast<double>(prod) * (1 - 1.0 / (P - 1)));
  CHECK(twin_prime_product(60).interval().overlaps(published(kTwinRef)));
}

TEST_CASE("truncated twin product is exact below its cutoff") {
  const auto t = twin_prime_truncated(1000);
  mpq_class q = 1;
  for (u64 p : reference::sieve_primes(1000)) {
    if (p == 2) continue;
    q *= mpq_class(static_cast<long>((p - 1) * (p - 1) - 1), static_cast<long>((p - 1) * (p - 1)));
  }
  CHECK(t.partial == q);
  CHECK(t.bracket.contains(0.6601618158468696));
  CHECK(t.bracket.relative_width() < 2e-3);
}

TEST_CASE("U_N factor") {
  const auto u = u_n_factor({3, 5, 7});
  CHECK(u.exact == mpq_class(16, 5));
  CHECK(u.bracket.interval().contains(Interval::rational(16, 5)));
  CHECK(u_n_factor({}).exact == 1);
  CHECK(u_n_factor({7, 3, 7, 5}).exact == mpq_class(16, 5));
  CHECK_THROWS_AS(u_n_factor({2}), DomainError);
  CHECK_THROWS_AS(u_n_factor({9}), DomainError);
}

TEST_CASE("two e^gamma times the twin product") {
  const auto& k = constants(50);
  const long double g = 0.57721566490153286060651209L;
  const long double tw = 0.66016181584686957392781211L;
  CHECK(k.two_e_gamma_twin.interval().overlaps(2 * exp(published(kGammaRef)) *
                                               published(kTwinRef)));
  CHECK(std::fabs(k.two_e_gamma_twin.interval().mid_double() - static_cast<double>(2 * std::exp(g) * tw)) < 1e-15);
}

TEST_CASE("logarithmic integral") {
  CHECK(std::fabs(li(2.0, Direction::up).to_double() - static_cast<double>(li_ramanujan(2.0L))) < 1e-15);
  CHECK(li(2.0, Direction::down) <= 1.0451637801174928);
  CHECK(li(2.0, Direction::up) >= 1.0451637801174927);
  const Interval big = li_interval(Interval::point(1e6), 200);
  CHECK(big.overlaps(published("78627.549159462181919")));
  CHECK(std::fabs(big.mid_double() - static_cast<double>(li_ramanujan(1e6L))) < 1e-9);
  for (double x : {10.0, 1000.0, 123456.0, 1e12}) {
    CHECK(std::fabs(li(x, Direction::up).to_double() / static_cast<double>(li_ramanujan(x)) - 1) < 1e-15);
  }
  CHECK_THROWS(li(1.5, Direction::up));
}

TEST_CASE("li for huge arguments against the asymptotic expansion") {
  // x = e^L with L large: li(x) = (x / L) sum_{k>=0} k! / L^k up to the
  // smallest term.
  for (double L : {1500.0, 1e4, 2.5e6}) {
    const Interval x = exp(Interval::point(L, 256));
    const Interval v = li_interval(x, 256);
    long double s = 0, term = 1;
    for (int k = 0; k < 60; ++k) {
      s += term;
      term *= (k + 1) / static_cast<long double>(L);
    }
    const Interval ratio = v * Interval::point(L, 256) / x;
    CHECK(std::fabs(ratio.mid_double() - static_cast<double>(s)) < 1e-14);
  }
  // both sides of the series/asymptotic switch
  for (double L : {999.9, 1000.1}) {
    const Interval v = li_interval(exp(Interval::point(L, 256)), 256);
    CHECK(v.relative_width() < 1e-60);
  }
}

TEST_CASE("cbar: closed form, quadrature and the published cap") {
  const Bracket c = cbar(50);
  CHECK(c.up < 0.363084);
  CHECK(std::fabs(c.interval().mid_double() - static_cast<double>(cbar_simpson(20000))) < 1e-13);
  const Interval rs = cbar_riemann(4096, 200);
  CHECK(rs.contains(c.interval()));
  CHECK(cbar_riemann(8192, 200).width_double() < rs.width_double());
}

TEST_CASE("cross checks all pass") {
  for (const auto& k : verify_constants(50)) {
    INFO(k.name << ": " << k.detail);
    CHECK(k.ok);
  }
}

TEST_CASE("rounded literals enclose the rounding interval") {
  const Interval g = rounded_literal("0.5772", 200);
  CHECK(g.contains(0.57715));
  CHECK(g.contains(0.57725));
  CHECK_FALSE(g.contains(0.5774));
}
