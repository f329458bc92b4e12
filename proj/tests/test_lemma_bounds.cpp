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
#include <random>

#include "chenbound/errors.hpp"
#include "chenbound/lemma_bounds.hpp"

using namespace chenbound;

namespace {

// Independent transcription of the published sieve constant table.
const int kTable[48][3] = {
    {63, 32881, 32875}, {64, 7582, 7580}, {65, 3890, 3890}, {66, 2542, 2542}, {67, 1880, 1881},
    {68, 1480, 1500},   {69, 1254, 1255}, {70, 1084, 1086}, {71, 960, 962},   {72, 865, 867},
    {73, 790, 791},     {74, 729, 730},   {75, 678, 679},   {76, 635, 636},   {77, 598, 600},
    {78, 566, 568},     {79, 538, 540},   {80, 514, 515},   {81, 492, 493},   {84, 438, 439},
    {87, 398, 400},     {93, 341, 343},   {99, 303, 305},   {114, 247, 249},  {143, 198, 200},
    {200, 162, 164},    {249, 149, 150},  {300, 141, 142},  {400, 132, 134},  {500, 127, 129},
    {600, 124, 126},    {700, 122, 124},  {800, 121, 122},  {900, 120, 121},  {1000, 119, 120},
    {1100, 118, 120},   {1200, 117, 119}, {1400, 117, 118}, {1500, 116, 118}, {1600, 116, 117},
    {1800, 115, 117},   {2100, 115, 116}, {2300, 114, 116}, {3300, 113, 115}, {4500, 113, 114},
    {6100, 112, 114},   {12200, 112, 113}, {39500, 111, 113}};

std::pair<int, int> scan_oracle(const mpq_class& eps) {
  std::pair<int, int> best{-1, -1};
  for (const auto& r : kTable) {
    if (mpq_class(r[0]) * eps <= 1) best = {r[1], r[2]};
  }
  return best;
}

long double q_oracle(long double lx) {
  const long double x14 = std::exp(-lx / 4), x12 = std::exp(-lx / 2), ll = std::log(lx);
  return 0.165L + 12.683L / lx + 254.980L / (lx * lx) + 2607.854L / (lx * lx * lx) +
         11605.056L / (lx * lx * lx * lx) + 1.314L * lx * x14 + 0.092L * ll * x14 + 60.883L * x14 +
         8.250L * ll * x14 / lx + 939.260L * x14 / lx - 237.934L * x12 / lx;
}

long double eps_oracle(long double u) {
  const long double lu = std::log(u);
  return (1 + 1 / (0.996L * u - 1)) * (1 + 1.5e-4L / lu + 2.25e-8L / (lu * lu)) *
             (1 + 1 / (u - 1) + 1 / ((u - 1) * (u - 1))) -
         1;
}

bool brackets(const Interval& x, long double v, long double rel = 1e-15L) {
  return x.lower_double() <= static_cast<double>(v * (1 + rel)) &&
         x.upper_double() >= static_cast<double>(v * (1 - rel));
}

Interval lg(double x) { return log(Interval::point(x)); }

Interval m_at(double lx, double ly, double ld) {
  return m_bilinear_log(Interval::point(lx), Interval::point(ly), Interval::point(ld));
}

}  // namespace

TEST_CASE("embedded table matches the transcription") {
  const auto& t = sieve_table();
  REQUIRE(t.size() == 48);
  std::uint64_t h = 14695981039346656037ULL;
  for (std::size_t i = 0; i < 48; ++i) {
    CHECK(t[i].inv_epsilon == kTable[i][0]);
    CHECK(t[i].c1 == kTable[i][1]);
    CHECK(t[i].c2 == kTable[i][2]);
    for (int k = 0; k < 3; ++k) {
      const auto v = static_cast<std::uint32_t>(kTable[i][k]);
      for (int b = 0; b < 4; ++b) {
        h ^= (v >> (8 * b)) & 0xFF;
        h *= 1099511628211ULL;
      }
    }
  }
  CHECK(h == kSieveTableChecksum);
  CHECK(sieve_table_checksum() == kSieveTableChecksum);
}

TEST_CASE("table shape") {
  const auto& t = sieve_table();
  for (std::size_t i = 1; i < t.size(); ++i) {
    CHECK(t[i].inv_epsilon > t[i - 1].inv_epsilon);
    CHECK(t[i].c1 <= t[i - 1].c1);
    CHECK(t[i].c2 <= t[i - 1].c2);
  }
  for (const auto& r : t) {
    CHECK(r.c1 <= r.c2 + 6);
    if (r.inv_epsilon >= 6100) CHECK(r.c1 <= r.c2);
    // the 1/68 row carries C2 = C1 + 20
    if (r.inv_epsilon != 68) CHECK(r.c2 <= r.c1 + 2);
  }
}

TEST_CASE("lookup agrees with an exhaustive scan for random epsilon") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> logu(std::log(63.0), std::log(1e6));
  for (int i = 0; i < 1000; ++i) {
    double eps = std::exp(-logu(rng));
    if (eps >= 1.0 / 63) eps = std::nextafter(1.0 / 63, 0.0);
    const mpq_class q(eps);
    const auto want = scan_oracle(q);
    const auto got = sieve_constants(q);
    CHECK(got.c1 == want.first);
    CHECK(got.c2 == want.second);
    const auto got_d = sieve_constants(eps);
    CHECK(got_d.c1 == want.first);
  }
}

TEST_CASE("lookup examples and domain") {
  CHECK(sieve_constants(mpq_class(1, 8137)).c1 == 112);
  CHECK(sieve_constants(mpq_class(1, 8137)).c2 == 114);
  CHECK(sieve_constants(mpq_class(1, 8137)).row_inv_epsilon == 6100);
  CHECK(sieve_constants(mpq_class(1, 40000)).c1 == 111);
  CHECK(sieve_constants(mpq_class(1, 40000)).c2 == 113);
  CHECK(sieve_constants(mpq_class(1, 64)).c1 == 7582);
  CHECK(sieve_constants(mpq_class(1, 6100)).c1 == 112);
  CHECK(sieve_constants(mpq_class(1, 6099)).c1 == 113);
  CHECK_THROWS_AS(sieve_constants(mpq_class(1, 63)), DomainError);
  CHECK_THROWS_AS(sieve_constants(mpq_class(1, 10)), DomainError);
  CHECK_THROWS_AS(sieve_constants(mpq_class(0)), DomainError);
  CHECK_THROWS_AS(sieve_constants(-1e-3), DomainError);
  // an enclosure straddling a row boundary takes the earlier row
  const Interval straddle = Interval::bounds(1.0 / 6100.5, 1.0 / 6099.5);
  CHECK(sieve_constants(straddle).row_inv_epsilon == 4500);
}

TEST_CASE("q_G, p_G, c_G against direct evaluation") {
  for (double x2 : {4e18, 1e20, 1e30, 1e100, 1e300}) {
    const long double q = q_oracle(std::log(static_cast<long double>(x2)));
    CHECK(q_g(x2, Direction::up) >= static_cast<double>(q * (1 - 1e-15L)));
    CHECK(q_g(x2, Direction::down) <= static_cast<double>(q * (1 + 1e-15L)));
    CHECK(brackets(p_g_log(lg(x2)), 0.65L * (0.02L + q)));
    const long double cg = 0.65L * (0.02L + q) +
                           0.9L / (std::sqrt(static_cast<long double>(x2)) *
                                   std::log(std::log(static_cast<long double>(x2))));
    CHECK(brackets(c_g_log(lg(x2)), cg));
  }
  CHECK(q_g(4e18) <= 0.640);
  CHECK(p_g(4e18) <= 0.429);
  CHECK(c_g(4e18) <= 0.429);
  CHECK_THROWS_AS(q_g(3.9e18), DomainError);
  CHECK_THROWS_AS(p_g(1e10), DomainError);
  CHECK_THROWS_AS(c_g(1e10), DomainError);
}

TEST_CASE("q_G and its relatives decrease") {
  for (double e = 18.7; e < 300; e += 0.5) {
    const Interval a = lg(std::pow(10.0, e)), b = lg(std::pow(10.0, e + 0.5));
    CHECK(q_g_log(b).certainly_lt(q_g_log(a)));
    CHECK(p_g_log(b).certainly_lt(p_g_log(a)));
    CHECK(c_g_log(b).certainly_lt(c_g_log(a)));
  }
  CHECK(q_g(1e30) < q_g(4e18, Direction::down).to_double());
  // toward infinity the leading constant remains
  const Interval far = q_g_log(Interval::point(1e12));
  CHECK(far.certainly_gt(0.165));
  CHECK(far.certainly_lt(0.165 + 1.3e-11));
  // p_G = 0.013 + 0.65 q_G
  const Interval L = lg(1e25);
  CHECK(p_g_log(L).overlaps(Interval::decimal("0.013") + Interval::decimal("0.65") * q_g_log(L)));
}

TEST_CASE("c_G at the working threshold equals p_G to 30 digits") {
  PrecisionScope s(60);
  const Interval L = exp(Interval::decimal("15.85"));
  const Interval d = c_g_log(L) - p_g_log(L);
  CHECK(d.certainly_gt(-1e-30));
  CHECK(d.certainly_lt(1e-30));
}

TEST_CASE("epsilon(u)") {
  for (double u : {9551.0, 18620.87, 1e5, 1e9, 1e18}) {
    CHECK(brackets(epsilon_of_u(Interval::point(u)), eps_oracle(u), 1e-12L));
  }
  const double u = std::pow(10.0, 4.27);
  CHECK(epsilon_of_u(u) <= 1.0 / 8137);
  CHECK(epsilon_of_u(1e6) < epsilon_of_u(u, Direction::down).to_double());
  for (double lu = std::log(9552.0); lu < std::log(1e18); lu += 0.25) {
    CHECK(epsilon_of_u(Interval::point(std::exp(lu + 0.25))).certainly_lt(epsilon_of_u(Interval::point(std::exp(lu)))));
  }
  CHECK_THROWS_AS(epsilon_of_u(9550.0), DomainError);
}

TEST_CASE("h: branches, continuity and monotonicity") {
  PrecisionScope s(100);
  const Interval em2 = exp(Interval::integer(-2));
  CHECK(h(Interval::point(1.5)).overlaps(em2));
  CHECK(h(Interval::integer(2)).overlaps(em2));
  CHECK(h(Interval::integer(3)).overlaps(exp(Interval::integer(-3))));
  CHECK(h(Interval::integer(4)).overlaps(3 * exp(Interval::integer(-4)) / 4));
  const Interval tiny = Interval::decimal("1e-60");
  for (int at : {2, 3}) {
    const Interval below = h(Interval::integer(at) - tiny);
    const Interval above = h(Interval::integer(at) + tiny);
    CHECK((below - above).certainly_lt(1e-30));
    CHECK((above - below).certainly_lt(1e-30));
  }
  for (double x = 1; x < 10; x += 0.01) CHECK_FALSE(h(Interval::point(x + 0.01)).certainly_gt(h(Interval::point(x))));
  CHECK_THROWS_AS(h(Interval::point(0.5)), DomainError);
}

TEST_CASE("F and f on their ranges") {
  const long double eg = std::exp(0.57721566490153286060651209L);
  CHECK(big_f(Interval::integer(2)).overlaps(exp(Interval::euler_gamma())));
  CHECK(small_f(Interval::integer(2)).contains(0.0));
  const long double a = std::pow(10.0L, -2.61L);
  const long double s = 4 - 8 * a;
  const long double want = 2 * eg * std::log(s - 1) / s;
  CHECK(small_f(static_cast<double>(s)) > 0.80);
  CHECK(std::fabs(small_f(static_cast<double>(s)).to_double() - static_cast<double>(want)) < 1e-15);
  CHECK(std::fabs(big_f(2.5).to_double() - static_cast<double>(2 * eg / 2.5L)) < 1e-15);
  CHECK(big_f(1.5, Direction::up) >= small_f(3.0, Direction::down).to_double());
  CHECK_THROWS_AS(big_f(3.5), DomainError);
  CHECK_THROWS_AS(small_f(1.9), DomainError);
  CHECK_THROWS_AS(small_f(4.1), DomainError);
}

TEST_CASE("m is nonincreasing in X and nondecreasing in D* on its domain") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> U(0, 1);
  const double l25 = std::log(25.5), ly0 = std::log(4e18), ld0 = std::log(1e9);
  for (int i = 0; i < 1000; ++i) {
    const double lx = l25 + U(rng) * (200 - l25), ly = ly0 + U(rng) * (200 - ly0), ld = ld0 + U(rng) * (200 - ld0);
    const Interval base = m_at(lx, ly, ld);
    CHECK_FALSE(m_at(lx + std::log(2.0), ly, ld).certainly_gt(base));
    CHECK_FALSE(m_at(lx, ly, ld + std::log(2.0)).certainly_lt(base));
  }
}

TEST_CASE("m is nonincreasing in Y where X >= Y") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> U(0, 1);
  const double ly0 = std::log(4e18), ld0 = std::log(1e9);
  for (int i = 0; i < 1000; ++i) {
    const double ly = ly0 + U(rng) * (200 - ly0), lx = ly + U(rng) * 200, ld = ld0 + U(rng) * (200 - ld0);
    CHECK_FALSE(m_at(lx, ly + std::log(2.0), ld).certainly_gt(m_at(lx, ly, ld)));
  }
}

TEST_CASE("m grows with Y when X is small") {
  // 5.498 Y^(1/6) / sqrt(X) dominates the decrease of q_G(Y)^(1/3).
  const double lx = std::log(26.0), ly = 60.0, ld = 30.0;
  CHECK(m_at(lx, ly + std::log(2.0), ld).certainly_gt(m_at(lx, ly, ld)));
}

TEST_CASE("m limits and the working point") {
  // X, Y large at fixed log D*: only 2.81 q^(1/3)(Y) survives.
  const double ly = 5000;
  const Interval m = m_at(20000, ly, 100);
  const long double lead = 2.81L * std::cbrt(q_oracle(ly));
  CHECK(brackets(m, lead, 1e-14L));
  PrecisionScope s(50);
  const Interval L = exp(Interval::decimal("15.85"));
  const Interval t = Interval::decimal("15.85");
  const Interval mw = m_bilinear_log(2 * L / 3, log1p(Interval::decimal("1e-20")) + L / 8, L / 2 - 5 * t);
  const long double Ld = std::exp(15.85L);
  CHECK(brackets(mw, 2.81L * std::cbrt(q_oracle(Ld / 8)), 1e-12L));
  CHECK(bilinear_side_margin(L / 8, L / 2 - 5 * t, L / 8).certainly_positive());
  CHECK_THROWS_AS(m_bilinear(24, 1e19, 1e10), DomainError);
  CHECK_THROWS_AS(m_bilinear(100, 1e18, 1e10), DomainError);
  CHECK_THROWS_AS(m_bilinear(100, 1e19, 1e8), DomainError);
}

TEST_CASE("V and |A| envelopes") {
  const double n = 4e18;
  const auto lo = v_envelope(VExponent::eighth, n, Side::lower);
  const auto up = v_envelope(VExponent::eighth, n, Side::upper);
  const long double ln = std::log(4e18L);
  CHECK(brackets(lo.relative_error, 0.62L * ln / std::pow(4e18L, 1.0L / 16), 1e-14L));
  CHECK(brackets(lo.center, 8 / ln, 1e-15L));
  CHECK_FALSE(lo.value().certainly_gt(up.value()));
  CHECK(lo.value().certainly_lt(up.value()));
  const auto third = v_envelope(VExponent::third, n, Side::upper);
  CHECK(brackets(third.relative_error, 0.06L * ln / std::pow(4e18L, 1.0L / 6), 1e-14L));
  CHECK(v_envelope(VExponent::eighth, 1e300, Side::lower).relative_error.certainly_lt(lo.relative_error));
  CHECK_THROWS_AS(v_envelope(VExponent::third, 1e18, Side::lower), DomainError);
  const auto a = a_envelope_log(exp(Interval::integer(16)));
  CHECK(a.first.contains(1.0));
  CHECK(a.second.overlaps(Interval::decimal("1.0000004")));
  CHECK((a.second / a.first).certainly_lt(1 + 1e-6));
  CHECK_THROWS_AS(a_envelope_log(exp(Interval::integer(14))), DomainError);
}

TEST_CASE("hundred-digit recheck never falls below down-rounded bounds") {
  for (double x2 : {4e18, 1e40, 1e200}) {
    const DirectedReal down = [&] {
      PrecisionScope s(30);
      return q_g_log(lg(x2)).lower(30);
    }();
    PrecisionScope s(100);
    const Interval fine = q_g_log(log(Interval::point(x2)));
    CHECK(mpfr_cmp(fine.lo().raw(), down.value().raw()) >= 0);
  }
}
