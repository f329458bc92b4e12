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
#include <map>
#include <vector>

#include "chenbound/errors.hpp"
#include "chenbound/oracle_verifier.hpp"
#include "chenbound/prime_toolkit.hpp"

using namespace chenbound;

namespace {

bool is_prime(u64 m) {
  if (m < 2) return false;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

// Prime factors with multiplicity.
std::vector<u64> factors(u64 m) {
  std::vector<u64> f;
  for (u64 d = 2; d * d <= m; ++d) {
    while (m % d == 0) {
      f.push_back(d);
      m /= d;
    }
  }
  if (m > 1) f.push_back(m);
  return f;
}

bool ipow_less(u64 q, int k, u64 n) {
  unsigned __int128 v = 1;
  for (int i = 0; i < k; ++i) v *= q;
  return v < n;
}

bool has_factor_below(u64 m, u64 n, int root) {
  for (u64 q : factors(m)) {
    if (ipow_less(q, root, n)) return true;
  }
  return false;
}

struct Naive {
  u64 pi2 = 0, pi2_sf = 0, s_a = 0, s_b = 0;
  std::map<u64, u64> s_aq;
};

Naive naive(u64 n) {
  Naive r;
  for (u64 q = 2; ipow_less(q, 3, n); ++q) {
    if (is_prime(q) && !ipow_less(q, 8, n) && n % q != 0) r.s_aq[q] = 0;
  }
  for (u64 p = 2; p < n; ++p) {
    if (!is_prime(p)) continue;
    const u64 m = n - p;
    const auto f = factors(m);
    if (m > 1 && f.size() <= 2) {
      ++r.pi2;
      if (f.size() == 2 && f[0] != f[1]) ++r.pi2_sf;
    }
    if (n % p == 0 || has_factor_below(m, n, 8)) continue;
    ++r.s_a;
    for (auto& [q, c] : r.s_aq) c += m % q == 0;
  }
  for (u64 p1 = 2; ipow_less(p1, 3, n); ++p1) {
    if (!is_prime(p1) || ipow_less(p1, 8, n) || n % p1 == 0) continue;
    for (u64 p2 = p1; p1 * p2 * p2 < n; ++p2) {
      if (!is_prime(p2) || ipow_less(p2, 3, n) || n % p2 == 0) continue;
      for (u64 p3 = p2; p1 * p2 * p3 < n; ++p3) {
        if (!is_prime(p3) || n % p3 == 0) continue;
        if (!has_factor_below(n - p1 * p2 * p3, n, 3)) ++r.s_b;
      }
    }
  }
  return r;
}

}  // namespace

TEST_CASE("pi2 against trial division") {
  for (u64 n = 4; n <= 1200; n += 2) {
    const Naive o = naive(n);
    const Pi2Counts c = pi2_enumerate(n);
    CAPTURE(n);
    CHECK(c.pi2 == o.pi2);
    CHECK(c.pi2_squarefree == o.pi2_sf);
  }
  CHECK(pi2_enumerate(4).pi2 == 1);
  CHECK(pi2_enumerate(30).pi2 == 7);
  CHECK(pi2_enumerate(2).pi2 == 0);
  for (u64 n : {99998ULL, 100000ULL, 123456ULL}) CHECK(pi2_enumerate(n).pi2 == naive(n).pi2);
  CHECK_THROWS_AS(pi2_enumerate(7), DomainError);
  const u64 saved = limits().pi2;
  limits().pi2 = 1000;
  CHECK_THROWS_AS(pi2_enumerate(1002), ResourceError);
  limits().pi2 = saved;
}

TEST_CASE("sifted counts against a direct enumeration") {
  const SmallTables t(20000);
  std::vector<u64> ns;
  for (u64 n = 4; n <= 600; n += 2) ns.push_back(n);
  for (u64 n : {1000ULL, 2310ULL, 5040ULL, 9998ULL, 10000ULL, 16384ULL, 19998ULL}) ns.push_back(n);
  for (u64 n : ns) {
    CAPTURE(n);
    const Naive o = naive(n);
    const SiftedCounts s = sifted_counts(n, t);
    CHECK(s.s_a == o.s_a);
    CHECK(s.s_aq == o.s_aq);
    CHECK(s.s_b == o.s_b);
    CHECK(s.pi2 == o.pi2);
    CHECK(s.pi2_squarefree == o.pi2_sf);
    u64 total = 0;
    for (const auto& kv : o.s_aq) total += kv.second;
    CHECK(s.s_aq_total() == total);
    CHECK(s.doubled_core() == 2 * static_cast<std::int64_t>(o.pi2) - 2 * static_cast<std::int64_t>(o.s_a) +
                                   static_cast<std::int64_t>(total) + static_cast<std::int64_t>(o.s_b));
  }
}

TEST_CASE("small cases of the sifted sets") {
  const SiftedCounts s = sifted_counts(100);
  // no prime lies below 100^(1/8), and 2 divides 100
  CHECK(s.s_a == 23);
  CHECK(s.s_aq.size() == 1);
  CHECK(s.s_aq.count(3) == 1);
  CHECK(s.s_b == 0);
  CHECK(std::fabs(s.z - std::pow(100.0, 0.125)) < 1e-12);
  CHECK(sifted_counts(10000).s_b > 0);
  CHECK_THROWS_AS(sifted_counts(101), DomainError);
  CHECK_THROWS_AS(sifted_counts(2), DomainError);
  CHECK_THROWS_AS(sifted_counts(30000, SmallTables(20000)), ResourceError);
}

TEST_CASE("decomposition holds on a desk-scale range") {
  const auto r = check_chen_decomposition(10000, 10400);
  CHECK(r.points_checked == 201);
  CHECK(r.violations.empty());
  CHECK_FALSE(r.informational);
  CHECK(r.passed());
  CHECK(r.worst_margin > 0);
  const auto small = check_chen_decomposition(100, 200);
  CHECK(small.informational);
  const auto strided = check_chen_decomposition(10000, 10400, 100);
  CHECK(strided.points_checked == 5);
  const auto empty = check_chen_decomposition(20000, 10000);
  CHECK(empty.points_checked == 0);
  CHECK(empty.passed());
  CHECK_THROWS_AS(check_chen_decomposition(10000, 10010, 3), DomainError);
  CHECK_THROWS_AS(check_chen_decomposition(10000, limits().sifted + 2), ResourceError);
}

TEST_CASE("decomposition margin matches the exact core") {
  const u64 n = 10000;
  const SiftedCounts s = sifted_counts(n);
  const double total = static_cast<double>(s.doubled_core()) + 4 * std::pow(1e4, 0.875) + 2 * std::cbrt(1e4);
  const auto r = check_chen_decomposition(n, n);
  CHECK(std::fabs(r.worst_margin - total / 2) < 1e-6);
}

TEST_CASE("Mertens sum") {
  const auto r = check_mertens(3, 3, 1);
  CHECK(r.points_checked == 1);
  const long double want = 0.5L - (std::log(std::log(3.0L)) + 0.2614972128476427837554268386L);
  CHECK(std::fabs(r.worst_margin - static_cast<double>(want)) < 1e-12);
  const auto s = check_mertens(3, 1e6, 200);
  CHECK(s.points_checked == 200);
  CHECK(s.passed());
  const auto open = check_mertens(1e6, 1e7, 10, false);
  CHECK(open.points_checked == 10);
  CHECK(open.worst_witness != "x=1000000");
  CHECK(check_mertens(3, 10, 0).points_checked == 0);
  CHECK_THROWS_AS(check_mertens(2, 10, 5), DomainError);
  CHECK_THROWS_AS(check_mertens(10, 5, 5), DomainError);
}

TEST_CASE("epsilon product") {
  const auto r = check_epsilon_product({10000}, {10001, 100000, 5000});
  CHECK(r.informational);
  CHECK(r.points_checked == 2);
  CHECK(r.violations.empty());
}

TEST_CASE("theta and squarefree scans") {
  const auto th = check_theta(1000000);
  CHECK(th.points_checked == 78498);
  CHECK(th.passed());
  CHECK_FALSE(th.informational);
  const auto sq = check_squarefree(1000000);
  CHECK(sq.points_checked == 2);
  CHECK(sq.violations.empty());
  CHECK(sq.informational);
}

TEST_CASE("pi2 scan") {
  const auto r = check_pi2(4, 10000);
  CHECK(r.points_checked == 4999);
  CHECK(r.passed());
  CHECK(r.worst_margin == 0);
  CHECK(r.worst_witness == "n=4");
  CHECK(check_pi2(4, 3).points_checked == 0);
}

TEST_CASE("report bookkeeping") {
  VerificationReport r;
  r.record("a", 2.0, "", "", false);
  r.record("b", -1.0, "", "", true);
  r.record("c", -3.0, "", "", true, 1);
  CHECK(r.points_checked == 3);
  CHECK(r.violations.size() == 1);
  CHECK(r.worst_margin == -3.0);
  CHECK(r.worst_witness == "c");
  CHECK_FALSE(r.passed());
  r.informational = true;
  CHECK(r.passed());
}
