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

// Acceptance report: one line per criterion. Exits non-zero when a criterion
// fails that is not listed in kKnownFailures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "chenbound/analytic_constants.hpp"
#include "chenbound/errors.hpp"
#include "chenbound/lemma_bounds.hpp"
#include "chenbound/oracle_verifier.hpp"
#include "chenbound/parameter_optimizer.hpp"
#include "chenbound/prime_toolkit.hpp"
#include "chenbound/theorem_engine.hpp"

using namespace chenbound;

namespace {

// Pinned tolerances and limits.
constexpr double kHeadlineTarget = 4e-4;
constexpr double kFastSeconds = 1.0;
constexpr double kGapSeconds = 10.0;
constexpr double kQCap = 0.640;
constexpr double kPCap = 0.429;
constexpr double kCCap = 0.429;
constexpr double kCbarCap = 0.363084;
constexpr int kRandomEpsilon = 1000;
constexpr int kRandomTriples = 1000;
constexpr const char* kContinuityTol = "1e-30";
constexpr const char* kGapRatio = "0.996";

// Criteria that cannot hold as stated. Their lines still print FAIL.
const std::set<int> kKnownFailures = {10};

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome headline() {
  const auto t0 = std::chrono::steady_clock::now();
  const BoundCertificate c = chen_coefficient(paper_params(), 50);
  const double s = seconds_since(t0);
  std::ostringstream os;
  bool ok = c.conditions_ok() && c.final_coefficient && c.feasible(kHeadlineTarget) && s < kFastSeconds;
  os << "final (down) = " << (c.final_coefficient ? c.final_down().decimal(12) : "none")
     << ", conditions " << (c.conditions_ok() ? "clean" : "failing") << ", " << s << " s";
  const DerivedParams d = *c.derived;
  ok = ok && d.c1 == 112 && d.c2 == 114;
  return {ok, os.str()};
}

Outcome corollary() {
  const auto t0 = std::chrono::steady_clock::now();
  const DirectedReal m = corollary_margin(paper_params(), 50);
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << "margin (down) = " << m.decimal(12) << ", " << s << " s";
  return {m > 0.0 && s < kFastSeconds, os.str()};
}

Outcome epsilon_chain() {
  const Interval eps = epsilon_of_u(Interval::point(paper_params().u));
  const bool below = eps.certainly_le(Interval::rational(1, 8137));
  const SieveConstants sc = sieve_constants(mpq_class(1, 8137));
  std::ostringstream os;
  os << "epsilon(10^4.27) <= " << eps.as(Direction::up, 20).decimal() << ", C = (" << sc.c1 << ", " << sc.c2
     << ")";
  return {below && sc.c1 == 112 && sc.c2 == 114, os.str()};
}

Outcome caps() {
  const DirectedReal q = q_g(4e18), p = p_g(4e18), c = c_g(4e18);
  const DirectedReal cb = cbar(50).up;
  std::ostringstream os;
  os << "q_G " << q.decimal(8) << ", p_G " << p.decimal(8) << ", c_G " << c.decimal(8) << ", cbar "
     << cb.decimal(10);
  return {q <= kQCap && p <= kPCap && c <= kCCap && cb < kCbarCap, os.str()};
}

Outcome table_integrity() {
  const auto& t = sieve_table();
  bool ok = t.size() == 48 && sieve_table_checksum() == kSieveTableChecksum;
  std::mt19937_64 rng(8137);
  std::uniform_real_distribution<double> logu(std::log(63.0), std::log(1e6));
  int mismatches = 0;
  for (int i = 0; i < kRandomEpsilon; ++i) {
    const mpq_class e(std::exp(-logu(rng)));
    if (e >= mpq_class(1, 63)) continue;
    int want = -1;
    for (const auto& r : t) {
      if (mpq_class(r.inv_epsilon) * e <= 1) want = r.c1 * 100000 + r.c2;
    }
    const SieveConstants got = sieve_constants(e);
    mismatches += got.c1 * 100000 + got.c2 != want;
  }
  bool rejected = false;
  try {
    sieve_constants(mpq_class(1, 63));
  } catch (const DomainError&) {
    rejected = true;
  }
  std::ostringstream os;
  os << t.size() << " rows, checksum " << (sieve_table_checksum() == kSieveTableChecksum ? "ok" : "bad") << ", "
     << mismatches << " lookup mismatches in " << kRandomEpsilon << ", 1/63 "
     << (rejected ? "rejected" : "accepted");
  return {ok && mismatches == 0 && rejected, os.str()};
}

std::string summary(const VerificationReport& r, double s) {
  std::ostringstream os;
  os << r.points_checked << " points, " << r.violations.size() << " violations, worst margin " << r.worst_margin
     << " at " << r.worst_witness << ", " << s << " s";
  return os.str();
}

Outcome decomposition() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = check_chen_decomposition(10000, 100000, 2);
  return {r.points_checked == 45001 && r.violations.empty() && !r.informational, summary(r, seconds_since(t0))};
}

Outcome gaps() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = prime_gap_scan(9551, 10000000, Ratio::parse(kGapRatio));
  const double s = seconds_since(t0);
  return {r.violations.empty() && r.points_checked > 0 && s < kGapSeconds, summary(r, s)};
}

Outcome mertens() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = check_mertens(3, 1e8, 10000, true);
  const auto b = check_mertens(1e8, 1e9, 1000, false);
  std::ostringstream os;
  os << "[3, 1e8]: " << summary(a, seconds_since(t0)) << "; (1e8, 1e9]: " << b.points_checked << " points, "
     << b.violations.size() << " violations, worst " << b.worst_margin;
  return {a.points_checked == 10000 && b.points_checked == 1000 && a.passed() && b.passed(), os.str()};
}

Outcome squarefree() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = check_squarefree(1000000000ULL);
  return {r.violations.empty() && !r.informational && r.points_checked == 2, summary(r, seconds_since(t0))};
}

Outcome properties() {
  std::mt19937_64 rng(4001);
  std::uniform_real_distribution<double> U(0, 1);
  const double lx0 = std::log(25.5), ly0 = std::log(4e18), ld0 = std::log(1e9), top = 200;
  auto m = [](double lx, double ly, double ld) {
    return m_bilinear_log(Interval::point(lx), Interval::point(ly), Interval::point(ld));
  };
  const double step = std::log(2.0);
  int bad_x = 0, bad_y = 0, bad_d = 0, bad_y_regime = 0;
  for (int i = 0; i < kRandomTriples; ++i) {
    const double lx = lx0 + U(rng) * (top - lx0), ly = ly0 + U(rng) * (top - ly0), ld = ld0 + U(rng) * (top - ld0);
    const Interval base = m(lx, ly, ld);
    bad_x += m(lx + step, ly, ld).certainly_gt(base);
    bad_y += m(lx, ly + step, ld).certainly_gt(base);
    bad_d += m(lx, ly, ld + step).certainly_lt(base);
    // X >= Y, the regime the S(B) bound evaluates
    const double lx2 = ly + U(rng) * top;
    bad_y_regime += m(lx2, ly + step, ld).certainly_gt(m(lx2, ly, ld));
  }

  int grid_bad = 0;
  for (double e = 18.7; e < 300; e += 0.5) {
    const Interval a = log(Interval::point(std::pow(10.0, e))), b = log(Interval::point(std::pow(10.0, e + 0.5)));
    grid_bad += !q_g_log(b).certainly_lt(q_g_log(a));
    grid_bad += !p_g_log(b).certainly_lt(p_g_log(a));
    grid_bad += !c_g_log(b).certainly_lt(c_g_log(a));
  }
  for (double lu = std::log(9552.0); lu < std::log(1e18); lu += 0.25) {
    grid_bad += !epsilon_of_u(Interval::point(std::exp(lu + 0.25)))
                     .certainly_lt(epsilon_of_u(Interval::point(std::exp(lu))));
  }

  bool continuous = true;
  {
    PrecisionScope s(100);
    const Interval tiny = Interval::decimal("1e-60");
    const Interval tol = Interval::decimal(kContinuityTol);
    for (int at : {2, 3}) {
      const Interval d = h(Interval::integer(at) - tiny) - h(Interval::integer(at) + tiny);
      continuous = continuous && d.certainly_lt(tol) && (-d).certainly_lt(tol);
    }
  }

  int unsound = 0;
  for (double x2 : {4e18, 1e25, 1e60, 1e200}) {
    BigFloat down(10);
    {
      PrecisionScope s(30);
      down = c_g_log(log(Interval::point(x2))).lower(30).value();
    }
    PrecisionScope s(100);
    const Interval fine = c_g_log(log(Interval::point(x2)));
    unsound += mpfr_cmp(fine.lo().raw(), down.raw()) < 0;
    const Interval fine_up = q_g_log(log(Interval::point(x2)));
    BigFloat up(10);
    {
      PrecisionScope s2(30);
      up = q_g_log(log(Interval::point(x2))).upper(30).value();
    }
    unsound += mpfr_cmp(fine_up.hi().raw(), up.raw()) > 0;
  }

  std::ostringstream os;
  os << "m: X " << bad_x << "/" << kRandomTriples << ", Y " << bad_y << "/" << kRandomTriples
     << " (claimed decreasing; fails where 5.498 Y^(1/6)/sqrt(X) dominates), Y with X >= Y " << bad_y_regime
     << "/" << kRandomTriples << ", D* " << bad_d << "/" << kRandomTriples << "; grids " << grid_bad
     << " bad; h continuity " << (continuous ? "ok" : "bad") << "; directed soundness " << unsound << " bad";
  const bool ok = bad_x == 0 && bad_y == 0 && bad_d == 0 && bad_y_regime == 0 && grid_bad == 0 && continuous &&
                  unsound == 0;
  return {ok, os.str()};
}

Outcome determinism() {
  SearchSpec s;
  s.start = paper_params();
  s.box = SearchBox::around(s.start);
  const std::string a = trace_csv(optimize(s));
  const std::string b = trace_csv(optimize(s));
  SearchSpec d = s;
  d.box = SearchBox::degenerate(s.start);
  d.target_coefficient = kHeadlineTarget;
  const SearchResult r = minimize_threshold(d);
  std::ostringstream os;
  os << "traces " << (a == b ? "identical" : "differ") << " (" << a.size() << " bytes); degenerate box t = "
     << r.best_params.loglog_threshold << (r.feasible ? " feasible" : " infeasible");
  return {a == b && r.feasible && r.best_params.loglog_threshold == 15.85, os.str()};
}

}  // namespace

int main() {
  const std::pair<int, std::function<Outcome()>> criteria[] = {
      {1, headline},   {2, corollary},     {3, epsilon_chain}, {4, caps},       {5, table_integrity},
      {6, decomposition}, {7, gaps},       {8, mertens},       {9, squarefree}, {10, properties},
      {11, determinism}};
  int unexpected = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const bool known = kKnownFailures.count(id) > 0;
    if (!o.pass && !known) ++unexpected;
    std::printf("criterion %2d: %s%s  %s\n", id, o.pass ? "PASS" : "FAIL", !o.pass && known ? " (known)" : "",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
