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
#include <string>

#include "chenbound/errors.hpp"
#include "chenbound/rigorous.hpp"

using namespace chenbound;

namespace {

// Reference decimal expansions.
const char* kPi = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899";
const char* kE = "2.71828182845904523536028747135266249775724709369995957496696762772407663035354759";
const char* kLn2 = "0.69314718055994530941723212145817656807550013436025525412068000949339362196969471";
const char* kSqrt2 = "1.41421356237309504880168872420969807856967187537694807317667973799073247846210703";

bool encloses(const Interval& x, const char* literal) {
  return x.overlaps(Interval::decimal(literal, 400));
}

}  // namespace

TEST_CASE("known constants are enclosed") {
  PrecisionScope scope(60);
  CHECK(encloses(Interval::pi(), kPi));
  CHECK(encloses(exp(Interval::integer(1)), kE));
  CHECK(encloses(Interval::log2(), kLn2));
  CHECK(encloses(log(Interval::integer(2)), kLn2));
  CHECK(encloses(sqrt(Interval::integer(2)), kSqrt2));
  CHECK(Interval::pi().width_double() < 1e-58);
}

TEST_CASE("outward rounding keeps inexact results strictly bracketed") {
  const Interval third = Interval::integer(1) / 3;
  CHECK(third.certainly_lt(Interval::decimal("0.33333333333333333333333333333333333333333333333334", 400)));
  CHECK(third.certainly_gt(Interval::decimal("0.33333333333333333333333333333333333333333333333333", 400)));
  CHECK(mpfr_less_p(third.lo().raw(), third.hi().raw()));
  CHECK((third * 3).contains(1.0));
  const Interval tenth = Interval::decimal("0.1");
  CHECK(tenth.lo().to_double(MPFR_RNDD) <= 0.1);
  CHECK(tenth.hi().to_double(MPFR_RNDU) >= 0.1);
}

TEST_CASE("exact operations stay points") {
  const Interval a = Interval::integer(7) + Interval::integer(5);
  CHECK(a.width_double() == 0);
  CHECK(a.contains(12.0));
  CHECK(square(Interval::integer(-3)).contains(9.0));
  CHECK(pow(Interval::integer(2), 10).contains(1024.0));
  CHECK(Interval::rational(3, 4).contains(0.75));
}

TEST_CASE("sign-straddling products and squares") {
  const Interval x = Interval::bounds(-2.0, 3.0);
  const Interval y = Interval::bounds(-5.0, 1.0);
  const Interval p = x * y;
  CHECK(p.contains(-15.0));
  CHECK(p.contains(10.0));
  CHECK_FALSE(p.contains(-15.5));
  const Interval s = square(x);
  CHECK(s.contains(0.0));
  CHECK(s.contains(9.0));
  CHECK(s.certainly_nonnegative());
}

TEST_CASE("random identities hold inside the enclosures") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(1e-3, 1e3);
  for (int i = 0; i < 500; ++i) {
    const double a = dist(rng), b = dist(rng);
    const Interval x = Interval::point(a), y = Interval::point(b);
    CHECK(exp(log(x)).contains(a));
    CHECK(((x * y) / y).contains(a));
    CHECK((sqrt(x) * sqrt(x)).contains(a));
    CHECK((cbrt(x) * cbrt(x) * cbrt(x)).contains(a));
    CHECK(log1p(x - 1).contains(std::log(a)) == log(x).contains(std::log(a)));
    CHECK(expm1(log(x)).contains(a - 1));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(log(Interval::bounds(-1.0, 1.0)), DomainError);
  CHECK_THROWS_AS(sqrt(Interval::bounds(-1.0, 1.0)), DomainError);
  CHECK_THROWS_AS(Interval::integer(1) / Interval::bounds(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(Interval::bounds(2.0, 1.0), DomainError);
  CHECK_THROWS_AS(Interval::point(NAN), DomainError);
  CHECK_THROWS_AS(Interval::decimal("1.2.3"), UsageError);
  CHECK_THROWS_AS(direction_from_string("sideways"), UsageError);
}

TEST_CASE("precision scope is thread-local and restores") {
  const int before = default_digits();
  {
    PrecisionScope s(120);
    CHECK(default_digits() == 120);
    CHECK(default_bits() == digits_to_bits(120));
    CHECK(Interval::pi().width_double() < 1e-118);
  }
  CHECK(default_digits() == before);
  CHECK(digits_to_bits(50) >= static_cast<mpfr_prec_t>(std::ceil(50 * std::log2(10.0))) + kGuardBits);
}

TEST_CASE("directed values round toward their side") {
  const Interval third = Interval::integer(1) / 3;
  const DirectedReal up = third.upper(20);
  const DirectedReal down = third.lower(20);
  CHECK(up.direction() == Direction::up);
  CHECK(down.direction() == Direction::down);
  CHECK(up.decimal() == "3.3333333333333333334e-1");
  CHECK(down.decimal() == "3.3333333333333333333e-1");
  CHECK(compare(down, up) < 0);
  CHECK(to_string(Direction::up) == "up");
  CHECK(direction_from_string("down") == Direction::down);
}

TEST_CASE("directed arithmetic refuses mixed directions") {
  const Interval x = Interval::integer(2) / 3;
  const DirectedReal u = x.upper();
  const DirectedReal d = x.lower();
  CHECK((u + u).direction() == Direction::up);
  CHECK((-u).direction() == Direction::down);
  CHECK((u - d).direction() == Direction::up);
  CHECK_THROWS_AS(u + d, DomainError);
  CHECK_THROWS_AS(u * d, DomainError);
  CHECK_THROWS_AS(u * (-u), DomainError);
}

TEST_CASE("hundred-digit recheck never falls below a down-rounded result") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> dist(0.5, 50);
  for (int i = 0; i < 200; ++i) {
    const double a = dist(rng), b = dist(rng);
    auto expr = [&](int digits) {
      PrecisionScope s(digits);
      const Interval x = Interval::point(a), y = Interval::point(b);
      return log(x * y + 1) / sqrt(y) - exp(-x) * cbrt(y);
    };
    const Interval lo = expr(30);
    const Interval hi = expr(100);
    const DirectedReal down = lo.lower(30);
    const DirectedReal up = lo.upper(30);
    CHECK(mpfr_cmp(hi.lo().raw(), down.value().raw()) >= 0);
    CHECK(mpfr_cmp(hi.hi().raw(), up.value().raw()) <= 0);
  }
}

TEST_CASE("huge exponents are representable") {
  const Interval t = Interval::decimal("15.85");
  const Interval x = exp(exp(t));
  CHECK(x.certainly_positive());
  CHECK(log(log(x)).overlaps(t));
  CHECK(exp(-exp(t)).certainly_positive());
}

TEST_CASE("dilogarithm at simple points") {
  PrecisionScope s(40);
  // Li2(1/2) = pi^2/12 - (ln 2)^2/2
  const Interval ref = square(Interval::pi()) / 12 - square(Interval::log2()) / 2;
  CHECK(li2(Interval::rational(1, 2)).overlaps(ref));
  CHECK(li2(Interval::integer(0)).contains(0.0));
  CHECK(li2(Interval::integer(-1)).overlaps(-square(Interval::pi()) / 12));
}
