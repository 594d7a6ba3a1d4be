#include <cmath>
#include <random>

#include "core/fixed_real.hpp"
#include "doctest.h"

using namespace sidon;

namespace {

double mid(const FixedReal& x) {
  mpz_class s = x.lo + x.hi;
  return mpz_get_d(s.get_mpz_t()) * std::ldexp(1.0, -static_cast<int>(x.scale) - 1);
}

}  // namespace

TEST_CASE("pi enclosure") {
  FixedReal p8 = pi_const(8);
  CHECK(p8.lo <= p8.hi);
  CHECK(p8.width_at_most(8));
  // Encloses pi itself: intersects the tight rational bracket
  // 3.14159265358979 < pi < 3.14159265358980.
  mpz_class den = 100000000000000, nlo = 314159265358979, nhi = 314159265358980;
  CHECK(p8.lo * den <= nhi * (mpz_class(1) << p8.scale));
  CHECK(p8.hi * den >= nlo * (mpz_class(1) << p8.scale));

  FixedReal p64 = pi_const(64);
  CHECK(p64.width_at_most(64));
  CHECK(std::abs(mid(p64) - 3.141592653589793) < 1e-15);
}

TEST_CASE("arctan_ratio") {
  FixedReal a = arctan_ratio(1, 2, 64);
  CHECK(a.width_at_most(64));
  CHECK(std::abs(mid(a) - 0.4636476090008061) < 1e-15);

  FixedReal tiny = arctan_ratio(1, 1000000, 32);
  CHECK(tiny.width_at_most(32));
  CHECK(std::abs(mid(tiny) - 1e-6) < std::ldexp(1.0, -32));

  CHECK_THROWS_AS(arctan_ratio(2, 2, 32), std::invalid_argument);
  CHECK_THROWS_AS(arctan_ratio(3, 2, 32), std::invalid_argument);
  CHECK_THROWS_AS(arctan_ratio(0, 2, 32), std::invalid_argument);

  // Complement branch (num/den > 1/2) against libm.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    unsigned long den = rng() % 10000 + 2;
    unsigned long num = rng() % (den - 1) + 1;
    FixedReal e = arctan_ratio(num, den, 64);
    CHECK(e.lo <= e.hi);
    CHECK(e.width_at_most(64));
    double v = std::atan(double(num) / double(den));
    CHECK(std::abs(mid(e) - v) < 1e-12);
  }
}

TEST_CASE("log enclosures") {
  CHECK(log_of(8, true, 64).contains(3, 1));
  CHECK(log_of(1024, true, 32).contains(10, 1));
  FixedReal l2 = log_of(2, false, 64);
  CHECK(std::abs(mid(l2) - 0.6931471805599453) < 1e-15);
  FixedReal l9 = log_of(9, true, 64);
  CHECK(std::abs(mid(l9) - 3.1699250014423124) < 1e-14);
  CHECK_THROWS_AS(log_of(1, true, 32), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    unsigned long n = rng() % 1000000 + 2;
    FixedReal e = log_of(n, true, 48);
    CHECK(e.width_at_most(48));
    CHECK(std::abs(mid(e) - std::log2(double(n))) < 1e-10);
  }
}

TEST_CASE("monotone refinement") {
  // Doubling precision keeps the target inside and shrinks the width.
  for (long bits : {16L, 32L, 64L, 128L}) {
    FixedReal coarse = arctan_ratio(2, 3, bits);
    FixedReal fine = arctan_ratio(2, 3, bits * 2);
    CHECK(fine.width_at_most(bits * 2));
    // Intervals of the same value must overlap.
    FixedReal d = coarse - fine;
    CHECK(d.lo <= 0);
    CHECK(d.hi >= 0);
  }
}

TEST_CASE("sqrt and beta") {
  FixedReal s = sqrt_of(2, 64);
  CHECK(s.width_at_most(64));
  CHECK(std::abs(mid(s) - 1.4142135623730951) < 1e-15);
  CHECK(sqrt_of(0, 16).contains(0, 1));
  CHECK(sqrt_of(9, 32).contains(3, 1));
  CHECK_THROWS_AS(sqrt_of(-1, 16), std::invalid_argument);

  FixedReal b = beta_const(64);
  CHECK(b.width_at_most(60));
  // beta^2 - 2 beta - 1 == 0
  FixedReal expr = b * b - mul_int(b, 2).rounded(b.scale * 2) -
                   FixedReal::exact(mpz_class(1) << (2 * b.scale), 2 * b.scale);
  CHECK(expr.lo <= 0);
  CHECK(expr.hi >= 0);
}

TEST_CASE("interval arithmetic basics") {
  FixedReal a = FixedReal::from_ratio(1, 3, 32);
  FixedReal b = FixedReal::from_ratio(1, 7, 32);
  CHECK((a + b).contains(10, 21));
  CHECK((a - b).contains(4, 21));
  CHECK((a * b).contains(1, 21));
  CHECK(div(a, b, 32).contains(7, 3));
  CHECK(mul_2exp(a, 3).contains(8, 3));
  CHECK(mul_int(a, 6).contains(2, 1));
  CHECK(abs(-a).contains(1, 3));
  CHECK((-a).is_negative());
  CHECK(a.is_positive());
}

TEST_CASE("floor_scaled and escalation") {
  FixedReal third = FixedReal::from_ratio(1, 3, 64);
  CHECK(floor_scaled(third, 0) == 0);
  CHECK(floor_scaled(third, 4) == 5);  // floor(16/3)

  // Enclosure straddling an integer: floor undetermined.
  FixedReal half(mpz_class(0), mpz_class(1), 0);
  CHECK(!try_floor_scaled(half, 0).has_value());
  CHECK_THROWS_AS(floor_scaled(half, 0), NeedsMorePrecision);

  CHECK(certified_floor([](long bits) { return FixedReal::from_ratio(22, 7, bits); }, 0, 8,
                        1 << 10) == 3);

  // A straddle that never resolves exhausts the cap.
  CHECK_THROWS_AS(certified_floor(
                      [](long bits) {
                        return FixedReal((mpz_class(1) << bits) - 1, (mpz_class(1) << bits) + 1,
                                         bits);
                      },
                      0, 8, 1 << 10),
                  PrecisionCapExceeded);
}

TEST_CASE("dyadic alpha range") {
  CHECK(DyadicRational(1, 0).in_alpha_range());
  CHECK(DyadicRational(3, 1).in_alpha_range());
  CHECK(DyadicRational(63, 5).in_alpha_range());
  CHECK(!DyadicRational(2, 0).in_alpha_range());
  CHECK(!DyadicRational(31, 5).in_alpha_range());
  CHECK(!DyadicRational(64, 5).in_alpha_range());
}
