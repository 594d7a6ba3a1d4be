#include <cmath>

#include "core/gaussian.hpp"
#include "core/primes.hpp"
#include "doctest.h"

using namespace sidon;

TEST_CASE("two_squares known decompositions") {
  auto check = [](uint64_t p, uint64_t a, uint64_t b) {
    auto d = two_squares(p);
    CHECK(d.a == a);
    CHECK(d.b == b);
    CHECK(d.a * d.a + d.b * d.b == p);
  };
  check(5, 2, 1);
  check(13, 3, 2);
  check(17, 4, 1);
  check(29, 5, 2);
  check(97, 9, 4);
  check(1000033, 913, 408);
}

TEST_CASE("two_squares rejects bad input") {
  CHECK_THROWS_AS(two_squares(7), std::invalid_argument);   // 3 mod 4
  CHECK_THROWS_AS(two_squares(15), std::invalid_argument);  // composite
  CHECK_THROWS_AS(two_squares(2), std::invalid_argument);
}

TEST_CASE("two_squares exhaustive to 10^5") {
  for (uint64_t p : primes_1mod4_upto(100000).primes) {
    auto d = two_squares(p);
    CHECK(d.a * d.a + d.b * d.b == p);
    CHECK(d.a > d.b);
    CHECK(d.b > 0);
  }
}

TEST_CASE("sqrt of -1 mod p") {
  uint64_t p = 1000033;
  uint64_t t = sqrt_minus_one_mod_p(p);
  CHECK(t > 0);
  CHECK(t < p);
  CHECK((static_cast<unsigned __int128>(t) * t) % p == p - 1);
  CHECK_THROWS_AS(sqrt_minus_one_mod_p(7), std::invalid_argument);
  CHECK_THROWS_AS(sqrt_minus_one_mod_p(25), std::invalid_argument);
}

TEST_CASE("phi enclosures") {
  Angle a5 = phi_of(5, 64);
  CHECK(a5.enclosure.width_at_most(64));
  // phi_5 = arctan(1/2)/pi = 0.147583617650433274...
  double m5 = (mpz_get_d(a5.enclosure.lo.get_mpz_t()) + mpz_get_d(a5.enclosure.hi.get_mpz_t())) /
              2.0 * std::ldexp(1.0, -static_cast<int>(a5.enclosure.scale));
  CHECK(std::abs(m5 - 0.14758361765043327) < 1e-15);

  Angle a13 = phi_of(13, 64);
  double m13 = (mpz_get_d(a13.enclosure.lo.get_mpz_t()) + mpz_get_d(a13.enclosure.hi.get_mpz_t())) /
               2.0 * std::ldexp(1.0, -static_cast<int>(a13.enclosure.scale));
  CHECK(std::abs(m13 - 0.18716704181099882) < 1e-15);
}

TEST_CASE("phi properties over class primes") {
  for (uint64_t p : primes_1mod4_upto(2000).primes) {
    Angle a = phi_of(p, 96);
    CHECK(a.enclosure.width_at_most(96));
    CHECK(a.enclosure.is_positive());
    CHECK(a.enclosure.hi * 4 < (mpz_class(1) << a.enclosure.scale));  // phi < 1/4
    auto d = two_squares(p);
    double est = std::atan2(double(d.b), double(d.a)) / M_PI;
    double lo = mpz_get_d(a.enclosure.lo.get_mpz_t()) * std::ldexp(1.0, -int(a.enclosure.scale));
    double hi = mpz_get_d(a.enclosure.hi.get_mpz_t()) * std::ldexp(1.0, -int(a.enclosure.scale));
    CHECK(est > lo - std::ldexp(1.0, -45));
    CHECK(est < hi + std::ldexp(1.0, -45));
  }
}
