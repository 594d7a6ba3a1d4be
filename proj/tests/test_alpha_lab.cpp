#include <cmath>

#include "core/alpha_lab.hpp"
#include "core/gaussian.hpp"
#include "doctest.h"

using namespace sidon;

namespace {
const ConstructionParams kDefault;
}

TEST_CASE("alpha grid points") {
  AlphaGrid g0{0, 1};
  auto p0 = g0.points();
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].num == 1);
  CHECK(p0[0].log2_den == 0);

  AlphaGrid g5{5, 1};
  auto p5 = g5.points();
  REQUIRE(p5.size() == 32);
  CHECK(p5.front().num == 32);
  CHECK(p5.back().num == 63);
  for (const auto& a : p5) CHECK(a.in_alpha_range());

  AlphaGrid strided{5, 8};
  CHECK(strided.points().size() == 4);
  CHECK_THROWS_AS((AlphaGrid{5, 0}.points()), std::invalid_argument);
}

TEST_CASE("sweep single point equals direct count") {
  ConstructionParams p = kDefault;
  p.k_max = 4;
  auto rows = sweep(p, AlphaGrid{0, 1});
  // (K,L) pairs with 3 <= L <= K <= 4: (3,3), (4,3), (4,4).
  REQUIRE(rows.size() == 3);
  auto el = generate(p);
  auto bad = find_bad_tuples(el);
  for (const auto& r : rows) {
    CHECK(!r.precision_error);
    uint64_t expect = 0;
    for (const auto& t : bad)
      if (t.K == r.K && t.L == r.L) ++expect;
    CHECK(r.A_KL == expect);
  }
  // P_3 is empty and |P_4| = 2: T_44 counts only transposed pairs.
  CHECK(rows[0].T_KL == 0);
  CHECK(rows[1].T_KL == 0);
  CHECK(rows[2].T_KL == 2);
}

TEST_CASE("sweep is reproducible") {
  ConstructionParams p = kDefault;
  p.k_max = 5;
  auto a = sweep(p, AlphaGrid{3, 1});
  auto b = sweep(p, AlphaGrid{3, 1});
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].alpha.num == b[i].alpha.num);
    CHECK(a[i].K == b[i].K);
    CHECK(a[i].L == b[i].L);
    CHECK(a[i].T_KL == b[i].T_KL);
    CHECK(a[i].A_KL == b[i].A_KL);
  }
}

TEST_CASE("bad tuples found in sweeps satisfy the angle condition") {
  // Enclosure check of |phi_p + phi_q - phi_r - phi_s| < 4 * 2^{-L^2} plus the
  // exponent inequality, for every tuple over a coarse alpha grid.
  double beta = 1.0 + std::sqrt(2.0);
  for (const auto& a : AlphaGrid{4, 1}.points()) {
    ConstructionParams p = kDefault;
    p.alpha = a;
    auto bad = find_bad_tuples(generate(p));
    for (const auto& t : bad) {
      long l2 = long(t.L) * t.L;
      FixedReal d = (phi_of(t.p, l2 + 32).enclosure + phi_of(t.q, l2 + 32).enclosure) -
                    (phi_of(t.r, l2 + 32).enclosure + phi_of(t.s, l2 + 32).enclosure);
      FixedReal ad = abs(d);
      // |d| < 4 * 2^{-L^2}: upper endpoint below the threshold.
      mpz_class thr = mpz_class(1) << (ad.scale - l2 + 2);
      CHECK(ad.hi < thr);
      CHECK(double((t.K - 1) * (t.K - 1) + (t.L - 1) * (t.L - 1)) >
            beta * double((t.L - 1) * (t.L - 1)));
    }
  }
}

TEST_CASE("congruence measure trivial cases") {
  AlphaGrid g{16, 1};
  CHECK(congruence_measure(5, 5, 3, g, kDefault) == 1.0);
  CHECK(congruence_measure(5, 13, 4, g, kDefault) == 1.0);  // K == L, modulus 1
  CHECK_THROWS_AS(congruence_measure(5, 13, 3, AlphaGrid{10, 1}, kDefault),
                  ResolutionTooCoarse);
  CHECK_THROWS_AS(congruence_measure(5, 17, 3, g, kDefault), std::invalid_argument);
  CHECK_THROWS_AS(congruence_measure(5, 13, 5, g, kDefault), std::invalid_argument);
}

TEST_CASE("congruence measure stays under the test ceiling") {
  AlphaGrid g{16, 1};
  double f = congruence_measure(5, 13, 3, g, kDefault);
  CHECK(f >= 0.0);
  CHECK(f <= 16.0 * std::exp2(9 - 16));
  // Doubling the grid once: the fraction stays in the same ballpark.
  double f2 = congruence_measure(5, 13, 3, AlphaGrid{17, 1}, kDefault);
  CHECK(f2 <= 16.0 * std::exp2(9 - 16));
}

TEST_CASE("sector bound check") {
  SectorReport empty = sector_bound_check(4, 3, kDefault);  // P_3 is empty
  CHECK(empty.pairs_sampled == 0);
  CHECK(empty.max_count == 0);
  CHECK(empty.ok);

  SectorReport r = sector_bound_check(5, 4, kDefault);
  CHECK(r.pairs_sampled == 2);
  CHECK(r.ok);
  CHECK(r.bound > 1.0);

  SectorReport z = sector_bound_check(5, 5, kDefault, true);
  CHECK(z.zero_theta);
  CHECK(z.max_count <= 1);
  CHECK(z.ok);
}

TEST_CASE("reporting helpers") {
  CHECK(lemma_bound(4, 4) == doctest::Approx(0.470311).epsilon(1e-4));
  CHECK(trend_statistic(4, 4, 0) == 0.0);
  CHECK(trend_statistic(5, 4, 7) > 0.0);
}
