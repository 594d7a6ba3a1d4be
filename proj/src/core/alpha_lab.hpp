#pragma once

#include <cstdint>
#include <vector>

#include "core/infinite.hpp"

namespace sidon {

// Uniform dyadic grid over [1,2): points A/2^b for 2^b <= A < 2^{b+1},
// optionally strided.
struct AlphaGrid {
  long resolution_log2 = 0;
  uint64_t stride = 1;

  uint64_t point_count() const;
  std::vector<DyadicRational> points() const;
};

struct SweepRow {
  DyadicRational alpha;
  int K = 0, L = 0;
  uint64_t T_KL = 0;  // ordered quadruples (p,q,r,s), p,r in P_K, q,s in P_L,
                      // a_p + a_q = a_r + a_s, p != r, q != s
  uint64_t A_KL = 0;  // bad tuples with this class signature
  bool precision_error = false;  // construction failed at this alpha; counts are 0
};

// One row per alpha per class pair (K,L), L <= K, in [k_min, k_max].
// Precision failures at an alpha yield a single marked row (K = L = 0).
std::vector<SweepRow> sweep(const ConstructionParams& params, const AlphaGrid& grid);

// Fraction of grid points alpha with m_p(alpha) == m_r(alpha) mod 2^{K^2-L^2},
// where K is the shared class of p and r. Requires resolution >= K^2.
double congruence_measure(uint64_t p, uint64_t r, int L, const AlphaGrid& grid,
                          const ConstructionParams& params);

struct SectorReport {
  int K = 0, L = 0;
  bool zero_theta = false;
  uint64_t pairs_sampled = 0;  // (q,s) direction pairs tested
  uint64_t max_count = 0;      // largest in-sector count over sampled directions
  double bound = 0.0;          // certified lower bound on theta*R^2 + 1
  bool ok = false;             // max_count <= bound (vacuously true with no pairs)
};

// For sampled ordered pairs (q,s) from P_L, counts ordered pairs (p,r) from
// P_K, p != r, whose product point rho_p * conj(rho_r) lies within total
// opening theta = 2^{-L^2} of the direction of rho_s * conj(rho_q), and
// checks each count against theta*R^2 + 1 with R = 2^{(K-1)^2/beta}.
// With zero_theta the sector degenerates to the ray (exact collinearity test).
SectorReport sector_bound_check(int K, int L, const ConstructionParams& params,
                                bool zero_theta = false, uint64_t max_pairs = 64);

// Reporting helpers (plain doubles; assertions against them use generous
// fixed ceilings, so float rounding is immaterial).
double lemma_bound(int K, int L);                          // 2^{(2/beta)((K-1)^2+(L-1)^2)-K^2}
double trend_statistic(int K, int L, uint64_t a_kl);       // A_KL * 2^{L^2-(2/beta)(...)}

}  // namespace sidon
