#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "core/element_record.hpp"
#include "core/fixed_real.hpp"
#include "core/primes.hpp"

namespace sidon {

struct ConstructionParams {
  DyadicRational alpha{1, 0};  // alpha in [1,2), exact dyadic
  int k_min = 3;
  int k_max = 6;
  long precision_cap = kDefaultPrecisionCap;
};

// Ordered quadruple witnessing a_p + a_q = a_r + a_s with
// a_p > a_r >= a_s > a_q; p,r in P_K and q,s in P_L, K >= L.
struct BadTuple {
  uint64_t p = 0, q = 0, r = 0, s = 0;
  int K = 0, L = 0;
};

struct SidonSet {
  std::vector<mpz_class> elements;         // ascending
  std::vector<mpz_class> removed;          // pruned a-values (tuple maxima + duplicates)
};

// Unique K > 2 with (K-2)^2 < beta*log2(p) < (K-1)^2, beta = 1 + sqrt(2).
int k_index(uint64_t p, const ConstructionParams& params);

// Primes of class K, ascending.
PrimeTable class_members(int K, const ConstructionParams& params);

// m_p = floor(2^{K^2} * alpha * phi_p)
mpz_class m_value(uint64_t p, const ConstructionParams& params);

// Cut the K^2-digit big-endian expansion of m into K blocks of 2i-1 bits.
std::vector<uint64_t> blocks_of(const mpz_class& m, int K);

// a = sum Delta_i 2^{(i-1)^2+3i} + 2^{K^2+3K+2}; also returns t (the leading term).
struct Assembled {
  mpz_class a;
  mpz_class t;
};
Assembled assemble(const std::vector<uint64_t>& blocks, int K);

ElementRecord element(uint64_t p, const ConstructionParams& params);

// One record per prime in every class k_min..k_max, ordered by p.
std::vector<ElementRecord> generate(const ConstructionParams& params);

// Complete list of bad tuples (duplicated a-values are excluded from the
// search; prune removes them separately). When use_angle_filter is set, the
// necessary condition |phi_p+phi_q-phi_r-phi_s| < 4*2^{-L^2} discards
// candidates certifiably violating it before the exact sum check.
std::vector<BadTuple> find_bad_tuples(const std::vector<ElementRecord>& elements,
                                      bool use_angle_filter = false,
                                      long precision_cap = kDefaultPrecisionCap);

// Removes the a_p (largest member) of every bad tuple plus all-but-one of any
// duplicated a-value.
SidonSet prune(const std::vector<ElementRecord>& elements, const std::vector<BadTuple>& bad);

// #{a in set : a <= x}
uint64_t counting(const SidonSet& set, const mpz_class& x);

// Largest prime that can appear in classes <= k_max (certified upper bound
// for 2^{(k_max-1)^2 / beta}).
uint64_t class_prime_bound(int k_max, long precision_cap = kDefaultPrecisionCap);

}  // namespace sidon
