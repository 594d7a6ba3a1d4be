#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "core/fixed_real.hpp"

namespace sidon {

enum class FiniteMethod { Greedy, Log, Gauss };

struct FiniteSet {
  FiniteMethod method = FiniteMethod::Greedy;
  uint64_t n = 0;  // size parameter (count for greedy, range n otherwise)
  std::vector<mpz_class> elements;        // ascending, distinct
  std::vector<uint64_t> source_primes;    // per element; 0 for greedy
};

std::string method_name(FiniteMethod m);

// Greedy rule: a_1 = 1, a_k = least integer outside {a_i + a_j - a_l}.
FiniteSet greedy_sidon(uint64_t count);

// x_p = floor((2n/ln n) * ln p) for primes p <= sqrt(n / (2 ln n)).
// Throws RangeEmpty when the range bound is below 2.
FiniteSet log_construction(uint64_t n, long precision_cap = kDefaultPrecisionCap);

// c_p = floor(n * phi_p) for p == 1 (mod 4), p <= sqrt(n)/4. Requires n >= 400.
FiniteSet gauss_construction(uint64_t n, long precision_cap = kDefaultPrecisionCap);

}  // namespace sidon
