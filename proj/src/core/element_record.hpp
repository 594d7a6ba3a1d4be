#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace sidon {

// One constructed element of the infinite-family set:
//   m = floor(2^{K^2} * alpha * phi_p), cut into K blocks of 2i-1 bits,
//   reassembled with three-bit spacers and a leading marker bit,
//   a = sum_i Delta_i 2^{(i-1)^2+3i} + 2^{K^2+3K+2},  t = 2^{K^2+3K+2}.
struct ElementRecord {
  uint64_t p = 0;
  int K = 0;
  mpz_class m;
  std::vector<uint64_t> blocks;  // Delta_1..Delta_K, block i < 2^{2i-1}
  mpz_class a;
  mpz_class t;
};

}  // namespace sidon
