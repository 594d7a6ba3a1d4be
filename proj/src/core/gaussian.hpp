#pragma once

#include <cstdint>

#include "core/fixed_real.hpp"

namespace sidon {

// p = a^2 + b^2 with a > b > 0; unique for p == 1 (mod 4).
struct GaussianPrimeDecomposition {
  uint64_t p = 0;
  uint64_t a = 0;
  uint64_t b = 0;
};

// Certified enclosure of phi_p = arctan(b/a)/pi, in (0, 1/4).
struct Angle {
  uint64_t p = 0;
  FixedReal enclosure;
  long bits = 0;
};

// t with 0 < t < p and t^2 == -1 (mod p); rejects p not prime or p != 1 mod 4.
uint64_t sqrt_minus_one_mod_p(uint64_t p);

GaussianPrimeDecomposition two_squares(uint64_t p);

// Enclosure of arctan(b/a)/pi of width <= 2^-bits; requires bits >= 16.
Angle phi_of(uint64_t p, long bits);

// Same enclosure from a known decomposition (a > b > 0).
FixedReal phi_enclosure(uint64_t a, uint64_t b, long bits);

}  // namespace sidon
