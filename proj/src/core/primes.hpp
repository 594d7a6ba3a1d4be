#pragma once

#include <cstdint>
#include <vector>

namespace sidon {

// Ascending primes <= bound, optionally restricted to p == 1 (mod 4).
struct PrimeTable {
  uint64_t bound = 0;
  bool class_1mod4 = false;
  std::vector<uint64_t> primes;
};

// All primes <= x (segmented sieve).
PrimeTable primes_upto(uint64_t x);

// Primes p <= x with p == 1 (mod 4).
PrimeTable primes_1mod4_upto(uint64_t x);

// #{p <= x : p prime, p == 1 (mod 4)}
uint64_t pi1(uint64_t x);

// Deterministic Miller-Rabin, correct for all n < 2^64.
bool is_prime(uint64_t n);

}  // namespace sidon
