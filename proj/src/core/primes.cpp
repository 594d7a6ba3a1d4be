#include "core/primes.hpp"

#include <algorithm>
#include <cmath>

namespace sidon {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr u64 kSegment = 1 << 16;

// Sieve [lo, hi) against the given base primes into `composite`.
void sieve_segment(u64 lo, u64 hi, const std::vector<u64>& base, std::vector<bool>& composite) {
  composite.assign(hi - lo, false);
  for (u64 p : base) {
    if (p * p >= hi) break;
    u64 start = std::max(p * p, (lo + p - 1) / p * p);
    for (u64 m = start; m < hi; m += p) composite[m - lo] = true;
  }
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for every n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeTable primes_upto(u64 x) {
  PrimeTable t;
  t.bound = x;
  if (x < 2) return t;
  // Base primes up to sqrt(x) by a simple sieve.
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(x))) + 2;
  std::vector<bool> small(root + 1, false);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) {
      base.push_back(i);
      for (u64 j = i * i; j <= root; j += i) small[j] = true;
    }
  }
  std::vector<bool> composite;
  for (u64 lo = 2; lo <= x; lo += kSegment) {
    u64 hi = std::min(x + 1, lo + kSegment);
    sieve_segment(lo, hi, base, composite);
    for (u64 n = lo; n < hi; ++n) {
      if (!composite[n - lo]) t.primes.push_back(n);
    }
  }
  return t;
}

PrimeTable primes_1mod4_upto(u64 x) {
  PrimeTable all = primes_upto(x);
  PrimeTable t;
  t.bound = x;
  t.class_1mod4 = true;
  for (u64 p : all.primes) {
    if (p % 4 == 1) t.primes.push_back(p);
  }
  return t;
}

u64 pi1(u64 x) { return primes_1mod4_upto(x).primes.size(); }

}  // namespace sidon
