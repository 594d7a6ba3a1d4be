#include "core/gaussian.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "core/primes.hpp"

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

u64 isqrt64(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void check_class(u64 p) {
  if (p % 4 != 1 || !is_prime(p))
    throw std::invalid_argument("requires a prime p == 1 (mod 4)");
}

}  // namespace

u64 sqrt_minus_one_mod_p(u64 p) {
  check_class(p);
  // For a quadratic non-residue a, a^((p-1)/4) squares to a^((p-1)/2) = -1.
  for (u64 a = 2;; ++a) {
    if (powmod(a, (p - 1) / 2, p) == p - 1) {
      u64 t = powmod(a, (p - 1) / 4, p);
      return t;
    }
  }
}

GaussianPrimeDecomposition two_squares(u64 p) {
  u64 t = sqrt_minus_one_mod_p(p);
  // Cornacchia: Euclid on (p, t); the first remainder below sqrt(p) is one leg.
  u64 root = isqrt64(p);
  u64 r0 = p, r1 = t;
  while (r1 > root) {
    u64 r2 = r0 % r1;
    r0 = r1;
    r1 = r2;
  }
  u64 a = r1;
  u64 b = isqrt64(p - a * a);
  if (a < b) std::swap(a, b);
  if (a * a + b * b != p || b == 0 || a <= b)
    throw std::logic_error("two_squares: decomposition failed");
  return {p, a, b};
}

FixedReal phi_enclosure(u64 a, u64 b, long bits) {
  FixedReal at = arctan_ratio(b, a, bits + 2);
  return div(at, pi_const(bits + 2), bits + 2);
}

Angle phi_of(u64 p, long bits) {
  if (bits < 16) throw std::invalid_argument("phi_of: bits must be >= 16");
  auto d = two_squares(p);
  for (long extra = 2;; extra *= 2) {
    FixedReal e = phi_enclosure(d.a, d.b, bits + extra);
    if (e.width_at_most(bits)) return Angle{p, e, bits};
  }
}

}  // namespace sidon
