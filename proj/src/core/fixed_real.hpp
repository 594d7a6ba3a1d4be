#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>

#include "core/errors.hpp"

namespace sidon {

// Certified two-endpoint enclosure of a real number.
// Value lies in [lo * 2^-scale, hi * 2^-scale]. Every operation rounds the
// lower endpoint down and the upper endpoint up, so the exact mathematical
// result is always contained in the returned interval.
struct FixedReal {
  mpz_class lo;
  mpz_class hi;
  long scale = 0;  // binary precision B of the mantissas

  FixedReal() = default;
  FixedReal(mpz_class lo_, mpz_class hi_, long scale_);

  static FixedReal exact(const mpz_class& v, long scale = 0);
  // Enclosure of num/den (den > 0) at the given scale.
  static FixedReal from_ratio(const mpz_class& num, const mpz_class& den, long scale);

  // Directed re-rounding to a new scale (widening when new_scale < scale).
  FixedReal rounded(long new_scale) const;

  // Width as (hi - lo) * 2^-scale <= 2^-bits?
  bool width_at_most(long bits) const;

  bool contains(const mpz_class& num, const mpz_class& den) const;  // rational num/den, den>0
  bool is_negative() const { return hi < 0; }
  bool is_positive() const { return lo > 0; }
};

FixedReal operator+(const FixedReal& a, const FixedReal& b);
FixedReal operator-(const FixedReal& a, const FixedReal& b);
FixedReal operator-(const FixedReal& a);
// Exact product; result scale = a.scale + b.scale.
FixedReal operator*(const FixedReal& a, const FixedReal& b);
// Exact scaling by an integer / power of two.
FixedReal mul_int(const FixedReal& a, const mpz_class& k);
FixedReal mul_2exp(const FixedReal& a, long k);
// Quotient enclosure at out_scale; requires b strictly positive (b.lo > 0).
FixedReal div(const FixedReal& a, const FixedReal& b, long out_scale);
// abs(x) as an enclosure.
FixedReal abs(const FixedReal& a);

// Exact dyadic rational A / 2^b.
struct DyadicRational {
  mpz_class num;
  long log2_den = 0;

  DyadicRational() = default;
  DyadicRational(mpz_class num_, long log2_den_) : num(std::move(num_)), log2_den(log2_den_) {}
  // Alpha values must live in [1,2): 2^b <= A < 2^{b+1}.
  bool in_alpha_range() const;
};

// --- constants and elementary enclosures ---

// pi to width <= 2^-bits (Machin: pi = 16 atan(1/5) - 4 atan(1/239)).
FixedReal pi_const(long bits);

// arctan(num/den) for 0 < num < den, width <= 2^-bits.
FixedReal arctan_ratio(const mpz_class& num, const mpz_class& den, long bits);

// ln n (base2=false) or log2 n (base2=true) for n >= 2, width <= 2^-bits.
FixedReal log_of(const mpz_class& n, bool base2, long bits);

// sqrt(v) for v >= 0, width <= 2^-bits.
FixedReal sqrt_of(const mpz_class& v, long bits);

// Enclosure of beta = 1 + sqrt(2) to width <= 2^-bits.
FixedReal beta_const(long bits);

// floor(v * 2^shift) when it is determined by the enclosure; throws
// NeedsMorePrecision when the endpoints floor differently.
mpz_class floor_scaled(const FixedReal& x, long shift);
std::optional<mpz_class> try_floor_scaled(const FixedReal& x, long shift);

// Escalation loop: evaluate make(bits) starting from hint bits, doubling until
// the floor is determined; throws PrecisionCapExceeded beyond cap_bits.
mpz_class certified_floor(const std::function<FixedReal(long)>& make, long shift,
                          long hint_bits, long cap_bits);

inline constexpr long kDefaultPrecisionCap = 1 << 16;

}  // namespace sidon
