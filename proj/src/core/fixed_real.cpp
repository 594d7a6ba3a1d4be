#include "core/fixed_real.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace sidon {

namespace {

mpz_class shl(const mpz_class& v, long k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

// floor(v / 2^k), arithmetic shift.
mpz_class shr_floor(const mpz_class& v, long k) {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

mpz_class shr_ceil(const mpz_class& v, long k) {
  mpz_class r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class cdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// floor(a * 2^e / b) for b > 0, e of any sign.
mpz_class qfloor(const mpz_class& a, const mpz_class& b, long e) {
  return e >= 0 ? fdiv(shl(a, e), b) : fdiv(a, shl(b, -e));
}

mpz_class qceil(const mpz_class& a, const mpz_class& b, long e) {
  return e >= 0 ? cdiv(shl(a, e), b) : cdiv(a, shl(b, -e));
}

}  // namespace

FixedReal::FixedReal(mpz_class lo_, mpz_class hi_, long scale_)
    : lo(std::move(lo_)), hi(std::move(hi_)), scale(scale_) {
  assert(lo <= hi);
}

FixedReal FixedReal::exact(const mpz_class& v, long scale) {
  return FixedReal(v, v, scale);
}

FixedReal FixedReal::from_ratio(const mpz_class& num, const mpz_class& den, long scale) {
  if (den <= 0) throw std::invalid_argument("from_ratio: denominator must be positive");
  return FixedReal(qfloor(num, den, scale), qceil(num, den, scale), scale);
}

FixedReal FixedReal::rounded(long new_scale) const {
  if (new_scale == scale) return *this;
  if (new_scale > scale) return FixedReal(shl(lo, new_scale - scale), shl(hi, new_scale - scale), new_scale);
  long d = scale - new_scale;
  return FixedReal(shr_floor(lo, d), shr_ceil(hi, d), new_scale);
}

bool FixedReal::width_at_most(long bits) const {
  mpz_class w = hi - lo;
  // w * 2^-scale <= 2^-bits  <=>  w <= 2^(scale-bits)
  if (scale >= bits) return w <= shl(mpz_class(1), scale - bits);
  return shl(w, bits - scale) <= 1;
}

bool FixedReal::contains(const mpz_class& num, const mpz_class& den) const {
  assert(den > 0);
  mpz_class mid = shl(num, scale);
  return lo * den <= mid && mid <= hi * den;
}

namespace {
// Align two enclosures to a common (finer) scale.
std::pair<FixedReal, FixedReal> aligned(const FixedReal& a, const FixedReal& b) {
  long s = std::max(a.scale, b.scale);
  return {a.rounded(s), b.rounded(s)};
}
}  // namespace

FixedReal operator+(const FixedReal& a, const FixedReal& b) {
  auto [x, y] = aligned(a, b);
  return FixedReal(x.lo + y.lo, x.hi + y.hi, x.scale);
}

FixedReal operator-(const FixedReal& a, const FixedReal& b) {
  auto [x, y] = aligned(a, b);
  return FixedReal(x.lo - y.hi, x.hi - y.lo, x.scale);
}

FixedReal operator-(const FixedReal& a) { return FixedReal(-a.hi, -a.lo, a.scale); }

FixedReal operator*(const FixedReal& a, const FixedReal& b) {
  mpz_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  mpz_class lo = std::min(std::min(p1, p2), std::min(p3, p4));
  mpz_class hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return FixedReal(lo, hi, a.scale + b.scale);
}

FixedReal mul_int(const FixedReal& a, const mpz_class& k) {
  mpz_class p1 = a.lo * k, p2 = a.hi * k;
  if (k >= 0) return FixedReal(p1, p2, a.scale);
  return FixedReal(p2, p1, a.scale);
}

FixedReal mul_2exp(const FixedReal& a, long k) {
  // Pure scale shift; exact in either direction.
  return FixedReal(a.lo, a.hi, a.scale - k);
}

FixedReal div(const FixedReal& a, const FixedReal& b, long out_scale) {
  if (b.lo <= 0) throw std::invalid_argument("div: divisor enclosure must be strictly positive");
  long e = out_scale + b.scale - a.scale;
  mpz_class lo = std::min(qfloor(a.lo, b.lo, e), qfloor(a.lo, b.hi, e));
  mpz_class hi = std::max(qceil(a.hi, b.lo, e), qceil(a.hi, b.hi, e));
  return FixedReal(lo, hi, out_scale);
}

FixedReal abs(const FixedReal& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return -a;
  return FixedReal(mpz_class(0), std::max<mpz_class>(-a.lo, a.hi), a.scale);
}

bool DyadicRational::in_alpha_range() const {
  mpz_class one = 1;
  return num >= shl(one, log2_den) && num < shl(one, log2_den + 1);
}

namespace {

// Alternating series for arctan(n/d), 0 < n/d <= 1/2, on integer mantissas
// with directed rounding. Tail of an alternating series with decreasing terms
// is bounded by the first omitted term.
FixedReal arctan_small(const mpz_class& n, const mpz_class& d, long bits) {
  for (long w = bits + 32;; w *= 2) {
    mpz_class n2 = n * n, d2 = d * d;
    mpz_class plo = qfloor(n, d, w);  // x^(2k+1) * 2^w, bracketed
    mpz_class phi = qceil(n, d, w);
    mpz_class slo = 0, shi = 0;
    bool positive = true;
    for (unsigned long k = 0;; ++k, positive = !positive) {
      mpz_class tlo = fdiv(plo, mpz_class(2 * k + 1));
      mpz_class thi = cdiv(phi, mpz_class(2 * k + 1));
      if (positive) {
        slo += tlo;
        shi += thi;
      } else {
        slo -= thi;
        shi -= tlo;
      }
      plo = fdiv(plo * n2, d2);
      phi = cdiv(phi * n2, d2);
      mpz_class tail = cdiv(phi, mpz_class(2 * k + 3));
      if (tail <= 1) {
        slo -= tail;
        shi += tail;
        break;
      }
    }
    FixedReal r(slo, shi, w);
    if (r.width_at_most(bits)) return r;
  }
}

// Positive series for artanh(n/d), 0 < n/d <= 1/2; geometric tail bound.
FixedReal artanh_small(const mpz_class& n, const mpz_class& d, long bits) {
  for (long w = bits + 32;; w *= 2) {
    mpz_class n2 = n * n, d2 = d * d;
    mpz_class plo = qfloor(n, d, w);
    mpz_class phi = qceil(n, d, w);
    mpz_class slo = 0, shi = 0;
    for (unsigned long k = 0;; ++k) {
      slo += fdiv(plo, mpz_class(2 * k + 1));
      shi += cdiv(phi, mpz_class(2 * k + 1));
      plo = fdiv(plo * n2, d2);
      phi = cdiv(phi * n2, d2);
      // Remaining sum <= t_{k+1} / (1 - (n/d)^2)
      // The ceil-rounded mantissa bottoms out at 1, so demand only a
      // few-ulp tail instead of a single ulp.
      mpz_class tail = cdiv(cdiv(phi, mpz_class(2 * k + 3)) * d2, d2 - n2);
      if (tail <= 4) {
        shi += tail + 1;
        break;
      }
    }
    FixedReal r(slo, shi, w);
    if (r.width_at_most(bits)) return r;
  }
}

FixedReal pi_over_4(long bits) {
  // Machin: pi/4 = 4 atan(1/5) - atan(1/239)
  FixedReal a = mul_2exp(arctan_small(1, 5, bits + 3), 2);
  FixedReal b = arctan_small(1, 239, bits + 1);
  return a - b;
}

FixedReal ln2_const(long bits) { return mul_2exp(artanh_small(1, 3, bits + 1), 1); }

}  // namespace

FixedReal pi_const(long bits) {
  if (bits < 8) throw std::invalid_argument("pi_const: bits must be >= 8");
  return mul_2exp(pi_over_4(bits + 2), 2);
}

FixedReal arctan_ratio(const mpz_class& num, const mpz_class& den, long bits) {
  if (num <= 0 || den <= 0) throw std::invalid_argument("arctan_ratio: arguments must be positive");
  if (num >= den) throw std::invalid_argument("arctan_ratio: requires num < den");
  if (2 * num <= den) return arctan_small(num, den, bits);
  // Complement identity keeps the argument an exact rational below 1/3:
  // arctan(x) = pi/4 - arctan((1-x)/(1+x)) for x in (0,1).
  return pi_over_4(bits + 1) - arctan_small(den - num, den + num, bits + 1);
}

FixedReal log_of(const mpz_class& n, bool base2, long bits) {
  if (n < 2) throw std::invalid_argument("log_of: requires n >= 2");
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
  mpz_class pow2 = 1;
  mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  mpz_class zn = n - pow2;  // n = 2^e * m, m in [1,2); z = (m-1)/(m+1) in [0,1/3]
  if (zn == 0 && base2) return FixedReal::exact(e, 0);
  long extra = 8;
  while ((mpz_class(1) << extra) < e + 4) ++extra;
  for (;; extra *= 2) {
    long b = bits + extra;
    FixedReal ln;
    if (zn == 0) {
      ln = mul_int(ln2_const(b), e);
    } else {
      FixedReal frac = mul_2exp(artanh_small(zn, n + pow2, b), 1);
      ln = (e == 0) ? frac : mul_int(ln2_const(b), e) + frac;
    }
    FixedReal r = base2 ? div(ln, ln2_const(b), bits + extra / 2) : ln;
    if (r.width_at_most(bits)) return r;
  }
}

FixedReal sqrt_of(const mpz_class& v, long bits) {
  if (v < 0) throw std::invalid_argument("sqrt_of: negative argument");
  long w = bits + 1;
  mpz_class shifted;
  mpz_mul_2exp(shifted.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * w));
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), shifted.get_mpz_t());
  return FixedReal(s, s + 1, w);
}

FixedReal beta_const(long bits) {
  FixedReal r = sqrt_of(2, bits);
  return FixedReal(r.lo + (mpz_class(1) << r.scale), r.hi + (mpz_class(1) << r.scale), r.scale);
}

std::optional<mpz_class> try_floor_scaled(const FixedReal& x, long shift) {
  long d = shift - x.scale;
  mpz_class flo = d >= 0 ? shl(x.lo, d) : shr_floor(x.lo, -d);
  mpz_class fhi = d >= 0 ? shl(x.hi, d) : shr_floor(x.hi, -d);
  if (flo == fhi) return flo;
  return std::nullopt;
}

mpz_class floor_scaled(const FixedReal& x, long shift) {
  auto f = try_floor_scaled(x, shift);
  if (!f) throw NeedsMorePrecision("floor_scaled: enclosure straddles an integer boundary");
  return *f;
}

mpz_class certified_floor(const std::function<FixedReal(long)>& make, long shift,
                          long hint_bits, long cap_bits) {
  for (long bits = std::max<long>(hint_bits, 8); bits <= cap_bits; bits *= 2) {
    auto f = try_floor_scaled(make(bits), shift);
    if (f) return *f;
  }
  throw PrecisionCapExceeded("certified_floor: escalation passed the precision cap");
}

}  // namespace sidon
