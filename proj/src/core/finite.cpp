#include "core/finite.hpp"

#include <algorithm>

#include "core/gaussian.hpp"
#include "core/primes.hpp"

namespace sidon {

std::string method_name(FiniteMethod m) {
  switch (m) {
    case FiniteMethod::Greedy: return "greedy";
    case FiniteMethod::Log: return "log";
    case FiniteMethod::Gauss: return "gauss";
  }
  return "?";
}

FiniteSet greedy_sidon(uint64_t count) {
  if (count < 1) throw std::invalid_argument("greedy_sidon: count must be >= 1");
  FiniteSet out;
  out.method = FiniteMethod::Greedy;
  out.n = count;
  // a_k <= (k-1)^3 + 1, so the forbidden table fits in (count-1)^3 + 2 flags.
  size_t limit = static_cast<size_t>((count - 1) * (count - 1) * (count - 1)) + 2;
  std::vector<bool> forbidden(limit + 1, false);
  std::vector<int64_t> a;
  auto add_combos_with = [&](int64_t v) {
    // New forbidden values once v joins the set: every a_i + a_j - a_l
    // combination that uses v at least once.
    for (int64_t x : a) {
      for (int64_t y : a) {
        int64_t f1 = v + x - y;  // v as a summand
        if (f1 >= 0 && static_cast<size_t>(f1) <= limit) forbidden[f1] = true;
        int64_t f2 = x + y - v;  // v subtracted
        if (f2 >= 0 && static_cast<size_t>(f2) <= limit) forbidden[f2] = true;
      }
      int64_t f3 = v + v - x;
      if (f3 >= 0 && static_cast<size_t>(f3) <= limit) forbidden[f3] = true;
      int64_t f4 = v + x - v;  // = x, already in
      (void)f4;
    }
    if (static_cast<size_t>(v) <= limit) forbidden[v] = true;  // v + v - v
  };
  a.push_back(1);
  add_combos_with(1);
  while (a.size() < count) {
    int64_t c = a.back() + 1;
    while (forbidden[c]) ++c;
    a.push_back(c);
    add_combos_with(c);
  }
  for (int64_t v : a) {
    out.elements.emplace_back(static_cast<unsigned long>(v));
    out.source_primes.push_back(0);
  }
  return out;
}

FiniteSet log_construction(uint64_t n, long precision_cap) {
  if (n < 2) throw RangeEmpty("log_construction: range bound below 2");
  FiniteSet out;
  out.method = FiniteMethod::Log;
  out.n = n;
  // p qualifies iff p <= sqrt(n / (2 ln n)), i.e. 2 p^2 ln n <= n; the boundary
  // is irrational so the certified comparison always resolves.
  auto qualifies = [&](uint64_t p) {
    mpz_class lhs_factor = 2 * mpz_class(p) * mpz_class(p);
    for (long bits = 32; bits <= precision_cap; bits *= 2) {
      FixedReal v = mul_int(log_of(n, false, bits), lhs_factor);
      FixedReal diff = v - FixedReal::exact(mpz_class(n), 0);
      if (diff.is_negative()) return true;
      if (diff.is_positive()) return false;
    }
    throw PrecisionCapExceeded("log_construction: range comparison");
  };
  // A coarse over-approximation of the bound: sqrt(n/(2 ln n)) < sqrt(n).
  uint64_t coarse = 2;
  while (coarse * coarse < n) ++coarse;
  std::vector<uint64_t> qualifying;
  for (uint64_t p : primes_upto(coarse).primes) {
    if (qualifies(p)) qualifying.push_back(p);
  }
  if (qualifying.empty()) throw RangeEmpty("log_construction: no primes in range");
  for (uint64_t p : qualifying) {
    // x_p = floor(2n * ln p / ln n)
    mpz_class x = certified_floor(
        [&](long bits) {
          FixedReal lp = log_of(p, false, bits);
          FixedReal ln_n = log_of(n, false, bits);
          return div(mul_int(lp, 2 * mpz_class(n)), ln_n, bits);
        },
        0, 64, precision_cap);
    out.elements.push_back(x);
    out.source_primes.push_back(p);
  }
  return out;
}

FiniteSet gauss_construction(uint64_t n, long precision_cap) {
  if (n < 400) throw RangeEmpty("gauss_construction: requires n >= 400");
  FiniteSet out;
  out.method = FiniteMethod::Gauss;
  out.n = n;
  // p <= sqrt(n)/4  <=>  16 p^2 <= n, an exact integer test.
  uint64_t coarse = 1;
  while (16 * (coarse + 1) * (coarse + 1) <= n) ++coarse;
  struct Item {
    uint64_t p;
    mpz_class c;
  };
  std::vector<Item> items;
  for (uint64_t p : primes_1mod4_upto(coarse).primes) {
    auto d = two_squares(p);
    mpz_class c = certified_floor(
        [&](long bits) { return mul_int(phi_enclosure(d.a, d.b, bits), mpz_class(n)); }, 0, 64,
        precision_cap);
    items.push_back({p, c});
  }
  if (items.empty()) throw RangeEmpty("gauss_construction: no primes in range");
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.c < b.c; });
  for (auto& it : items) {
    out.elements.push_back(it.c);
    out.source_primes.push_back(it.p);
  }
  return out;
}

}  // namespace sidon
