#include "core/verifier.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace sidon {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

u64 hash_u128(u128 v) {
  return splitmix64(static_cast<u64>(v)) ^ splitmix64(static_cast<u64>(v >> 64) + 0x51ull);
}

u64 hash_mpz(const mpz_class& v) {
  const mpz_srcptr z = v.get_mpz_t();
  u64 h = splitmix64(static_cast<u64>(mpz_sgn(z)) + 0x2545f4914f6cdd1dull);
  size_t limbs = mpz_size(z);
  for (size_t i = 0; i < limbs; ++i) h = splitmix64(h ^ static_cast<u64>(mpz_getlimbn(z, i)));
  return h;
}

struct Slot {
  u64 hash = 0;
  uint32_t i = std::numeric_limits<uint32_t>::max();
  uint32_t j = 0;
  bool empty() const { return i == std::numeric_limits<uint32_t>::max(); }
};

struct WitnessPair {
  mpz_class a, b;  // a <= b
  bool operator<(const WitnessPair& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

WitnessPair make_pair_sorted(const mpz_class& x, const mpz_class& y) {
  return x <= y ? WitnessPair{x, y} : WitnessPair{y, x};
}

// Shared pair-sum scan: Value is u128 (fast path) or mpz_class.
template <typename Value, typename Sum, typename Hash>
SidonReport scan_pairs(const std::vector<mpz_class>& xs, const std::vector<Value>& vals,
                       Sum sum_of, Hash hash_of) {
  const size_t n = vals.size();
  SidonReport rep;
  rep.pairs_checked = n * (n + 1) / 2;

  size_t cap = 16;
  while (cap < rep.pairs_checked * 2) cap <<= 1;
  std::vector<Slot> table(cap);
  const u64 mask = cap - 1;

  bool have_best = false;
  std::array<mpz_class, 4> best;

  auto consider = [&](uint32_t i1, uint32_t j1, uint32_t i2, uint32_t j2) {
    WitnessPair p = make_pair_sorted(xs[i1], xs[j1]);
    WitnessPair q = make_pair_sorted(xs[i2], xs[j2]);
    if (q < p) std::swap(p, q);
    std::array<mpz_class, 4> cand{p.a, p.b, q.a, q.b};
    if (!have_best || cand < best) {
      best = cand;
      have_best = true;
    }
  };

  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i; j < n; ++j) {
      Value s = sum_of(vals[i], vals[j]);
      u64 h = hash_of(s);
      size_t pos = h & mask;
      for (;;) {
        Slot& slot = table[pos];
        if (slot.empty()) {
          slot = Slot{h, i, j};
          break;
        }
        if (slot.hash == h && sum_of(vals[slot.i], vals[slot.j]) == s) {
          // Same exact sum from a different unordered pair: violation.
          consider(slot.i, slot.j, i, j);
          // Keep the lexicographically smaller pair as the bucket owner so the
          // final witness is the global minimum regardless of scan order.
          WitnessPair cur = make_pair_sorted(xs[slot.i], xs[slot.j]);
          WitnessPair nw = make_pair_sorted(xs[i], xs[j]);
          if (nw < cur) {
            slot.i = i;
            slot.j = j;
          }
          break;
        }
        pos = (pos + 1) & mask;
      }
    }
  }

  if (have_best) {
    rep.ok = false;
    rep.has_witness = true;
    rep.x1 = best[0];
    rep.x2 = best[1];
    rep.y1 = best[2];
    rep.y2 = best[3];
  }
  return rep;
}

}  // namespace

SidonReport check_sidon(const std::vector<mpz_class>& xs) {
  if (xs.size() > std::numeric_limits<uint32_t>::max() - 1)
    throw std::invalid_argument("check_sidon: set too large");
  bool fits_u64 = true;
  for (const auto& x : xs) {
    if (x < 0 || !x.fits_ulong_p()) {
      fits_u64 = false;
      break;
    }
  }
  if (fits_u64) {
    std::vector<u128> vals;
    vals.reserve(xs.size());
    for (const auto& x : xs) vals.push_back(u128(mpz_get_ui(x.get_mpz_t())));
    return scan_pairs(
        xs, vals, [](u128 a, u128 b) { return a + b; }, [](u128 s) { return hash_u128(s); });
  }
  return scan_pairs(
      xs, xs, [](const mpz_class& a, const mpz_class& b) { return mpz_class(a + b); },
      [](const mpz_class& s) { return hash_mpz(s); });
}

bool classify_tuple(const ElementRecord& ep, const ElementRecord& eq,
                    const ElementRecord& er, const ElementRecord& es) {
  if (ep.t + eq.t != er.t + es.t) return false;
  auto block = [](const ElementRecord& e, size_t i) -> u64 {
    return i < e.blocks.size() ? e.blocks[i] : 0;
  };
  size_t kmax = std::max({ep.blocks.size(), eq.blocks.size(), er.blocks.size(), es.blocks.size()});
  for (size_t i = 0; i < kmax; ++i) {
    if (block(ep, i) + block(eq, i) != block(er, i) + block(es, i)) return false;
  }
  return true;
}

}  // namespace sidon
