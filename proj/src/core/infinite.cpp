#include "core/infinite.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "core/gaussian.hpp"

namespace sidon {

namespace {

void check_params(const ConstructionParams& params) {
  if (!params.alpha.in_alpha_range())
    throw std::invalid_argument("alpha must be an exact dyadic in [1,2)");
  if (params.k_max < 3) throw std::invalid_argument("k_max must be >= 3 (classes need K > 2)");
}

// Is beta*log2(p) certifiably below / above the integer c? Returns +1 / -1 / 0.
int side_of(const FixedReal& v, long c) {
  mpz_class bound = mpz_class(c);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(v.scale));
  if (v.hi < bound) return -1;
  if (v.lo > bound) return +1;
  return 0;
}

}  // namespace

int k_index(uint64_t p, const ConstructionParams& params) {
  if (p < 5) throw std::invalid_argument("k_index: requires p >= 5");
  for (long bits = 32; bits <= params.precision_cap; bits *= 2) {
    FixedReal v = beta_const(bits) * log_of(p, true, bits);
    // Locate K with (K-2)^2 < v < (K-1)^2.
    for (int K = 3;; ++K) {
      long lo_sq = static_cast<long>(K - 2) * (K - 2);
      long hi_sq = static_cast<long>(K - 1) * (K - 1);
      int lo_side = side_of(v, lo_sq);
      int hi_side = side_of(v, hi_sq);
      if (lo_side > 0 && hi_side < 0) return K;
      if (hi_side == 0 || lo_side == 0) break;  // straddles a boundary: escalate
      if (hi_side > 0) continue;                // v above this class: try next K
      break;
    }
  }
  throw PrecisionCapExceeded("k_index: class boundary not resolved");
}

uint64_t class_prime_bound(int k_max, long precision_cap) {
  // Largest p with beta*log2(p) < (k_max-1)^2, by certified binary search.
  long target = static_cast<long>(k_max - 1) * (k_max - 1);
  auto below = [&](uint64_t p) {
    for (long bits = 32; bits <= precision_cap; bits *= 2) {
      FixedReal v = beta_const(bits) * log_of(p, true, bits);
      int s = side_of(v, target);
      if (s != 0) return s < 0;
    }
    throw PrecisionCapExceeded("class_prime_bound");
  };
  uint64_t lo = 2, hi = 4;
  while (below(hi)) hi *= 2;
  while (hi - lo > 1) {
    uint64_t mid = lo + (hi - lo) / 2;
    (below(mid) ? lo : hi) = mid;
  }
  return lo;
}

PrimeTable class_members(int K, const ConstructionParams& params) {
  if (K < 3) throw std::invalid_argument("class_members: K must be >= 3");
  PrimeTable t;
  t.class_1mod4 = true;
  t.bound = class_prime_bound(K, params.precision_cap);
  for (uint64_t p : primes_1mod4_upto(t.bound).primes) {
    if (p >= 5 && k_index(p, params) == K) t.primes.push_back(p);
  }
  return t;
}

mpz_class m_value(uint64_t p, const ConstructionParams& params) {
  check_params(params);
  int K = k_index(p, params);
  auto d = two_squares(p);
  long shift = static_cast<long>(K) * K - params.alpha.log2_den;
  return certified_floor(
      [&](long bits) { return mul_int(phi_enclosure(d.a, d.b, bits), params.alpha.num); }, shift,
      64, params.precision_cap);
}

std::vector<uint64_t> blocks_of(const mpz_class& m, int K) {
  if (K < 1) throw std::invalid_argument("blocks_of: K must be >= 1");
  mpz_class limit = 1;
  mpz_mul_2exp(limit.get_mpz_t(), limit.get_mpz_t(), static_cast<mp_bitcnt_t>(K) * K);
  if (m < 0 || m >= limit) throw std::invalid_argument("blocks_of: requires 0 <= m < 2^(K^2)");
  std::vector<uint64_t> blocks(K);
  for (int i = 1; i <= K; ++i) {
    // Block i holds digits (i-1)^2+1 .. i^2 of the big-endian K^2-digit
    // expansion, i.e. bits K^2-i^2 .. K^2-(i-1)^2-1, width 2i-1.
    long low_bit = static_cast<long>(K) * K - static_cast<long>(i) * i;
    mpz_class chunk;
    mpz_fdiv_q_2exp(chunk.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(low_bit));
    mpz_class mask = (mpz_class(1) << (2 * i - 1)) - 1;
    chunk &= mask;
    blocks[i - 1] = mpz_get_ui(chunk.get_mpz_t());
  }
  return blocks;
}

Assembled assemble(const std::vector<uint64_t>& blocks, int K) {
  if (static_cast<int>(blocks.size()) != K)
    throw std::invalid_argument("assemble: need exactly K blocks");
  mpz_class a = 0;
  for (int i = 1; i <= K; ++i) {
    uint64_t bl = blocks[i - 1];
    if (bl >> (2 * i - 1)) throw std::invalid_argument("assemble: oversized block");
    mpz_class term = bl;
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(),
                 static_cast<mp_bitcnt_t>((i - 1) * (i - 1) + 3 * i));
    a += term;
  }
  mpz_class t = 1;
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(K) * K + 3 * K + 2);
  a += t;
  return {a, t};
}

ElementRecord element(uint64_t p, const ConstructionParams& params) {
  ElementRecord rec;
  rec.p = p;
  rec.K = k_index(p, params);
  rec.m = m_value(p, params);
  rec.blocks = blocks_of(rec.m, rec.K);
  auto asm_ = assemble(rec.blocks, rec.K);
  rec.a = asm_.a;
  rec.t = asm_.t;
  return rec;
}

std::vector<ElementRecord> generate(const ConstructionParams& params) {
  check_params(params);
  uint64_t bound = class_prime_bound(params.k_max, params.precision_cap);
  std::vector<ElementRecord> out;
  for (uint64_t p : primes_1mod4_upto(bound).primes) {
    if (p < 5) continue;
    int K = k_index(p, params);
    if (K < params.k_min || K > params.k_max) continue;
    out.push_back(element(p, params));
  }
  return out;
}

namespace {

// Indices of elements surviving a-value dedup (first record per a wins).
std::vector<size_t> dedup_indices(const std::vector<ElementRecord>& elements) {
  std::vector<size_t> idx(elements.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
    return elements[x].a != elements[y].a ? elements[x].a < elements[y].a
                                          : elements[x].p < elements[y].p;
  });
  std::vector<size_t> keep;
  for (size_t k = 0; k < idx.size(); ++k) {
    if (k == 0 || elements[idx[k]].a != elements[idx[k - 1]].a) keep.push_back(idx[k]);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

BadTuple tuple_from_pairs(const std::vector<ElementRecord>& el, size_t i, size_t j, size_t k,
                          size_t l) {
  // One pair holds the global maximum; that pair is (p,q), the other (r,s).
  auto amax = [&](size_t x, size_t y) { return el[x].a >= el[y].a ? x : y; };
  size_t m1 = amax(i, j), m2 = amax(k, l);
  size_t p, q, r, s;
  if (el[m1].a > el[m2].a) {
    p = m1;
    q = (m1 == i) ? j : i;
    r = m2;
    s = (m2 == k) ? l : k;
  } else {
    p = m2;
    q = (m2 == k) ? l : k;
    r = m1;
    s = (m1 == i) ? j : i;
  }
  if (!(el[p].a > el[r].a && el[r].a >= el[s].a && el[s].a > el[q].a))
    return BadTuple{};  // ordering (5) unsatisfiable (duplicate maxima); caller skips
  BadTuple t;
  t.p = el[p].p;
  t.q = el[q].p;
  t.r = el[r].p;
  t.s = el[s].p;
  t.K = el[p].K;
  t.L = el[q].K;
  if (el[r].K != t.K || el[s].K != t.L || t.K < t.L)
    throw std::logic_error("bad tuple violates class alignment");
  return t;
}

std::vector<BadTuple> find_bad_tuples_hashed(const std::vector<ElementRecord>& el) {
  std::vector<size_t> keep = dedup_indices(el);
  struct Entry {
    mpz_class sum;
    size_t i, j;
  };
  std::vector<Entry> entries;
  entries.reserve(keep.size() * (keep.size() + 1) / 2);
  for (size_t x = 0; x < keep.size(); ++x) {
    for (size_t y = x; y < keep.size(); ++y) {
      entries.push_back({el[keep[x]].a + el[keep[y]].a, keep[x], keep[y]});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.sum < b.sum; });
  std::vector<BadTuple> out;
  for (size_t lo = 0; lo < entries.size();) {
    size_t hi = lo + 1;
    while (hi < entries.size() && entries[hi].sum == entries[lo].sum) ++hi;
    for (size_t x = lo; x < hi; ++x) {
      for (size_t y = x + 1; y < hi; ++y) {
        BadTuple t =
            tuple_from_pairs(el, entries[x].i, entries[x].j, entries[y].i, entries[y].j);
        if (t.p != 0) out.push_back(t);
      }
    }
    lo = hi;
  }
  std::sort(out.begin(), out.end(), [](const BadTuple& a, const BadTuple& b) {
    return std::tie(a.p, a.q, a.r, a.s) < std::tie(b.p, b.q, b.r, b.s);
  });
  return out;
}

std::vector<BadTuple> find_bad_tuples_filtered(const std::vector<ElementRecord>& el,
                                               long precision_cap) {
  std::vector<size_t> keep = dedup_indices(el);
  // Group surviving records by class.
  std::map<int, std::vector<size_t>> classes;
  for (size_t i : keep) classes[el[i].K].push_back(i);

  // Cached phi enclosures; the filter needs ~L^2 bits, never escalates.
  std::map<uint64_t, FixedReal> phis;
  long max_l2 = 0;
  for (auto& [K, v] : classes) max_l2 = std::max(max_l2, static_cast<long>(K) * K);
  for (size_t i : keep) {
    if (!phis.count(el[i].p)) phis.emplace(el[i].p, phi_of(el[i].p, max_l2 + 16).enclosure);
  }
  (void)precision_cap;

  std::vector<BadTuple> out;
  for (auto& [K, pk] : classes) {
    for (auto& [L, pl] : classes) {
      if (L > K) continue;
      long l2 = static_cast<long>(L) * L;
      for (size_t p : pk) {
        for (size_t r : pk) {
          if (el[p].a <= el[r].a) continue;  // need a_p > a_r
          FixedReal dpr = phis.at(el[p].p) - phis.at(el[r].p);
          for (size_t q : pl) {
            if (el[q].a >= el[r].a) continue;  // need a_q < a_s <= a_r
            for (size_t s : pl) {
              if (el[r].a < el[s].a || el[s].a <= el[q].a) continue;  // ordering (5)
              // Necessary condition (Lemma on angle sums): discard only when
              // |phi_p+phi_q-phi_r-phi_s| >= 4*2^{-L^2} certifiably.
              FixedReal d = dpr + (phis.at(el[q].p) - phis.at(el[s].p));
              FixedReal ad = abs(d);
              mpz_class thr = 1;
              long e = ad.scale - l2 + 2;  // 4*2^{-L^2} at the enclosure's scale
              if (e >= 0) {
                mpz_mul_2exp(thr.get_mpz_t(), thr.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
                if (ad.lo >= thr) continue;  // certified violation
              }
              if (el[p].a + el[q].a != el[r].a + el[s].a) continue;
              BadTuple t;
              t.p = el[p].p;
              t.q = el[q].p;
              t.r = el[r].p;
              t.s = el[s].p;
              t.K = K;
              t.L = L;
              out.push_back(t);
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const BadTuple& a, const BadTuple& b) {
    return std::tie(a.p, a.q, a.r, a.s) < std::tie(b.p, b.q, b.r, b.s);
  });
  return out;
}

}  // namespace

std::vector<BadTuple> find_bad_tuples(const std::vector<ElementRecord>& elements,
                                      bool use_angle_filter, long precision_cap) {
  if (elements.size() < 3) return {};
  if (use_angle_filter) return find_bad_tuples_filtered(elements, precision_cap);
  return find_bad_tuples_hashed(elements);
}

SidonSet prune(const std::vector<ElementRecord>& elements, const std::vector<BadTuple>& bad) {
  SidonSet out;
  // Duplicated a-values: keep the record with the smallest prime.
  std::vector<size_t> keep = dedup_indices(elements);
  std::vector<bool> kept(elements.size(), false);
  for (size_t i : keep) kept[i] = true;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (!kept[i]) out.removed.push_back(elements[i].a);
  }
  // Remove the maximal member a_p of every bad tuple.
  std::vector<mpz_class> doomed;
  for (const auto& t : bad) {
    for (size_t i : keep) {
      if (elements[i].p == t.p && elements[i].K == t.K) doomed.push_back(elements[i].a);
    }
  }
  std::sort(doomed.begin(), doomed.end());
  doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
  for (size_t i : keep) {
    const mpz_class& a = elements[i].a;
    if (std::binary_search(doomed.begin(), doomed.end(), a)) {
      out.removed.push_back(a);
    } else {
      out.elements.push_back(a);
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

uint64_t counting(const SidonSet& set, const mpz_class& x) {
  return static_cast<uint64_t>(
      std::upper_bound(set.elements.begin(), set.elements.end(), x) - set.elements.begin());
}

}  // namespace sidon
