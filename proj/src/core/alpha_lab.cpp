#include "core/alpha_lab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "core/gaussian.hpp"

namespace sidon {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

// Certified a <= b on enclosures (true only when the intervals prove it).
bool certified_le(const FixedReal& a, const FixedReal& b) {
  long s = std::max(a.scale, b.scale);
  mpz_class ah = a.hi, bl = b.lo;
  mpz_mul_2exp(ah.get_mpz_t(), ah.get_mpz_t(), static_cast<mp_bitcnt_t>(s - a.scale));
  mpz_mul_2exp(bl.get_mpz_t(), bl.get_mpz_t(), static_cast<mp_bitcnt_t>(s - b.scale));
  return ah <= bl;
}

bool certified_gt(const FixedReal& a, const FixedReal& b) {
  long s = std::max(a.scale, b.scale);
  mpz_class al = a.lo, bh = b.hi;
  mpz_mul_2exp(al.get_mpz_t(), al.get_mpz_t(), static_cast<mp_bitcnt_t>(s - a.scale));
  mpz_mul_2exp(bh.get_mpz_t(), bh.get_mpz_t(), static_cast<mp_bitcnt_t>(s - b.scale));
  return al > bh;
}

u128 to_u128(const mpz_class& v) {
  mpz_class top = v >> 64;
  mpz_class low = v - (top << 64);
  return (u128(mpz_get_ui(top.get_mpz_t())) << 64) | u128(mpz_get_ui(low.get_mpz_t()));
}

}  // namespace

uint64_t AlphaGrid::point_count() const {
  if (resolution_log2 < 0 || resolution_log2 > 62)
    throw std::invalid_argument("AlphaGrid: resolution out of range");
  if (stride == 0) throw std::invalid_argument("AlphaGrid: stride must be positive");
  u64 span = u64(1) << resolution_log2;
  return (span + stride - 1) / stride;
}

std::vector<DyadicRational> AlphaGrid::points() const {
  u64 n = point_count();
  std::vector<DyadicRational> out;
  out.reserve(n);
  u64 base = u64(1) << resolution_log2;
  for (u64 a = base; a < 2 * base; a += stride) out.emplace_back(mpz_class(a), resolution_log2);
  return out;
}

std::vector<SweepRow> sweep(const ConstructionParams& params, const AlphaGrid& grid) {
  std::vector<SweepRow> rows;
  for (const DyadicRational& alpha : grid.points()) {
    ConstructionParams local = params;
    local.alpha = alpha;
    std::vector<ElementRecord> elements;
    std::vector<BadTuple> bad;
    try {
      elements = generate(local);
      bad = find_bad_tuples(elements, false, local.precision_cap);
    } catch (const PrecisionCapExceeded&) {
      SweepRow marked;
      marked.alpha = alpha;
      marked.precision_error = true;
      rows.push_back(marked);
      continue;
    }
    std::map<std::pair<int, int>, u64> a_counts;
    for (const auto& t : bad) ++a_counts[{t.K, t.L}];

    std::map<int, std::vector<const ElementRecord*>> classes;
    for (const auto& e : elements) classes[e.K].push_back(&e);

    for (int K = params.k_min; K <= params.k_max; ++K) {
      for (int L = params.k_min; L <= K; ++L) {
        SweepRow row;
        row.alpha = alpha;
        row.K = K;
        row.L = L;
        auto it_a = a_counts.find({K, L});
        if (it_a != a_counts.end()) row.A_KL = it_a->second;

        // T_KL: ordered (p,q,r,s) with equal pair sums, p != r, q != s.
        // Group ordered (p,q) pairs by sum; within a group of size c,
        // inclusion-exclusion over shared p or shared q gives
        // c^2 - sum cp^2 - sum cq^2 + c.
        auto ik = classes.find(K), il = classes.find(L);
        if (ik != classes.end() && il != classes.end()) {
          struct Entry {
            mpz_class sum;
            u64 p, q;
          };
          std::vector<Entry> entries;
          entries.reserve(ik->second.size() * il->second.size());
          for (auto* ep : ik->second) {
            for (auto* eq : il->second) entries.push_back({ep->a + eq->a, ep->p, eq->p});
          }
          std::sort(entries.begin(), entries.end(),
                    [](const Entry& a, const Entry& b) { return a.sum < b.sum; });
          for (size_t lo = 0; lo < entries.size();) {
            size_t hi = lo + 1;
            while (hi < entries.size() && entries[hi].sum == entries[lo].sum) ++hi;
            u64 c = hi - lo;
            if (c > 1) {
              std::map<u64, u64> cp, cq;
              for (size_t i = lo; i < hi; ++i) {
                ++cp[entries[i].p];
                ++cq[entries[i].q];
              }
              u64 t = c * c + c;
              for (auto& [_, v] : cp) t -= v * v;
              for (auto& [_, v] : cq) t -= v * v;
              row.T_KL += t;
            }
            lo = hi;
          }
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

double congruence_measure(uint64_t p, uint64_t r, int L, const AlphaGrid& grid,
                          const ConstructionParams& params) {
  int K = k_index(p, params);
  if (r != p && k_index(r, params) != K)
    throw std::invalid_argument("congruence_measure: p and r must share a class");
  if (L < 1 || L > K) throw std::invalid_argument("congruence_measure: requires 1 <= L <= K");
  long k2 = static_cast<long>(K) * K;
  if (grid.resolution_log2 < k2)
    throw ResolutionTooCoarse("congruence_measure: grid resolution below K^2");
  if (p == r || L == K) return 1.0;

  long b = grid.resolution_log2;
  long mod_bits = k2 - static_cast<long>(L) * L;
  auto dp = two_squares(p);
  auto dr = two_squares(r);

  // Fast path: 96-bit phi mantissas against a <= 63-bit grid index keep the
  // products inside unsigned 128-bit integers.
  bool fast = (b + 1 + 96 <= 126) && k2 <= 62 && mod_bits <= 62;
  FixedReal fp, fr;
  u128 plo = 0, phi = 0, rlo = 0, rhi = 0;
  if (fast) {
    fp = phi_enclosure(dp.a, dp.b, 100).rounded(96);
    fr = phi_enclosure(dr.a, dr.b, 100).rounded(96);
    plo = to_u128(fp.lo);
    phi = to_u128(fp.hi);
    rlo = to_u128(fr.lo);
    rhi = to_u128(fr.hi);
  }
  long sh = 96 + b - k2;
  u64 mask = (u64(1) << mod_bits) - 1;

  auto slow_m = [&](const GaussianPrimeDecomposition& d, u64 A) {
    return certified_floor(
        [&](long bits) { return mul_int(phi_enclosure(d.a, d.b, bits), mpz_class(A)); }, k2 - b,
        128, params.precision_cap);
  };

  u64 base = u64(1) << b;
  u64 points = 0, hits = 0;
  for (u64 A = base; A < 2 * base; A += grid.stride) {
    ++points;
    u64 mp_mod, mr_mod;
    if (fast) {
      u128 l1 = A * plo, h1 = A * phi;
      u128 l2 = A * rlo, h2 = A * rhi;
      if ((l1 >> sh) == (h1 >> sh) && (l2 >> sh) == (h2 >> sh)) {
        mp_mod = static_cast<u64>(l1 >> sh) & mask;
        mr_mod = static_cast<u64>(l2 >> sh) & mask;
        if (mp_mod == mr_mod) ++hits;
        continue;
      }
    }
    mpz_class mp = slow_m(dp, A), mr = slow_m(dr, A);
    mpz_class diff = mp - mr;
    mpz_fdiv_r_2exp(diff.get_mpz_t(), diff.get_mpz_t(), static_cast<mp_bitcnt_t>(mod_bits));
    if (diff == 0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(points);
}

SectorReport sector_bound_check(int K, int L, const ConstructionParams& params, bool zero_theta,
                                uint64_t max_pairs) {
  SectorReport rep;
  rep.K = K;
  rep.L = L;
  rep.zero_theta = zero_theta;

  auto pk = class_members(K, params).primes;
  auto pl = class_members(L, params).primes;

  long l2 = static_cast<long>(L) * L;
  if (zero_theta) {
    rep.bound = 1.0;
  } else {
    // theta*R^2 + 1 = 2^{2(K-1)^2/beta - L^2} + 1, lower endpoint.
    FixedReal e = div(FixedReal::exact(2 * mpz_class(K - 1) * (K - 1), 0), beta_const(64), 64);
    double exps = mpz_get_d(e.lo.get_mpz_t()) * std::ldexp(1.0, -static_cast<int>(e.scale));
    rep.bound = std::exp2(exps - 1e-9 - static_cast<double>(l2)) + 1.0;
  }

  if (pk.size() < 2 || pl.size() < 2) {
    rep.ok = true;
    return rep;
  }

  std::map<u64, GaussianPrimeDecomposition> dec;
  for (u64 p : pk) dec[p] = two_squares(p);
  for (u64 p : pl) dec[p] = two_squares(p);

  std::map<std::pair<u64, long>, FixedReal> phi_cache;
  std::map<long, FixedReal> pi_cache;
  auto phi_at = [&](u64 p, long bits) -> const FixedReal& {
    auto it = phi_cache.find({p, bits});
    if (it == phi_cache.end()) {
      const auto& d = dec[p];
      it = phi_cache.emplace(std::pair{p, bits}, phi_enclosure(d.a, d.b, bits)).first;
    }
    return it->second;
  };
  auto pi_at = [&](long bits) -> const FixedReal& {
    auto it = pi_cache.find(bits);
    if (it == pi_cache.end()) it = pi_cache.emplace(bits, pi_const(bits)).first;
    return it->second;
  };

  // In-sector test at given precision: |pi*((phi_p - phi_r) - (phi_s - phi_q))|
  // <= theta/2. Returns 1 in, 0 out, -1 undecided.
  auto decide = [&](u64 p, u64 r, u64 q, u64 s, long bits) -> int {
    FixedReal d = (phi_at(p, bits) - phi_at(r, bits)) - (phi_at(s, bits) - phi_at(q, bits));
    FixedReal lhs = abs(d) * pi_at(bits);
    FixedReal thr = mul_2exp(FixedReal::exact(1, 0), -(l2 + 1));
    if (certified_le(lhs, thr)) return 1;
    if (certified_gt(lhs, thr)) return 0;
    return -1;
  };

  auto collinear = [&](u64 p, u64 r, u64 q, u64 s) {
    // rho_p * conj(rho_r) parallel (same direction) to rho_s * conj(rho_q),
    // exact in the Gaussian integers.
    const auto &P = dec[p], &R = dec[r], &Q = dec[q], &S = dec[s];
    __int128 zx = __int128(P.a) * R.a + __int128(P.b) * R.b;
    __int128 zy = __int128(P.b) * R.a - __int128(P.a) * R.b;
    __int128 wx = __int128(S.a) * Q.a + __int128(S.b) * Q.b;
    __int128 wy = __int128(S.b) * Q.a - __int128(S.a) * Q.b;
    return zx * wy == zy * wx && zx * wx + zy * wy > 0;
  };

  for (u64 q : pl) {
    for (u64 s : pl) {
      if (q == s || rep.pairs_sampled >= max_pairs) continue;
      ++rep.pairs_sampled;
      u64 count = 0;
      for (u64 p : pk) {
        for (u64 r : pk) {
          if (p == r) continue;
          bool in;
          if (zero_theta) {
            in = collinear(p, r, q, s);
          } else {
            int v = -1;
            for (long bits = l2 + 32; v < 0 && bits <= params.precision_cap; bits *= 2)
              v = decide(p, r, q, s, bits);
            in = (v != 0);  // undecided counts in, keeping the check honest
          }
          if (in) ++count;
        }
      }
      rep.max_count = std::max(rep.max_count, count);
    }
  }
  rep.ok = static_cast<double>(rep.max_count) <= rep.bound;
  return rep;
}

double lemma_bound(int K, int L) {
  double beta = 1.0 + std::sqrt(2.0);
  double e = (2.0 / beta) * (double(K - 1) * (K - 1) + double(L - 1) * (L - 1)) - double(K) * K;
  return std::exp2(e);
}

double trend_statistic(int K, int L, uint64_t a_kl) {
  double beta = 1.0 + std::sqrt(2.0);
  double e =
      double(L) * L - (2.0 / beta) * (double(K - 1) * (K - 1) + double(L - 1) * (L - 1));
  return static_cast<double>(a_kl) * std::exp2(e);
}

}  // namespace sidon
