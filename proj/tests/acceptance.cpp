// Acceptance suite: twelve criteria, one PASS/FAIL line each.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "core/alpha_lab.hpp"
#include "core/finite.hpp"
#include "core/gaussian.hpp"
#include "core/infinite.hpp"
#include "core/primes.hpp"
#include "core/verifier.hpp"

using namespace sidon;

namespace {

int g_failures = 0;
bool g_cap_hit = false;  // any precision-cap overrun observed in criteria 1-9

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int num, bool pass, const std::string& detail, double secs) {
  std::printf("criterion %2d: %s - %s [%.1fs]\n", num, pass ? "PASS" : "FAIL", detail.c_str(),
              secs);
  if (!pass) ++g_failures;
}

template <typename Fn>
void run(int num, Fn&& fn) {
  Timer t;
  bool pass = false;
  std::string detail;
  try {
    pass = fn(detail);
  } catch (const PrecisionCapExceeded& e) {
    if (num <= 9) g_cap_hit = true;
    detail = std::string("precision cap exceeded: ") + e.what();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(num, pass, detail, t.s());
}

std::vector<long> greedy_oracle(size_t count) {
  std::vector<long> a;
  std::set<long> sums;
  long c = 1;
  while (a.size() < count) {
    bool ok = true;
    std::vector<long> added;
    for (long x : a) {
      if (!sums.insert(x + c).second) {
        ok = false;
        break;
      }
      added.push_back(x + c);
    }
    if (ok && !sums.insert(2 * c).second) ok = false;
    if (ok)
      a.push_back(c);
    else
      for (long s : added) sums.erase(sums.find(s));
    ++c;
  }
  return a;
}

std::vector<BadTuple> brute_tuples(const std::vector<ElementRecord>& el) {
  std::vector<BadTuple> out;
  size_t n = el.size();
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      for (size_t r = 0; r < n; ++r)
        for (size_t s = 0; s < n; ++s) {
          if (el[p].a + el[q].a != el[r].a + el[s].a) continue;
          if (!(el[p].a > el[r].a && el[r].a >= el[s].a && el[s].a > el[q].a)) continue;
          out.push_back({el[p].p, el[q].p, el[r].p, el[s].p, el[p].K, el[q].K});
        }
  std::sort(out.begin(), out.end(), [](const BadTuple& a, const BadTuple& b) {
    return std::tie(a.p, a.q, a.r, a.s) < std::tie(b.p, b.q, b.r, b.s);
  });
  return out;
}

bool naive_is_sidon_u64(const std::vector<uint64_t>& xs) {
  std::vector<unsigned __int128> sums;
  sums.reserve(xs.size() * (xs.size() + 1) / 2);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i; j < xs.size(); ++j)
      sums.push_back((unsigned __int128)xs[i] + xs[j]);
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

ElementRecord synthetic(uint64_t p, int K, const std::vector<uint64_t>& blocks) {
  ElementRecord e;
  e.p = p;
  e.K = K;
  e.blocks = blocks;
  auto asm_ = assemble(blocks, K);
  e.a = asm_.a;
  e.t = asm_.t;
  return e;
}

}  // namespace

int main() {
  const ConstructionParams defaults;

  // 1. Gauss construction: Sidon, cardinality matches the prime count.
  run(1, [](std::string& d) {
    struct Case {
      uint64_t n;
      size_t primes;
    };
    for (Case c : {Case{10000, 3}, Case{100000, 9}, Case{1000000, 24}}) {
      FiniteSet s = gauss_construction(c.n);
      if (s.elements.size() != c.primes) {
        d = "cardinality mismatch at n=" + std::to_string(c.n);
        return false;
      }
      if (!check_sidon(s.elements).ok) {
        d = "violation at n=" + std::to_string(c.n);
        return false;
      }
    }
    d = "gauss sets Sidon with cardinalities 3/9/24 for n=1e4/1e5/1e6";
    return true;
  });

  // 2. Log construction: Sidon at four scales.
  run(2, [](std::string& d) {
    std::string sizes;
    for (uint64_t n : {1000ull, 10000ull, 100000ull, 1000000ull}) {
      FiniteSet s = log_construction(n);
      if (!check_sidon(s.elements).ok) {
        d = "violation at n=" + std::to_string(n);
        return false;
      }
      sizes += (sizes.empty() ? "" : "/") + std::to_string(s.elements.size());
    }
    d = "log sets Sidon for n=1e3..1e6, sizes " + sizes;
    return true;
  });

  // 3. Greedy vs independent oracle, cube bound.
  run(3, [](std::string& d) {
    FiniteSet g = greedy_sidon(50);
    auto oracle = greedy_oracle(50);
    for (size_t k = 0; k < 50; ++k) {
      if (g.elements[k] != oracle[k]) {
        d = "mismatch at term " + std::to_string(k + 1);
        return false;
      }
      if (g.elements[k] > mpz_class(k) * k * k + 1) {
        d = "cube bound violated at term " + std::to_string(k + 1);
        return false;
      }
    }
    d = "greedy matches brute-force oracle for 50 terms, a_k <= (k-1)^3+1";
    return true;
  });

  // 4. Full pipeline over the 32-point alpha grid at k_max=6.
  run(4, [&](std::string& d) {
    for (const auto& a : AlphaGrid{5, 1}.points()) {
      ConstructionParams p = defaults;
      p.alpha = a;
      auto el = generate(p);
      SidonSet s = prune(el, find_bad_tuples(el));
      if (!check_sidon(s.elements).ok) {
        d = "pruned set fails at alpha=" + a.num.get_str() + "/32";
        return false;
      }
    }
    d = "pruned sets Sidon for all 32 grid alphas at k_max=6";
    return true;
  });

  // 5. Block-sum equivalence on random synthetic quadruples.
  run(5, [](std::string& d) {
    std::mt19937_64 rng(20240817);
    auto rand_blocks = [&](int K, int shrink) {
      std::vector<uint64_t> b(K);
      for (int i = 1; i <= K; ++i) b[i - 1] = rng() % (uint64_t(1) << (2 * i - 1 - shrink));
      return b;
    };
    long checked = 0;
    for (long t = 0; t < 100000; ++t) {
      int K = 3 + int(rng() % 4);
      int L = 3 + int(rng() % (K - 2));
      std::vector<uint64_t> bq = rand_blocks(L, 1), bs = rand_blocks(L, 1);
      std::vector<uint64_t> br = rand_blocks(K, 1), bp;
      int mode = int(t % 3);
      if (mode == 0) {
        // Engineered blockwise equality: p's blocks complete the sums.
        bp = br;
        for (int i = 0; i < L; ++i) bp[i] = br[i] + bs[i] - std::min(bq[i], bs[i]);
        for (int i = 0; i < L; ++i) bq[i] = std::min(bq[i], bs[i]);
      } else {
        bp = rand_blocks(K, 1);
        if (mode == 2) {
          // Start equal, then disturb one block of p.
          bp = br;
          for (int i = 0; i < L; ++i) {
            bp[i] = br[i] + bs[i] - std::min(bq[i], bs[i]);
            bq[i] = std::min(bq[i], bs[i]);
          }
          bp[rng() % K] ^= 1;
        }
      }
      ElementRecord ep = synthetic(2, K, bp), er = synthetic(3, K, br);
      ElementRecord eq = synthetic(5, L, bq), es = synthetic(7, L, bs);
      bool sums_equal = (ep.a + eq.a == er.a + es.a);
      bool blocks_equal = classify_tuple(ep, eq, er, es);
      if (sums_equal != blocks_equal) {
        d = "equivalence mismatch at trial " + std::to_string(t);
        return false;
      }
      ++checked;
    }
    d = std::to_string(checked) + " synthetic quadruples, sum equality <=> block equality";
    return true;
  });

  // 6. Angle prefilter equals brute force at k_max=5.
  run(6, [&](std::string& d) {
    int alphas = 0;
    for (const auto& a : AlphaGrid{3, 1}.points()) {
      ConstructionParams p = defaults;
      p.alpha = a;
      p.k_max = 5;
      auto el = generate(p);
      auto filtered = find_bad_tuples(el, true);
      auto plain = find_bad_tuples(el, false);
      auto oracle = brute_tuples(el);
      auto eq = [](const std::vector<BadTuple>& x, const std::vector<BadTuple>& y) {
        if (x.size() != y.size()) return false;
        for (size_t i = 0; i < x.size(); ++i)
          if (std::tie(x[i].p, x[i].q, x[i].r, x[i].s) !=
              std::tie(y[i].p, y[i].q, y[i].r, y[i].s))
            return false;
        return true;
      };
      if (!eq(filtered, oracle) || !eq(plain, oracle)) {
        d = "discrepancy at alpha=" + a.num.get_str() + "/8";
        return false;
      }
      ++alphas;
    }
    d = "filtered, hashed, and brute-force tuple searches agree on " + std::to_string(alphas) +
        " alphas";
    return true;
  });

  // 7. Congruence-measure experiment under the test ceiling (ceiling constant
  // 16 is this artifact's choice). P_4 has two members, so (4,3) offers a
  // single distinct pair; the K=5 rows use six pairs each.
  run(7, [&](std::string& d) {
    struct Probe {
      int K, L;
      std::vector<std::pair<uint64_t, uint64_t>> pairs;
    };
    std::vector<Probe> probes = {
        {4, 3, {{5, 13}}},
        {5, 3, {{17, 29}, {17, 37}, {29, 41}, {37, 53}, {61, 97}, {73, 89}}},
        {5, 4, {{17, 41}, {29, 37}, {29, 97}, {41, 61}, {53, 73}, {89, 97}}},
    };
    for (const auto& pr : probes) {
      AlphaGrid g{long(pr.K) * pr.K, 1};
      double ceiling = 16.0 * std::exp2(double(pr.L * pr.L - pr.K * pr.K));
      for (auto [p, r] : pr.pairs) {
        double f = congruence_measure(p, r, pr.L, g, defaults);
        if (f > ceiling) {
          d = "fraction " + std::to_string(f) + " above ceiling for (p,r)=(" +
              std::to_string(p) + "," + std::to_string(r) + ")";
          return false;
        }
      }
    }
    d = "all congruence fractions within 16*2^{L^2-K^2} at b=K^2 (13 pairs over 3 class pairs)";
    return true;
  });

  // 8. A_KL trend statistic stays under the monitoring ceiling (64, this
  // artifact's choice).
  run(8, [&](std::string& d) {
    double worst = 0;
    for (const auto& row : sweep(defaults, AlphaGrid{5, 1})) {
      if (row.precision_error) {
        d = "precision failure inside sweep";
        return false;
      }
      worst = std::max(worst, trend_statistic(row.K, row.L, row.A_KL));
    }
    if (worst > 64.0) {
      d = "trend statistic " + std::to_string(worst) + " above 64";
      return false;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "max A_KL*2^{L^2-(2/beta)((K-1)^2+(L-1)^2)} = %.3g <= 64 at k_max=6", worst);
    d = buf;
    return true;
  });

  // 9. Counting-function slope. Desk scale cannot reach the asymptotic
  // regime; measured and reported honestly against the pinned window.
  run(9, [&](std::string& d) {
    auto el = generate(defaults);
    SidonSet s = prune(el, find_bad_tuples(el));
    std::printf("              asymptotic slope target: sqrt(2)-1 = 0.4142\n");
    char buf[160];
    std::string slopes;
    bool ok = true;
    for (int K = 4; K <= 6; ++K) {
      long e = long(K + 2) * (K + 2);
      uint64_t cnt = counting(s, mpz_class(1) << e);
      double slope = cnt == 0 ? 0.0 : std::log2(double(cnt)) / double(e);
      std::snprintf(buf, sizeof buf, "%.3f", slope);
      slopes += (slopes.empty() ? "" : "/") + std::string(buf);
      if (slope < 0.30 || slope > 0.55) ok = false;
    }
    d = "slopes log2 S(x)/log2 x = " + slopes + " at x=2^36/2^49/2^64, window [0.30,0.55]";
    return ok;
  });

  // 10. Two-squares decomposition, exhaustive to 10^6.
  run(10, [](std::string& d) {
    uint64_t checked = 0;
    for (uint64_t p : primes_1mod4_upto(1000000).primes) {
      auto dc = two_squares(p);
      if (dc.a * dc.a + dc.b * dc.b != p || dc.a <= dc.b || dc.b == 0) {
        d = "bad decomposition for p=" + std::to_string(p);
        return false;
      }
      ++checked;
    }
    d = std::to_string(checked) + " primes decomposed, all a^2+b^2=p with a>b>0";
    return true;
  });

  // 11. Enclosure widths, containment of the floating estimate, and no
  // precision-cap overruns anywhere in criteria 1-9.
  run(11, [](std::string& d) {
    for (uint64_t p : primes_1mod4_upto(10000).primes) {
      Angle a = phi_of(p, 128);
      if (!a.enclosure.width_at_most(120)) {
        d = "enclosure too wide for p=" + std::to_string(p);
        return false;
      }
      auto dc = two_squares(p);
      double est = std::atan2(double(dc.b), double(dc.a)) / M_PI;
      double lo =
          mpz_get_d(a.enclosure.lo.get_mpz_t()) * std::ldexp(1.0, -int(a.enclosure.scale));
      double hi =
          mpz_get_d(a.enclosure.hi.get_mpz_t()) * std::ldexp(1.0, -int(a.enclosure.scale));
      if (est < lo - std::ldexp(1.0, -45) || est > hi + std::ldexp(1.0, -45)) {
        d = "floating estimate outside enclosure for p=" + std::to_string(p);
        return false;
      }
    }
    if (g_cap_hit) {
      d = "a precision cap overrun occurred in criteria 1-9";
      return false;
    }
    d = "all 128-bit phi enclosures narrower than 2^-120 and consistent; no cap overruns";
    return true;
  });

  // 12. Hashed verifier vs naive all-pairs comparison.
  run(12, [](std::string& d) {
    std::mt19937_64 rng(991);
    int disagreements = 0;
    for (int t = 0; t < 500; ++t) {
      size_t n = rng() % 1999 + 2;
      // Mix densities: sparse sets are usually Sidon, dense ones usually not.
      uint64_t range = (t % 3 == 0) ? uint64_t(n) * n * n : uint64_t(n) * n;
      std::set<uint64_t> vals;
      while (vals.size() < n) vals.insert(rng() % range);
      std::vector<uint64_t> raw(vals.begin(), vals.end());
      std::vector<mpz_class> xs;
      xs.reserve(n);
      for (uint64_t v : raw) xs.emplace_back((unsigned long)v);
      SidonReport r = check_sidon(xs);
      if (r.ok != naive_is_sidon_u64(raw)) ++disagreements;
      if (!r.ok && (!r.has_witness || r.x1 + r.x2 != r.y1 + r.y2)) ++disagreements;
    }
    if (disagreements) {
      d = std::to_string(disagreements) + " disagreements";
      return false;
    }
    d = "hashed and naive verifiers agree on 500 random sets (size <= 2000)";
    return true;
  });

  std::printf("%d of 12 criteria passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
