#include "sidon.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "core/alpha_lab.hpp"
#include "core/finite.hpp"
#include "core/gaussian.hpp"
#include "core/infinite.hpp"
#include "core/primes.hpp"
#include "core/set_io.hpp"
#include "core/verifier.hpp"

struct sidon_set {
  std::vector<mpz_class> elements;  // ascending
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
sidon_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const sidon::PrecisionCapExceeded& e) {
    g_last_error = e.what();
    return SIDON_ERR_PRECISION;
  } catch (const sidon::NeedsMorePrecision& e) {
    g_last_error = e.what();
    return SIDON_ERR_PRECISION;
  } catch (const sidon::RangeEmpty& e) {
    g_last_error = e.what();
    return SIDON_ERR_RANGE;
  } catch (const sidon::ResolutionTooCoarse& e) {
    g_last_error = e.what();
    return SIDON_ERR_RESOLUTION;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SIDON_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SIDON_ERR_INTERNAL;
  }
}

long cap_of(long precision_cap) {
  return precision_cap > 0 ? precision_cap : sidon::kDefaultPrecisionCap;
}

sidon::ConstructionParams to_params(const sidon_params* p) {
  if (!p) throw std::invalid_argument("params must not be null");
  sidon::ConstructionParams out;
  out.alpha = sidon::DyadicRational(mpz_class(static_cast<unsigned long>(p->alpha_num)),
                                    p->alpha_bits);
  out.k_max = p->k_max;
  out.precision_cap = cap_of(p->precision_cap);
  return out;
}

// Fixed-point decimal "0.ddd..." for an enclosure endpoint in [0,1).
std::string decimal_endpoint(const mpz_class& mant, long scale, long digits, bool round_up) {
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = mant * pow10;
  mpz_class q;
  if (round_up) {
    mpz_cdiv_q_2exp(q.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(scale));
  } else {
    mpz_fdiv_q_2exp(q.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(scale));
  }
  std::string frac = q.get_str();
  if (static_cast<long>(frac.size()) < digits)
    frac.insert(frac.begin(), digits - frac.size(), '0');
  return "0." + frac;
}

}  // namespace

extern "C" {

const char* sidon_last_error(void) { return g_last_error.c_str(); }

void sidon_string_free(char* s) { std::free(s); }

void sidon_set_free(sidon_set* s) { delete s; }

size_t sidon_set_size(const sidon_set* s) { return s ? s->elements.size() : 0; }

char* sidon_set_element(const sidon_set* s, size_t idx) {
  if (!s || idx >= s->elements.size()) return nullptr;
  return dup_string(s->elements[idx].get_str());
}

sidon_status sidon_gen_finite(const char* method, uint64_t n, long precision_cap,
                              sidon_set** out) {
  return guarded([&]() -> sidon_status {
    if (!method || !out) throw std::invalid_argument("null argument");
    sidon::FiniteSet fs;
    std::string m = method;
    if (m == "greedy") {
      fs = sidon::greedy_sidon(n);
    } else if (m == "log") {
      fs = sidon::log_construction(n, cap_of(precision_cap));
    } else if (m == "gauss") {
      fs = sidon::gauss_construction(n, cap_of(precision_cap));
    } else {
      throw std::invalid_argument("unknown method: " + m);
    }
    auto* s = new sidon_set{std::move(fs.elements)};
    std::sort(s->elements.begin(), s->elements.end());
    *out = s;
    return SIDON_OK;
  });
}

sidon_status sidon_gen_infinite(const sidon_params* params, int prune, sidon_set** out,
                                sidon_infinite_info* info) {
  return guarded([&]() -> sidon_status {
    if (!out) throw std::invalid_argument("null argument");
    auto p = to_params(params);
    auto elements = sidon::generate(p);
    auto bad = sidon::find_bad_tuples(elements, false, p.precision_cap);
    auto pruned = sidon::prune(elements, bad);
    if (info) {
      info->elements = elements.size();
      info->bad_tuples = bad.size();
      info->removed = pruned.removed.size();
    }
    auto* s = new sidon_set;
    if (prune) {
      s->elements = std::move(pruned.elements);
    } else {
      for (const auto& e : elements) s->elements.push_back(e.a);
      std::sort(s->elements.begin(), s->elements.end());
    }
    *out = s;
    return SIDON_OK;
  });
}

sidon_status sidon_set_write(const sidon_set* s, const char* path, const char* method,
                             uint64_t n) {
  return guarded([&]() -> sidon_status {
    if (!s || !path || !method) throw std::invalid_argument("null argument");
    sidon::SetFile sf;
    sf.method = method;
    sf.n = n;
    sf.elements = s->elements;
    sidon::write_set_file(path, sf);
    return SIDON_OK;
  });
}

sidon_status sidon_set_read(const char* path, sidon_set** out, char** method_out,
                            uint64_t* n_out) {
  return guarded([&]() -> sidon_status {
    if (!path || !out) throw std::invalid_argument("null argument");
    sidon::SetFile sf = sidon::read_set_file(path);
    if (method_out) *method_out = dup_string(sf.method);
    if (n_out) *n_out = sf.n;
    *out = new sidon_set{std::move(sf.elements)};
    return SIDON_OK;
  });
}

sidon_status sidon_set_check(const sidon_set* s, int* is_sidon, char** witness) {
  return guarded([&]() -> sidon_status {
    if (!s || !is_sidon) throw std::invalid_argument("null argument");
    sidon::SidonReport rep = sidon::check_sidon(s->elements);
    *is_sidon = rep.ok ? 1 : 0;
    if (!rep.ok && witness && rep.has_witness) {
      std::ostringstream os;
      os << rep.x1.get_str() << "+" << rep.x2.get_str() << " = " << rep.y1.get_str() << "+"
         << rep.y2.get_str();
      *witness = dup_string(os.str());
    }
    return SIDON_OK;
  });
}

sidon_status sidon_set_count_upto(const sidon_set* s, const char* x, uint64_t* count) {
  return guarded([&]() -> sidon_status {
    if (!s || !x || !count) throw std::invalid_argument("null argument");
    mpz_class v;
    if (v.set_str(x, 10) != 0) throw std::invalid_argument("bad integer: " + std::string(x));
    *count = static_cast<uint64_t>(
        std::upper_bound(s->elements.begin(), s->elements.end(), v) - s->elements.begin());
    return SIDON_OK;
  });
}

sidon_status sidon_is_prime(uint64_t n, int* result) {
  return guarded([&]() -> sidon_status {
    if (!result) throw std::invalid_argument("null argument");
    *result = sidon::is_prime(n) ? 1 : 0;
    return SIDON_OK;
  });
}

sidon_status sidon_pi1(uint64_t x, uint64_t* count) {
  return guarded([&]() -> sidon_status {
    if (!count) throw std::invalid_argument("null argument");
    *count = sidon::pi1(x);
    return SIDON_OK;
  });
}

sidon_status sidon_two_squares(uint64_t p, uint64_t* a, uint64_t* b) {
  return guarded([&]() -> sidon_status {
    if (!a || !b) throw std::invalid_argument("null argument");
    auto d = sidon::two_squares(p);
    *a = d.a;
    *b = d.b;
    return SIDON_OK;
  });
}

sidon_status sidon_phi(uint64_t p, long bits, char** lo, char** hi) {
  return guarded([&]() -> sidon_status {
    if (!lo || !hi) throw std::invalid_argument("null argument");
    sidon::Angle ang = sidon::phi_of(p, bits);
    long digits = (bits * 302) / 1000 + 3;
    *lo = dup_string(decimal_endpoint(ang.enclosure.lo, ang.enclosure.scale, digits, false));
    *hi = dup_string(decimal_endpoint(ang.enclosure.hi, ang.enclosure.scale, digits, true));
    return SIDON_OK;
  });
}

sidon_status sidon_sweep_csv(const sidon_params* params, long grid_bits, uint64_t stride,
                             char** csv) {
  return guarded([&]() -> sidon_status {
    if (!csv) throw std::invalid_argument("null argument");
    auto p = to_params(params);
    sidon::AlphaGrid grid;
    grid.resolution_log2 = grid_bits;
    grid.stride = stride ? stride : 1;
    auto rows = sidon::sweep(p, grid);
    std::ostringstream os;
    os << "alpha_num,alpha_bits,K,L,T_KL,A_KL,bound_value,ratio\n";
    char buf[64];
    for (const auto& r : rows) {
      os << r.alpha.num.get_str() << "," << r.alpha.log2_den << "," << r.K << "," << r.L << ","
         << r.T_KL << "," << r.A_KL << ",";
      if (r.precision_error || r.K == 0) {
        os << "0,0\n";
        continue;
      }
      double bound = sidon::lemma_bound(r.K, r.L);
      std::snprintf(buf, sizeof buf, "%.6g,%.6g\n", bound,
                    static_cast<double>(r.A_KL) / bound);
      os << buf;
    }
    *csv = dup_string(os.str());
    return SIDON_OK;
  });
}

}  // extern "C"
