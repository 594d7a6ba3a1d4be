#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sidon.h"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

int exit_code_for(sidon_status st) {
  switch (st) {
    case SIDON_OK: return 0;
    case SIDON_ERR_PRECISION: return 3;
    default: return 2;
  }
}

int fail(sidon_status st) {
  std::cerr << "error: " << sidon_last_error() << "\n";
  return exit_code_for(st);
}

long precision_cap_from_env() {
  const char* v = std::getenv("SIDON_PRECISION_CAP");
  if (!v) return 0;
  char* end = nullptr;
  long cap = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || cap <= 0) {
    std::cerr << "warning: ignoring bad SIDON_PRECISION_CAP value\n";
    return 0;
  }
  return cap;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

void write_manifest(const std::string& out_path, const std::string& command, json params,
                    json counts, double elapsed_ms) {
  json m;
  m["command"] = command;
  m["version"] = kVersion;
  m["params"] = std::move(params);
  m["counts"] = std::move(counts);
  m["timings"] = {{"elapsed_ms", elapsed_ms}};
  std::ofstream f(out_path + ".manifest.json");
  f << m.dump(2) << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sidon set construction and verification"};
  app.require_subcommand(1);
  std::string command_line = join_args(argc, argv);
  long env_cap = precision_cap_from_env();

  // gen-finite
  auto* gen_finite = app.add_subcommand("gen-finite", "Construct a finite Sidon set");
  std::string gf_method;
  uint64_t gf_n = 0;
  std::string gf_out;
  long gf_cap = 0;
  gen_finite->add_option("--method", gf_method, "greedy, log, or gauss")->required();
  gen_finite->add_option("--n", gf_n, "term count (greedy) or range bound")->required();
  gen_finite->add_option("--out", gf_out, "output set file");
  gen_finite->add_option("--precision-cap", gf_cap, "precision cap in bits");

  // gen-infinite
  auto* gen_inf = app.add_subcommand("gen-infinite", "Construct the block-encoded set");
  uint64_t gi_alpha_num = 1;
  long gi_alpha_bits = 0;
  int gi_k_max = 6;
  bool gi_no_prune = false, gi_no_verify = false;
  std::string gi_out;
  long gi_cap = 0;
  gen_inf->add_option("--alpha-num", gi_alpha_num, "alpha numerator");
  gen_inf->add_option("--alpha-bits", gi_alpha_bits, "alpha resolution bits");
  gen_inf->add_option("--k-max", gi_k_max, "largest class index");
  gen_inf->add_flag("--no-prune", gi_no_prune, "keep bad-tuple maxima");
  gen_inf->add_flag("--no-verify", gi_no_verify, "acknowledge long verification for k-max >= 9");
  gen_inf->add_option("--out", gi_out, "output set file");
  gen_inf->add_option("--precision-cap", gi_cap, "precision cap in bits");

  // verify
  auto* verify = app.add_subcommand("verify", "Check the Sidon property of a set file");
  std::string v_file;
  verify->add_option("file", v_file, "set file")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Alpha-grid statistics as CSV");
  int sw_k_max = 5;
  long sw_grid_bits = 5;
  uint64_t sw_stride = 1;
  std::string sw_out;
  long sw_cap = 0;
  sweep->add_option("--k-max", sw_k_max, "largest class index");
  sweep->add_option("--grid-bits", sw_grid_bits, "alpha grid resolution");
  sweep->add_option("--stride", sw_stride, "grid stride");
  sweep->add_option("--out", sw_out, "output CSV file (stdout if omitted)");
  sweep->add_option("--precision-cap", sw_cap, "precision cap in bits");

  // phi
  auto* phi = app.add_subcommand("phi", "Certified enclosure of arctan(b/a)/pi");
  uint64_t ph_p = 0;
  long ph_bits = 64;
  phi->add_option("p", ph_p, "prime == 1 (mod 4)")->required();
  phi->add_option("--bits", ph_bits, "enclosure width exponent");

  // factor
  auto* factor = app.add_subcommand("factor", "Two-squares decomposition");
  uint64_t fa_p = 0;
  factor->add_option("p", fa_p, "prime == 1 (mod 4)")->required();

  // count
  auto* count = app.add_subcommand("count", "Count elements <= x in a set file");
  std::string c_file, c_x;
  count->add_option("file", c_file, "set file")->required();
  count->add_option("--x", c_x, "threshold (decimal integer)")->required();

  CLI11_PARSE(app, argc, argv);

  if (gen_finite->parsed()) {
    Timer t;
    long cap = gf_cap > 0 ? gf_cap : env_cap;
    sidon_set* s = nullptr;
    sidon_status st = sidon_gen_finite(gf_method.c_str(), gf_n, cap, &s);
    if (st != SIDON_OK) return fail(st);
    if (gf_out.empty()) gf_out = gf_method + "_" + std::to_string(gf_n) + ".sidon";
    st = sidon_set_write(s, gf_out.c_str(), gf_method.c_str(), gf_n);
    if (st != SIDON_OK) {
      sidon_set_free(s);
      return fail(st);
    }
    write_manifest(gf_out, command_line,
                   {{"method", gf_method}, {"n", gf_n}, {"precision_cap", cap}},
                   {{"elements", sidon_set_size(s)}}, t.ms());
    std::cout << gf_out << ": " << sidon_set_size(s) << " elements\n";
    sidon_set_free(s);
    return 0;
  }

  if (gen_inf->parsed()) {
    Timer t;
    if (gi_k_max < 3) {
      std::cerr << "error: --k-max must be at least 3\n";
      return 2;
    }
    if (gi_k_max >= 9 && !gi_no_verify) {
      std::cerr << "error: --k-max >= 9 makes verification very slow; pass --no-verify to "
                   "acknowledge\n";
      return 2;
    }
    long cap = gi_cap > 0 ? gi_cap : env_cap;
    sidon_params params{gi_alpha_num, gi_alpha_bits, gi_k_max, cap};
    sidon_set* s = nullptr;
    sidon_infinite_info info{};
    sidon_status st = sidon_gen_infinite(&params, gi_no_prune ? 0 : 1, &s, &info);
    if (st != SIDON_OK) return fail(st);
    if (gi_out.empty())
      gi_out = "infinite_a" + std::to_string(gi_alpha_num) + "_" +
               std::to_string(gi_alpha_bits) + "_k" + std::to_string(gi_k_max) + ".sidon";
    st = sidon_set_write(s, gi_out.c_str(), "infinite", gi_k_max);
    if (st != SIDON_OK) {
      sidon_set_free(s);
      return fail(st);
    }
    write_manifest(gi_out, command_line,
                   {{"alpha_num", gi_alpha_num},
                    {"alpha_bits", gi_alpha_bits},
                    {"k_max", gi_k_max},
                    {"precision_cap", cap},
                    {"pruned", !gi_no_prune}},
                   {{"elements", info.elements},
                    {"bad_tuples", info.bad_tuples},
                    {"removed", info.removed}},
                   t.ms());
    std::cout << gi_out << ": " << sidon_set_size(s) << " elements (" << info.bad_tuples
              << " bad tuples, " << info.removed << " removed)\n";
    sidon_set_free(s);
    return 0;
  }

  if (verify->parsed()) {
    sidon_set* s = nullptr;
    sidon_status st = sidon_set_read(v_file.c_str(), &s, nullptr, nullptr);
    if (st != SIDON_OK) return fail(st);
    int ok = 0;
    char* witness = nullptr;
    st = sidon_set_check(s, &ok, &witness);
    sidon_set_free(s);
    if (st != SIDON_OK) return fail(st);
    if (ok) {
      std::cout << "ok: Sidon\n";
      return 0;
    }
    std::cout << "violation: " << (witness ? witness : "?") << "\n";
    sidon_string_free(witness);
    return 1;
  }

  if (sweep->parsed()) {
    long cap = sw_cap > 0 ? sw_cap : env_cap;
    sidon_params params{1, 0, sw_k_max, cap};
    char* csv = nullptr;
    sidon_status st = sidon_sweep_csv(&params, sw_grid_bits, sw_stride, &csv);
    if (st != SIDON_OK) return fail(st);
    if (sw_out.empty()) {
      std::cout << csv;
    } else {
      std::ofstream f(sw_out);
      f << csv;
      if (!f) {
        std::cerr << "error: cannot write " << sw_out << "\n";
        sidon_string_free(csv);
        return 2;
      }
      write_manifest(sw_out, command_line,
                     {{"k_max", sw_k_max},
                      {"grid_bits", sw_grid_bits},
                      {"stride", sw_stride},
                      {"precision_cap", cap}},
                     json::object(), 0.0);
    }
    sidon_string_free(csv);
    return 0;
  }

  if (phi->parsed()) {
    char *lo = nullptr, *hi = nullptr;
    sidon_status st = sidon_phi(ph_p, ph_bits, &lo, &hi);
    if (st != SIDON_OK) return fail(st);
    std::cout << "phi_" << ph_p << " in [" << lo << ", " << hi << "]\n";
    sidon_string_free(lo);
    sidon_string_free(hi);
    return 0;
  }

  if (factor->parsed()) {
    uint64_t a = 0, b = 0;
    sidon_status st = sidon_two_squares(fa_p, &a, &b);
    if (st != SIDON_OK) return fail(st);
    std::cout << fa_p << " = " << a << "^2 + " << b << "^2\n";
    return 0;
  }

  if (count->parsed()) {
    sidon_set* s = nullptr;
    sidon_status st = sidon_set_read(c_file.c_str(), &s, nullptr, nullptr);
    if (st != SIDON_OK) return fail(st);
    uint64_t n = 0;
    st = sidon_set_count_upto(s, c_x.c_str(), &n);
    sidon_set_free(s);
    if (st != SIDON_OK) return fail(st);
    std::cout << n << "\n";
    return 0;
  }

  return 2;
}
