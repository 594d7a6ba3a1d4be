#ifndef SIDON_H
#define SIDON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sidon_status {
  SIDON_OK = 0,
  SIDON_ERR_INVALID = 1,    /* bad arguments or malformed input */
  SIDON_ERR_RANGE = 2,      /* empty construction range */
  SIDON_ERR_PRECISION = 3,  /* precision cap exceeded */
  SIDON_ERR_RESOLUTION = 4, /* grid resolution too coarse */
  SIDON_ERR_IO = 5,         /* file read or write failure */
  SIDON_ERR_INTERNAL = 6
} sidon_status;

/* Opaque ascending multiset of nonnegative big integers. */
typedef struct sidon_set sidon_set;

typedef struct sidon_params {
  uint64_t alpha_num; /* alpha = alpha_num / 2^alpha_bits, in [1,2) */
  long alpha_bits;
  int k_max;
  long precision_cap; /* 0 selects the library default */
} sidon_params;

typedef struct sidon_infinite_info {
  uint64_t elements;   /* before pruning */
  uint64_t bad_tuples;
  uint64_t removed;
} sidon_infinite_info;

/* Thread-local message for the most recent failure. Do not free. */
const char* sidon_last_error(void);

/* Frees any string returned by this library. */
void sidon_string_free(char* s);

void sidon_set_free(sidon_set* s);
size_t sidon_set_size(const sidon_set* s);
/* Decimal rendering of element idx; caller frees with sidon_string_free. */
char* sidon_set_element(const sidon_set* s, size_t idx);

/* method is one of "greedy", "log", "gauss". */
sidon_status sidon_gen_finite(const char* method, uint64_t n, long precision_cap,
                              sidon_set** out);

/* Infinite-style construction; prune=0 keeps bad-tuple maxima in the set. */
sidon_status sidon_gen_infinite(const sidon_params* params, int prune, sidon_set** out,
                                sidon_infinite_info* info);

/* Set files: "# sidon-set method=... n=... count=..." then one integer per
 * line, ascending. method_out (may be NULL) is caller-freed. */
sidon_status sidon_set_write(const sidon_set* s, const char* path, const char* method,
                             uint64_t n);
sidon_status sidon_set_read(const char* path, sidon_set** out, char** method_out,
                            uint64_t* n_out);

/* *is_sidon set to 1/0; on violation *witness (if non-NULL) receives
 * "x1 + x2 = y1 + y2", caller-freed. */
sidon_status sidon_set_check(const sidon_set* s, int* is_sidon, char** witness);

/* Count of elements <= x (decimal string, may be negative). */
sidon_status sidon_set_count_upto(const sidon_set* s, const char* x, uint64_t* count);

sidon_status sidon_is_prime(uint64_t n, int* result);
/* Number of primes p <= x with p == 1 (mod 4). */
sidon_status sidon_pi1(uint64_t x, uint64_t* count);
/* p == 1 (mod 4) prime -> p = a^2 + b^2, a > b > 0. */
sidon_status sidon_two_squares(uint64_t p, uint64_t* a, uint64_t* b);

/* Decimal endpoints of a certified enclosure of phi_p = arctan(b/a)/pi with
 * width <= 2^-bits; both strings caller-freed. */
sidon_status sidon_phi(uint64_t p, long bits, char** lo, char** hi);

/* Full sweep as CSV text with header
 * alpha_num,alpha_bits,K,L,T_KL,A_KL,bound_value,ratio
 * over the dyadic grid A/2^grid_bits, A in [2^grid_bits, 2^{grid_bits+1})
 * stepping by stride. Caller frees *csv. */
sidon_status sidon_sweep_csv(const sidon_params* params, long grid_bits, uint64_t stride,
                             char** csv);

#ifdef __cplusplus
}
#endif

#endif /* SIDON_H */
