#ifndef DUNKL_H
#define DUNKL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Realization selector for [`dunkl_verify_bi_relation`].
typedef enum DunklRealization {
  DUNKL_REALIZATION_CLIFFORD = 0,
  DUNKL_REALIZATION_SCALAR = 1,
} DunklRealization;

typedef enum DunklStatus {
  DUNKL_STATUS_OK = 0,
  DUNKL_STATUS_NULL_POINTER = 1,
  DUNKL_STATUS_INVALID_ARGUMENT = 2,
  DUNKL_STATUS_COMPUTATION = 3,
  DUNKL_STATUS_IO = 4,
  DUNKL_STATUS_PANIC = 5,
} DunklStatus;

// Opaque parameter set.
typedef struct DunklParams DunklParams;

// Opaque Clifford-valued polynomial.
typedef struct DunklPoly DunklPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer is
// valid until the next failing call on the same thread.
const char *dunkl_last_error(void);

// Parses `p/q,p/q,...` into a new parameter set.
//
// # Safety
// `mu` must be a valid C string and `out` a valid pointer.
enum DunklStatus dunkl_params_new(const char *mu, struct DunklParams **out);

// # Safety
// `p` must come from [`dunkl_params_new`] or be null.
void dunkl_params_free(struct DunklParams *p);

// Dimension of a parameter set, 0 for null.
//
// # Safety
// `p` must be a live handle or null.
uintptr_t dunkl_params_dim(const struct DunklParams *p);

// The CK-tower basis element for the multi-index `j[0..len]` (length
// `n - 1`) and the blade with bitmask `s_mask` (bit `i-1` for `e_i`).
//
// # Safety
// `params` must be a live handle, `j` must point to `len` integers and
// `out` must be a valid pointer.
enum DunklStatus dunkl_basis_psi(const struct DunklParams *params,
                                 const uint32_t *j,
                                 uintptr_t len,
                                 uint32_t s_mask,
                                 struct DunklPoly **out);

// # Safety
// `p` must come from this library or be null.
void dunkl_poly_free(struct DunklPoly *p);

// Canonical text form, one `a1,...,an | i1 ... | num/den` line per term.
//
// # Safety
// `p` must be a live handle and `out` a valid pointer.
enum DunklStatus dunkl_poly_to_string(const struct DunklPoly *p, char **out);

// # Safety
// `s` must come from this library or be null.
void dunkl_string_free(char *s);

// Checks the Bannai-Ito anticommutation relation for the subsets with
// bitmasks `a_mask`, `b_mask` on polynomials of degree `<= k_max`.
// `*passed` is 1 when the relation holds and 0 otherwise.
//
// # Safety
// `params` must be a live handle and `passed` a valid pointer.
enum DunklStatus dunkl_verify_bi_relation(const struct DunklParams *params,
                                          enum DunklRealization realization,
                                          uint32_t a_mask,
                                          uint32_t b_mask,
                                          uint32_t k_max,
                                          int32_t *passed);

// Runs the verification suites and returns the JSON report.
//
// `mu` is `p/q,...` or `random:<seed>`; `suites` is a comma separated
// list or null for all; `realization` is `clifford`, `scalar`, `both` or
// null for both; `k_max` of -1 keeps the per-dimension defaults.
// `*all_passed` is set to 1 when every row passed.
//
// # Safety
// String arguments must be valid C strings or null where allowed;
// `out_json` and `all_passed` must be valid pointers.
enum DunklStatus dunkl_run_suite_json(uintptr_t n,
                                      const char *mu,
                                      int32_t k_max,
                                      const char *suites,
                                      const char *realization,
                                      char **out_json,
                                      int32_t *all_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DUNKL_H */
