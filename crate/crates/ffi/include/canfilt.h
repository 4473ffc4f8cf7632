#ifndef CANFILT_H
#define CANFILT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CanfiltStatus {
  CANFILT_STATUS_OK = 0,
  CANFILT_STATUS_NULL_POINTER = 1,
  CANFILT_STATUS_INVALID_UTF8 = 2,
  CANFILT_STATUS_INVALID_PARAMETER = 3,
  CANFILT_STATUS_CAP_EXCEEDED = 4,
  CANFILT_STATUS_INTERNAL = 5,
} CanfiltStatus;

typedef enum CanfiltVerdict {
  CANFILT_VERDICT_EQUAL = 0,
  CANFILT_VERDICT_FIRST_IN_SECOND = 1,
  CANFILT_VERDICT_SECOND_IN_FIRST = 2,
  CANFILT_VERDICT_INCOMPARABLE = 3,
} CanfiltVerdict;

/**
 * Output of one command-line invocation.
 */
typedef struct CanfiltRun CanfiltRun;

/**
 * A subspace of Sym^d(∧^m V) in reduced row-echelon form.
 */
typedef struct CanfiltSubspace CanfiltSubspace;

/**
 * Message of the last failure on this thread, or NULL. Owned by the library.
 */
const char *canfilt_last_error_message(void);

/**
 * U_l(sl(V))·L^d inside Sym^d(∧^m K^{m+n}).
 */
enum CanfiltStatus canfilt_filtration_new(uint32_t m,
                                          uint32_t n,
                                          uint32_t d,
                                          uint32_t l,
                                          uint32_t cap,
                                          struct CanfiltSubspace **out);

/**
 * L^{d-l} times Sym^l of the tangent directions at L.
 */
enum CanfiltStatus canfilt_comparison_new(uint32_t m,
                                          uint32_t n,
                                          uint32_t d,
                                          uint32_t l,
                                          uint32_t cap,
                                          struct CanfiltSubspace **out);

/**
 * # Safety
 * `s` must be NULL or a handle from this library; `dim` must be writable.
 */
enum CanfiltStatus canfilt_subspace_dims(const struct CanfiltSubspace *s,
                                         size_t *dim,
                                         size_t *ambient_dim);

/**
 * # Safety
 * `a` and `b` must be NULL or handles from this library.
 */
enum CanfiltStatus canfilt_subspace_compare(const struct CanfiltSubspace *a,
                                            const struct CanfiltSubspace *b,
                                            enum CanfiltVerdict *verdict,
                                            size_t *dim_intersection);

/**
 * # Safety
 * `s` must be NULL or a handle from this library, not freed before.
 */
void canfilt_subspace_free(struct CanfiltSubspace *s);

/**
 * Runs the command line `argv[0..argc]` (without the program name) as the
 * `canfilt` binary would. The run handle is produced even when the exit
 * code is nonzero; `Ok` only means the call itself succeeded.
 *
 * # Safety
 * `argv` must hold `argc` valid NUL-terminated strings.
 */
enum CanfiltStatus canfilt_run(const char *const *argv, size_t argc, struct CanfiltRun **out);

/**
 * Exit code the binary would have returned, or -1 for NULL.
 *
 * # Safety
 * `r` must be NULL or a handle from this library.
 */
int32_t canfilt_run_exit_code(const struct CanfiltRun *r);

/**
 * The JSON report; valid until the handle is freed.
 *
 * # Safety
 * `r` must be NULL or a handle from this library.
 */
const char *canfilt_run_json(const struct CanfiltRun *r);

/**
 * Diagnostics; valid until the handle is freed.
 *
 * # Safety
 * `r` must be NULL or a handle from this library.
 */
const char *canfilt_run_diagnostics(const struct CanfiltRun *r);

/**
 * # Safety
 * `r` must be NULL or a handle from this library, not freed before.
 */
void canfilt_run_free(struct CanfiltRun *r);

/**
 * h⁰ and h¹ of O(k) on the projective line.
 *
 * # Safety
 * `h0` and `h1` must be writable.
 */
enum CanfiltStatus canfilt_line_cohomology(int64_t k, uint64_t *h0, uint64_t *h1);

#endif  /* CANFILT_H */
