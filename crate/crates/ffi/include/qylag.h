#ifndef QYLAG_H
#define QYLAG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Output format for [`qylag_poly_to_string`].
 */
typedef enum QylagFormat {
  QYLAG_FORMAT_PLAIN = 0,
  QYLAG_FORMAT_LATEX = 1,
  QYLAG_FORMAT_JSON = 2,
} QylagFormat;

/*
 Result code of every call.
 */
typedef enum QylagStatus {
  QYLAG_STATUS_OK = 0,
  QYLAG_STATUS_NULL_POINTER = 1,
  QYLAG_STATUS_INVALID_ARGUMENT = 2,
  QYLAG_STATUS_UNKNOWN_IDENTITY = 3,
  QYLAG_STATUS_VERIFICATION_FAILED = 4,
  QYLAG_STATUS_INTERNAL = 5,
} QylagStatus;

/*
 Opaque polynomial handle.
 */
typedef struct QylagPoly QylagPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 `L_n^{(α)}`, signless when `signless` is true.

 # Safety
 `out` must be null or valid for writing one pointer.
 */
enum QylagStatus qylag_laguerre(uint32_t n, int64_t alpha, bool signless, struct QylagPoly **out);

/*
 The signless coefficient of `x^{n-k}` in `L_n^{(α)}`.

 # Safety
 `out` must be null or valid for writing one pointer.
 */
enum QylagStatus qylag_coeff_l(uint32_t n, uint32_t k, int64_t alpha, struct QylagPoly **out);

/*
 The moment `μ_n`; with `symbolic_beta` the result keeps `β` and `alpha`
 is ignored, otherwise `alpha >= 0` is required.

 # Safety
 `out` must be null or valid for writing one pointer.
 */
enum QylagStatus qylag_moment(uint32_t n,
                              int64_t alpha,
                              bool symbolic_beta,
                              struct QylagPoly **out);

/*
 `L(L_{n1} L_{n2} L_{n3})` for `alpha >= 0`.

 # Safety
 `out` must be null or valid for writing one pointer.
 */
enum QylagStatus qylag_linearization(uint32_t n1,
                                     uint32_t n2,
                                     uint32_t n3,
                                     int64_t alpha,
                                     struct QylagPoly **out);

/*
 Number of nonzero terms, or 0 for a null handle.

 # Safety
 `poly` must be null or a live handle from this library.
 */
size_t qylag_poly_num_terms(const struct QylagPoly *poly);

/*
 Renders `poly` as a NUL-terminated string owned by the caller.

 # Safety
 `poly` must be null or a live handle; `out` must be null or valid for
 writing one pointer.
 */
enum QylagStatus qylag_poly_to_string(const struct QylagPoly *poly,
                                      enum QylagFormat format,
                                      char **out);

/*
 Writes whether two handles hold the same polynomial.

 # Safety
 Both handles must be null or live; `out` must be null or writable.
 */
enum QylagStatus qylag_poly_equal(const struct QylagPoly *a, const struct QylagPoly *b, bool *out);

/*
 Releases a handle; null is ignored.

 # Safety
 `poly` must be null or a handle not yet freed.
 */
void qylag_poly_free(struct QylagPoly *poly);

/*
 Releases a string from [`qylag_poly_to_string`]; null is ignored.

 # Safety
 `s` must be null or a string from this library not yet freed.
 */
void qylag_string_free(char *s);

/*
 Sweeps a named identity. `n_max < 0` keeps the default ceilings. The
 counts are written when the out pointers are non-null. Returns
 `QYLAG_STATUS_VERIFICATION_FAILED` if any tuple fails.

 # Safety
 `identity` must be a NUL-terminated string; `passed` and `total` must be
 null or writable.
 */
enum QylagStatus qylag_verify(const char *identity,
                              int32_t n_max,
                              uint64_t seed,
                              uint32_t *passed,
                              uint32_t *total);

/*
 Static description of a status code.
 */
const char *qylag_status_message(enum QylagStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QYLAG_H */
