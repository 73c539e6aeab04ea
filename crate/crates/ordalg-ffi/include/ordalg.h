#ifndef ORDALG_H
#define ORDALG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum OrdalgStatus {
  OrdalgStatus_Ok = 0,
  OrdalgStatus_NullArgument = 1,
  OrdalgStatus_InvalidUtf8 = 2,
  OrdalgStatus_ParseError = 3,
  OrdalgStatus_DomainError = 4,
  OrdalgStatus_Unsupported = 5,
  OrdalgStatus_InternalError = 6,
} OrdalgStatus;

/**
 * Opaque monoid instance handle.
 */
typedef struct OrdalgMonoid OrdalgMonoid;

/**
 * Opaque quadratic-ring handle.
 */
typedef struct OrdalgRing OrdalgRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *ordalg_last_error(void);

/**
 * Library version string (static storage).
 */
const char *ordalg_version(void);

/**
 * Release a string allocated by this library.
 *
 * # Safety
 * `s` must be a pointer previously returned through an out-parameter of
 * this library, or null.
 */
void ordalg_string_free(char *s);

/**
 * Load a monoid instance from a JSON document (see the README for the
 * schema). On success writes a handle the caller must free.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum OrdalgStatus ordalg_monoid_load_json(const char *json, struct OrdalgMonoid **out);

/**
 * Load a built-in instance by id (e.g. "ns:2,3"); `window` 0 keeps the
 * catalog default.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum OrdalgStatus ordalg_monoid_catalog(const char *id, uint64_t window, struct OrdalgMonoid **out);

/**
 * # Safety
 * `m` must be a handle from this library, or null.
 */
void ordalg_monoid_free(struct OrdalgMonoid *m);

/**
 * Number of enumerated window elements.
 *
 * # Safety
 * `m` and `out` must be valid pointers.
 */
enum OrdalgStatus ordalg_monoid_len(const struct OrdalgMonoid *m, uintptr_t *out);

/**
 * Canonical rendering of the element at an enumeration index.
 *
 * # Safety
 * `m` and `out` must be valid pointers; free the result with
 * `ordalg_string_free`.
 */
enum OrdalgStatus ordalg_monoid_render_element(const struct OrdalgMonoid *m,
                                               uintptr_t index,
                                               char **out);

/**
 * Run a named suite ("order", "riesz", "ideal", "all") and return the
 * analysis report as JSON.
 *
 * # Safety
 * All pointers must be valid; free the result with `ordalg_string_free`.
 */
enum OrdalgStatus ordalg_analyze_json(const struct OrdalgMonoid *m, const char *suite, char **out);

/**
 * Interpolate a, b <= z <= x, y from canonical element renderings. The
 * result JSON is `{"found": bool, "z": "..."}`.
 *
 * # Safety
 * All pointers must be valid; free the result with `ordalg_string_free`.
 */
enum OrdalgStatus ordalg_interpolate(const struct OrdalgMonoid *m,
                                     const char *a,
                                     const char *b,
                                     const char *x,
                                     const char *y,
                                     bool constructive,
                                     char **out);

/**
 * Create a quadratic-ring handle for squarefree d (sqrt_order selects
 * Z[sqrt(d)] even when d = 1 mod 4).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum OrdalgStatus ordalg_ring_new(int64_t d, bool sqrt_order, struct OrdalgRing **out);

/**
 * # Safety
 * `r` must be a handle from this library, or null.
 */
void ordalg_ring_free(struct OrdalgRing *r);

/**
 * Ideal-theory operations with JSON arguments. Supported ops:
 * "homogeneous", "v", "t", "inverse", "mul", "sum", "colon", "invertible",
 * "principal", "potency", "schreier".
 *
 * # Safety
 * All pointers must be valid; free the result with `ordalg_string_free`.
 */
enum OrdalgStatus ordalg_ideal_op_json(const struct OrdalgRing *r,
                                       const char *op,
                                       const char *args_json,
                                       int64_t bound,
                                       char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ORDALG_H */
