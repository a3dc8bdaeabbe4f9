#ifndef EULER_MEDIANS_H
#define EULER_MEDIANS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EmStatus {
  EM_STATUS_OK = 0,
  EM_STATUS_NULL_POINTER = 1,
  EM_STATUS_INVALID_ARGUMENT = 2,
  EM_STATUS_PARSE_ERROR = 3,
  /**
   * The input does not describe a triangle with integer medians, or a
   * construction produced no triangle.
   */
  EM_STATUS_NOT_A_MEDIAN_TRIANGLE = 4,
  /**
   * The output buffer is too small; the required size was written.
   */
  EM_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * The value does not fit the requested fixed-width type.
   */
  EM_STATUS_OUT_OF_RANGE = 6,
  EM_STATUS_INTERNAL = 7,
} EmStatus;

typedef enum EmRoute {
  EM_ROUTE_RATIONAL_PIPELINE = 0,
  EM_ROUTE_CLOSED_FORM = 1,
} EmRoute;

typedef enum EmClassification {
  EM_CLASSIFICATION_VALID = 0,
  EM_CLASSIFICATION_DEGENERATE = 1,
  EM_CLASSIFICATION_ZERO = 2,
} EmClassification;

/**
 * Construction intermediates readable through `em_construction_trace`.
 */
typedef enum EmTraceField {
  EM_TRACE_FIELD_M = 0,
  EM_TRACE_FIELD_N = 1,
  EM_TRACE_FIELD_P_RATIONAL = 2,
  EM_TRACE_FIELD_Q_RATIONAL = 3,
  EM_TRACE_FIELD_P = 4,
  EM_TRACE_FIELD_Q = 5,
  EM_TRACE_FIELD_T = 6,
  EM_TRACE_FIELD_U = 7,
} EmTraceField;

typedef enum EmDegeneracy {
  EM_DEGENERACY_NONE = 0,
  EM_DEGENERACY_COLLINEAR = 1,
  EM_DEGENERACY_ZERO_SIDE = 2,
} EmDegeneracy;

typedef struct EmConstruction EmConstruction;

/**
 * A verified triangle: half-sides `a, b, c` (indices 0..3) and medians
 * `x, y, z` (indices 3..6).
 */
typedef struct EmTriangle EmTriangle;

typedef struct EmTriangleList EmTriangleList;

typedef struct EmReport {
  bool identity_x;
  bool identity_y;
  bool identity_z;
  bool derived_identities;
  bool triangle_inequality;
  bool positive;
  bool primitive;
  enum EmDegeneracy degeneracy;
  bool all_pass;
} EmReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null.
 */
const char *em_status_message(enum EmStatus status);

/**
 * Runs the construction for `(f, g)`, both at least 1.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum EmStatus em_construct(uint64_t f, uint64_t g, enum EmRoute route, struct EmConstruction **out);

/**
 * # Safety
 * `c` must come from `em_construct`; `out` must be writable.
 */
enum EmStatus em_construction_classification(const struct EmConstruction *c,
                                             enum EmClassification *out);

/**
 * The primitive triangle of a valid construction, as a new handle.
 * Returns `EM_STATUS_NOT_A_MEDIAN_TRIANGLE` for degenerate outcomes.
 *
 * # Safety
 * `c` must come from `em_construct`; `out` must be writable.
 */
enum EmStatus em_construction_triangle(const struct EmConstruction *c, struct EmTriangle **out);

/**
 * Writes one trace value as a decimal integer or `n/d` fraction.
 * `EM_STATUS_INVALID_ARGUMENT` if the route did not produce the field.
 *
 * # Safety
 * `c` must come from `em_construct`; `buf` must hold `len` bytes; `needed`
 * may be null.
 */
enum EmStatus em_construction_trace(const struct EmConstruction *c,
                                    enum EmTraceField field,
                                    char *buf,
                                    size_t len,
                                    size_t *needed);

/**
 * # Safety
 * `c` must come from `em_construct` or be null; it must not be used again.
 */
void em_construction_free(struct EmConstruction *c);

/**
 * Parses `"a b c x y z"` (whitespace or comma separated) into a verified
 * triangle, kept in the given order and scale.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum EmStatus em_triangle_parse(const char *text, struct EmTriangle **out);

/**
 * Builds a verified triangle from six values `a, b, c, x, y, z`.
 *
 * # Safety
 * `values` must point to six `uint64_t`; `out` must be writable.
 */
enum EmStatus em_triangle_from_u64(const uint64_t *values, struct EmTriangle **out);

/**
 * Value `index` (0..6: a, b, c, x, y, z) as `uint64_t`.
 *
 * # Safety
 * `t` must be a live triangle handle; `out` must be writable.
 */
enum EmStatus em_triangle_get_u64(const struct EmTriangle *t, uint32_t index, uint64_t *out);

/**
 * Value `index` (0..6) as a decimal string.
 *
 * # Safety
 * `t` must be a live triangle handle; `buf` must hold `len` bytes; `needed`
 * may be null.
 */
enum EmStatus em_triangle_get_string(const struct EmTriangle *t,
                                     uint32_t index,
                                     char *buf,
                                     size_t len,
                                     size_t *needed);

/**
 * The median triangle (half-sides `x, y, z`, medians `3a, 3b, 3c`) in
 * primitive form.
 *
 * # Safety
 * `t` must be a live triangle handle; `out` must be writable.
 */
enum EmStatus em_triangle_dual(const struct EmTriangle *t, struct EmTriangle **out);

/**
 * Primitive form with pairs sorted by ascending half-side.
 *
 * # Safety
 * `t` must be a live triangle handle; `out` must be writable.
 */
enum EmStatus em_triangle_canonical(const struct EmTriangle *t, struct EmTriangle **out);

/**
 * # Safety
 * `a` and `b` must be live triangle handles; `out` must be writable.
 */
enum EmStatus em_triangle_similar(const struct EmTriangle *a,
                                  const struct EmTriangle *b,
                                  bool *out);

/**
 * # Safety
 * `t` must come from this library or be null; it must not be used again.
 */
void em_triangle_free(struct EmTriangle *t);

/**
 * Checks a sextuple `"a b c x y z"` without requiring it to be valid.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum EmStatus em_verify(const char *text, struct EmReport *out);

/**
 * All primitive median triangles with largest half-side at most
 * `max_half_side`, in canonical form and ascending order.
 *
 * # Safety
 * `out` must be writable.
 */
enum EmStatus em_search(uint64_t max_half_side, struct EmTriangleList **out);

/**
 * Number of entries; zero for a null list.
 *
 * # Safety
 * `list` must be a live list handle or null.
 */
size_t em_triangle_list_len(const struct EmTriangleList *list);

/**
 * A copy of entry `index` as a new triangle handle.
 *
 * # Safety
 * `list` must be a live list handle; `out` must be writable.
 */
enum EmStatus em_triangle_list_get(const struct EmTriangleList *list,
                                   size_t index,
                                   struct EmTriangle **out);

/**
 * # Safety
 * `list` must come from `em_search` or be null; it must not be used again.
 */
void em_triangle_list_free(struct EmTriangleList *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EULER_MEDIANS_H */
