#ifndef SEGSUB_H
#define SEGSUB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every function.
 */
typedef enum SegsubStatus {
  SEGSUB_STATUS_OK = 0,
  SEGSUB_STATUS_NULL_POINTER = 1,
  SEGSUB_STATUS_INVALID_BUDGET = 2,
  SEGSUB_STATUS_SIZE_LIMIT = 3,
  SEGSUB_STATUS_INVALID_INPUT = 4,
  SEGSUB_STATUS_OUT_OF_RANGE = 5,
  SEGSUB_STATUS_PANIC = 6,
} SegsubStatus;

/**
 * Selects the SegE decision procedure.
 */
typedef enum SegsubSegeAlgo {
  SEGSUB_SEGE_ALGO_AUTO = 0,
  SEGSUB_SEGE_ALGO_DP = 1,
  SEGSUB_SEGE_ALGO_KMP2 = 2,
} SegsubSegeAlgo;

/**
 * Selects the table family used for each side of IndSegLCS.
 */
typedef enum SegsubFamily {
  SEGSUB_FAMILY_AUTO = 0,
  SEGSUB_FAMILY_COUNT = 1,
  SEGSUB_FAMILY_SCORE = 2,
} SegsubFamily;

/**
 * Longest-common-suffix index over two texts.
 */
typedef struct SegsubLcsuf SegsubLcsuf;

/**
 * Owned byte string.
 */
typedef struct SegsubText SegsubText;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *segsub_status_message(enum SegsubStatus status);

/**
 * Copies `len` bytes from `data` into a new text handle.
 * `data` may be null only when `len` is 0.
 *
 * # Safety
 * `data` must point to `len` readable bytes and `out` must be writable.
 */
enum SegsubStatus segsub_text_new(const uint8_t *data, size_t len, struct SegsubText **out);

/**
 * # Safety
 * `t` must be null or a handle from this library that has not been freed.
 */
void segsub_text_free(struct SegsubText *t);

/**
 * Length in bytes, 0 for null.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
size_t segsub_text_len(const struct SegsubText *t);

/**
 * Borrowed pointer to the bytes, valid until the handle is freed. Not NUL-terminated.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
const uint8_t *segsub_text_data(const struct SegsubText *t);

/**
 * Minimum number of segments of `p` embedded in `t`. `*found` is false when `p`
 * is not a subsequence of `t`, in which case `*segments` is 0.
 *
 * # Safety
 * Handles must be live; out-pointers must be writable.
 */
enum SegsubStatus segsub_min_segments(const struct SegsubText *t,
                                      const struct SegsubText *p,
                                      bool *found,
                                      size_t *segments);

/**
 * Whether `p` is an `f`-segmental subsequence of `t`.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum SegsubStatus segsub_sege(const struct SegsubText *t,
                              const struct SegsubText *p,
                              int64_t f,
                              enum SegsubSegeAlgo algo,
                              bool *out);

/**
 * Segmental LCS with at most `f` shared segments.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum SegsubStatus segsub_slcs(const struct SegsubText *t1,
                              const struct SegsubText *t2,
                              int64_t f,
                              size_t *out);

/**
 * LCS under independent budgets `f1` for `t1` and `f2` for `t2`.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum SegsubStatus segsub_indseglcs(const struct SegsubText *t1,
                                   const struct SegsubText *t2,
                                   int64_t f1,
                                   int64_t f2,
                                   enum SegsubFamily family,
                                   size_t *out);

/**
 * Builds the SegE instance `(text, pattern, budget)` for binary episode matching
 * with window bound `h`. The two new handles are owned by the caller.
 *
 * # Safety
 * Handles must be live; out-pointers must be writable.
 */
enum SegsubStatus segsub_reduce_episode(const struct SegsubText *t,
                                        const struct SegsubText *p,
                                        size_t h,
                                        struct SegsubText **out_text,
                                        struct SegsubText **out_pattern,
                                        size_t *out_budget);

/**
 * Builds an index answering `lcsuf(t1[1..i], t2[1..j])` in constant time.
 *
 * # Safety
 * Handles must be live; `out` must be writable.
 */
enum SegsubStatus segsub_lcsuf_new(const struct SegsubText *t1,
                                   const struct SegsubText *t2,
                                   struct SegsubLcsuf **out);

/**
 * # Safety
 * `idx` must be a live index handle; `out` must be writable.
 */
enum SegsubStatus segsub_lcsuf_query(const struct SegsubLcsuf *idx,
                                     size_t i,
                                     size_t j,
                                     size_t *out);

/**
 * # Safety
 * `idx` must be null or a live index handle.
 */
void segsub_lcsuf_free(struct SegsubLcsuf *idx);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEGSUB_H */
