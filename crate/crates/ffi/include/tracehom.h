#ifndef TRACEHOM_H
#define TRACEHOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TracehomStatus {
  TRACEHOM_STATUS_OK = 0,
  TRACEHOM_STATUS_NULL_POINTER = 1,
  TRACEHOM_STATUS_INVALID_UTF8 = 2,
  TRACEHOM_STATUS_INVALID_INPUT = 3,
  TRACEHOM_STATUS_BUFFER_TOO_SMALL = 4,
  /**
   * The bounded exactness check left some kernel generator unresolved.
   */
  TRACEHOM_STATUS_UNVERIFIED = 5,
  TRACEHOM_STATUS_PANIC = 6,
} TracehomStatus;

/**
 * Opaque handle to a presentation.
 */
typedef struct TracehomPresentation TracehomPresentation;

/**
 * Opaque handle to a trace.
 */
typedef struct TracehomTrace TracehomTrace;

/**
 * Message describing the last failed call on this thread, or an empty
 * string. Valid until the next call into this library on the same thread.
 */
const char *tracehom_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void tracehom_string_free(char *s);

/**
 * Parses a presentation from TOML text with `letters` and `commuting` keys.
 *
 * # Safety
 * `toml` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TracehomStatus tracehom_presentation_parse(const char *toml,
                                                struct TracehomPresentation **out);

/**
 * Loads a presentation file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TracehomStatus tracehom_presentation_load(const char *path, struct TracehomPresentation **out);

/**
 * # Safety
 * `p` must be null or a handle from this library that has not been freed.
 */
void tracehom_presentation_free(struct TracehomPresentation *p);

/**
 * Number of letters, or 0 for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t tracehom_presentation_letter_count(const struct TracehomPresentation *p);

/**
 * Parses a word into its trace.
 *
 * # Safety
 * `p` must be a live handle, `word` a NUL-terminated string and `out` a
 * valid pointer.
 */
enum TracehomStatus tracehom_trace_parse(const struct TracehomPresentation *p,
                                         const char *word,
                                         struct TracehomTrace **out);

/**
 * # Safety
 * `t` must be null or a handle from this library that has not been freed.
 */
void tracehom_trace_free(struct TracehomTrace *t);

/**
 * Length of a trace, or 0 for a null handle.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
size_t tracehom_trace_length(const struct TracehomTrace *t);

/**
 * Foata normal form, e.g. `(ac)(b)`, as a new string.
 *
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum TracehomStatus tracehom_trace_normal_form(const struct TracehomTrace *t, char **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum TracehomStatus tracehom_trace_multiply(const struct TracehomTrace *a,
                                            const struct TracehomTrace *b,
                                            struct TracehomTrace **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum TracehomStatus tracehom_trace_equal(const struct TracehomTrace *a,
                                         const struct TracehomTrace *b,
                                         bool *out);

/**
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum TracehomStatus tracehom_clique_number(const struct TracehomPresentation *p, size_t *out);

/**
 * Writes the ranks of `H_1, H_2, …` into `buf`. `len` receives the number
 * of ranks; when it exceeds `capacity` nothing is written and
 * `BufferTooSmall` is returned. `buf` may be null when `capacity` is 0.
 *
 * # Safety
 * `p` must be a live handle, `buf` valid for `capacity` writes and `len` a
 * valid pointer.
 */
enum TracehomStatus tracehom_homology_ranks(const struct TracehomPresentation *p,
                                            size_t *buf,
                                            size_t capacity,
                                            size_t *len);

/**
 * Upper and lower bounds on the homological dimension.
 *
 * # Safety
 * `p` must be a live handle, `upper` and `lower` valid pointers.
 */
enum TracehomStatus tracehom_homological_dimension(const struct TracehomPresentation *p,
                                                   size_t *upper,
                                                   size_t *lower);

/**
 * Factors `w = a·u` with `a` in the submonoid generated by `sigma0` (letters
 * as in a word) and `u` in its basis. Both factors are returned in normal
 * form as new strings.
 *
 * # Safety
 * `w` must be a live handle, `sigma0` a NUL-terminated string and `a_out`,
 * `u_out` valid pointers.
 */
enum TracehomStatus tracehom_decompose(const struct TracehomTrace *w,
                                       const char *sigma0,
                                       char **a_out,
                                       char **u_out);

/**
 * Bounded exactness check over all degrees. Returns `Unverified` when some
 * kernel generator was not reached within `headroom`.
 *
 * # Safety
 * `p` must be a live handle.
 */
enum TracehomStatus tracehom_verify(const struct TracehomPresentation *p,
                                    size_t max_length,
                                    size_t headroom);

#endif  /* TRACEHOM_H */
