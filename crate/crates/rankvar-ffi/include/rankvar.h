#ifndef RANKVAR_H
#define RANKVAR_H

/* This file is generated by cbindgen from rankvar-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum {
  /**
   * Success.
   */
  RV_OK = 0,
  /**
   * A required pointer argument was null.
   */
  RV_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  RV_INVALID_UTF8 = 2,
  /**
   * The input text could not be parsed.
   */
  RV_PARSE_ERROR = 3,
  /**
   * The input was well-formed but violates a domain invariant
   * (invalid rank set, empty Richardson variety, capability guard).
   */
  RV_DOMAIN_ERROR = 4,
} RvStatus;

/**
 * Opaque handle to a validated rank set.
 */
typedef struct RvRankSet RvRankSet;

/**
 * Opaque handle to a Richardson variety datum.
 */
typedef struct RvRichardson RvRichardson;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread; borrowed,
 * valid until the next failing call on the same thread.
 */
const char *rv_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *rv_version(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must have been returned by a `rankvar` function and not freed before.
 */
void rv_string_free(char *s);

/**
 * Parses a rank set from the text form `n=8 k=5 : 1-7 2-6 ...`, JSON, or
 * table notation `n=4 (2 3,1)`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` non-null.
 */
RvStatus rv_rank_set_parse(const char *text, RvRankSet **out);

/**
 * # Safety
 * `ptr` must come from this library and not be freed twice.
 */
void rv_rank_set_free(RvRankSet *ptr);

/**
 * Dimension of the rank variety.
 *
 * # Safety
 * `ptr` and `out` must be valid.
 */
RvStatus rv_rank_set_dimension(const RvRankSet *ptr, uintptr_t *out);

/**
 * Renders the standard text form.
 *
 * # Safety
 * `ptr` and `out` must be valid; free the string with `rv_string_free`.
 */
RvStatus rv_rank_set_to_text(const RvRankSet *ptr, char **out);

/**
 * Renders the JSON form `{"n":...,"intervals":[[l,r],...]}`.
 *
 * # Safety
 * As for `rv_rank_set_to_text`.
 */
RvStatus rv_rank_set_to_json(const RvRankSet *ptr, char **out);

/**
 * Renders the compact table notation, e.g. `(2 3,1)`.
 *
 * # Safety
 * As for `rv_rank_set_to_text`.
 */
RvStatus rv_rank_set_to_paper(const RvRankSet *ptr, char **out);

/**
 * Whether the rank variety is smooth (block-product classification).
 *
 * # Safety
 * `ptr` and `out` must be valid.
 */
RvStatus rv_rank_set_is_smooth(const RvRankSet *ptr, bool *out);

/**
 * Singular locus report as JSON.
 *
 * # Safety
 * As for `rv_rank_set_to_text`.
 */
RvStatus rv_rank_set_singular_locus_json(const RvRankSet *ptr, char **out);

/**
 * Minimal Richardson variety of a rank set.
 *
 * # Safety
 * `ptr` and `out` must be valid; free the handle with `rv_richardson_free`.
 */
RvStatus rv_rank_set_rich(const RvRankSet *ptr, RvRichardson **out);

/**
 * Builds a Richardson datum from a shape `2,4;7` and two permutations in
 * the block form `4 6 | 2 7`.
 *
 * # Safety
 * All strings NUL-terminated, `out` non-null.
 */
RvStatus rv_richardson_parse(const char *shape, const char *u, const char *v, RvRichardson **out);

/**
 * # Safety
 * `ptr` must come from this library and not be freed twice.
 */
void rv_richardson_free(RvRichardson *ptr);

/**
 * JSON form `{"shape":{"n":...,"ks":[...]},"u":[...],"v":[...]}`.
 *
 * # Safety
 * As for `rv_rank_set_to_text`.
 */
RvStatus rv_richardson_to_json(const RvRichardson *ptr, char **out);

/**
 * Rank set of a Richardson variety.
 *
 * # Safety
 * `ptr` and `out` must be valid; free the result with `rv_rank_set_free`.
 */
RvStatus rv_richardson_rank_set(const RvRichardson *ptr, RvRankSet **out);

/**
 * Singular locus of a Richardson variety as JSON.
 *
 * # Safety
 * As for `rv_rank_set_to_text`.
 */
RvStatus rv_richardson_singular_locus_json(const RvRichardson *ptr, char **out);

/**
 * The polynomial `g[k,n]` in canonical text form.
 *
 * # Safety
 * `out` must be non-null; free the string with `rv_string_free`.
 */
RvStatus rv_gpoly(uintptr_t k, uintptr_t n, char **out);

/**
 * Whether `g[k,n] * q^{C(n-k+1,2)} = S[n+1,n-k+1]`.
 *
 * # Safety
 * `out` must be non-null.
 */
RvStatus rv_stirling_identity(uintptr_t k, uintptr_t n, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RANKVAR_H */
