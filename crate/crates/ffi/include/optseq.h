#ifndef OPTSEQ_H
#define OPTSEQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OptseqStatus {
  OPTSEQ_STATUS_OK = 0,
  OPTSEQ_STATUS_NULL_POINTER = 1,
  /**
   * Malformed text or non-UTF-8 input.
   */
  OPTSEQ_STATUS_PARSE = 2,
  /**
   * Well-formed input outside the domain of the operation.
   */
  OPTSEQ_STATUS_INVALID_ARGUMENT = 3,
  /**
   * A mathematical precondition does not hold.
   */
  OPTSEQ_STATUS_PRECONDITION = 4,
  OPTSEQ_STATUS_BUDGET_EXCEEDED = 5,
  /**
   * Output buffer too small; the required length is still reported.
   */
  OPTSEQ_STATUS_BUFFER_TOO_SMALL = 6,
  OPTSEQ_STATUS_PANIC = 7,
} OptseqStatus;

typedef enum OptseqAsdsKind {
  OPTSEQ_ASDS_KIND_NONE = 0,
  OPTSEQ_ASDS_KIND_ASDS = 1,
  OPTSEQ_ASDS_KIND_SDS = 2,
} OptseqAsdsKind;

/**
 * A cocycle over Z2 x Zm.
 */
typedef struct OptseqCocycle OptseqCocycle;

/**
 * The outcome of an OQS search.
 */
typedef struct OptseqSearchResults OptseqSearchResults;

/**
 * A quaternary sequence.
 */
typedef struct OptseqSequence OptseqSequence;

/**
 * Classification of a subset pair; parameters are zero when `kind` is `None`.
 */
typedef struct OptseqAsdsParams {
  enum OptseqAsdsKind kind;
  size_t m;
  size_t k1;
  size_t k2;
  size_t mu;
  size_t t;
  /**
   * The multiset B − D is closed under negation.
   */
  bool symmetric;
} OptseqAsdsParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *optseq_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *optseq_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void optseq_string_free(char *s);

/**
 * Parses a quaternary sequence over the symbols `+ i - j`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum OptseqStatus optseq_sequence_parse(const char *text, struct OptseqSequence **out);

/**
 * Builds a sequence from exponents e_k, meaning f(k) = i^{e_k}; each must be < 4.
 *
 * # Safety
 * `exponents` must point to `len` readable bytes and `out` be valid.
 */
enum OptseqStatus optseq_sequence_from_exponents(const uint8_t *exponents,
                                                 size_t len,
                                                 struct OptseqSequence **out);

/**
 * # Safety
 * `seq` must be NULL or a live handle from this library.
 */
void optseq_sequence_free(struct OptseqSequence *seq);

/**
 * Length of the sequence, or 0 for NULL.
 *
 * # Safety
 * `seq` must be NULL or a live handle.
 */
size_t optseq_sequence_len(const struct OptseqSequence *seq);

/**
 * Renders the sequence as text; free the result with [`optseq_string_free`].
 *
 * # Safety
 * `seq` must be a live handle and `out` valid.
 */
enum OptseqStatus optseq_sequence_to_string(const struct OptseqSequence *seq, char **out);

/**
 * Periodic autocorrelation R(w), w = 0..len−1, as real and imaginary parts.
 * Writes `len` entries to each buffer when `capacity` allows; `written`
 * always receives the required length.
 *
 * # Safety
 * `re` and `im` must hold `capacity` entries; `seq` and `written` valid.
 */
enum OptseqStatus optseq_autocorrelation(const struct OptseqSequence *seq,
                                         int64_t *re,
                                         int64_t *im,
                                         size_t capacity,
                                         size_t *written);

/**
 * Whether the sequence is an optimal quaternary sequence (odd length only).
 *
 * # Safety
 * `seq` must be a live handle and `out` valid.
 */
enum OptseqStatus optseq_is_oqs(const struct OptseqSequence *seq, bool *out);

/**
 * Maps a quaternary sequence of odd length m ≥ 3 to its binary sequence of
 * length 2m, written as `+`/`-` text.
 *
 * # Safety
 * `seq` must be a live handle and `out` valid.
 */
enum OptseqStatus optseq_oqs_to_gobs(const struct OptseqSequence *seq, char **out);

/**
 * Inverse of [`optseq_oqs_to_gobs`].
 *
 * # Safety
 * `text` must be NUL-terminated and `out` valid.
 */
enum OptseqStatus optseq_gobs_to_oqs(const char *text, struct OptseqSequence **out);

/**
 * Exhaustive OQS search at odd length m ≤ 13. `jobs` = 0 uses every core.
 *
 * # Safety
 * `out` must be valid.
 */
enum OptseqStatus optseq_search_oqs(size_t m,
                                    bool canonical,
                                    size_t jobs,
                                    struct OptseqSearchResults **out);

/**
 * # Safety
 * `results` must be NULL or a live handle.
 */
size_t optseq_search_results_len(const struct OptseqSearchResults *results);

/**
 * Copies result `index` into a new sequence handle.
 *
 * # Safety
 * `results` must be a live handle and `out` valid.
 */
enum OptseqStatus optseq_search_results_get(const struct OptseqSearchResults *results,
                                            size_t index,
                                            struct OptseqSequence **out);

/**
 * # Safety
 * `results` must be NULL or a live handle.
 */
void optseq_search_results_free(struct OptseqSearchResults *results);

/**
 * The cocycle λ^{lambda} · ∏ ∂_i over Z2 x Zm for the listed indices 2 ≤ i ≤ 2m−1.
 *
 * # Safety
 * `deltas` must point to `len` entries and `out` be valid.
 */
enum OptseqStatus optseq_cocycle_new(size_t m,
                                     bool lambda,
                                     const size_t *deltas,
                                     size_t len,
                                     struct OptseqCocycle **out);

/**
 * # Safety
 * `c` must be NULL or a live handle.
 */
void optseq_cocycle_free(struct OptseqCocycle *c);

/**
 * # Safety
 * `c` must be a live handle and `out` valid.
 */
enum OptseqStatus optseq_cocycle_is_quasi_orthogonal(const struct OptseqCocycle *c, bool *out);

/**
 * Sum of |row sum| over the non-identity rows of the cocyclic matrix.
 *
 * # Safety
 * `c` must be a live handle and `out` valid.
 */
enum OptseqStatus optseq_cocycle_row_excess(const struct OptseqCocycle *c, int64_t *out);

/**
 * Classifies (B, D) ⊆ Z_m; elements are reduced mod m and must be distinct.
 *
 * # Safety
 * `b` and `d` must point to `b_len` and `d_len` entries; `out` valid.
 */
enum OptseqStatus optseq_asds_classify(size_t m,
                                       const size_t *b,
                                       size_t b_len,
                                       const size_t *d,
                                       size_t d_len,
                                       struct OptseqAsdsParams *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OPTSEQ_H */
