#ifndef GRAPHTOEP_H
#define GRAPHTOEP_H

/* Generated by cbindgen from the graphtoep-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible entry point.
typedef enum GtStatus {
  // The call succeeded and all out-parameters are set.
  GT_STATUS_OK = 0,
  // A verification suite ran to completion and reported failures.
  GT_STATUS_VERIFY_FAILED = 1,
  // The input was malformed or the parameters were out of range.
  GT_STATUS_USAGE = 2,
  // The input referred to unknown vertices/edges or unreadable data.
  GT_STATUS_DATA = 3,
  // A required pointer argument was null.
  GT_STATUS_NULL_POINTER = 4,
  // A string argument was not valid UTF-8.
  GT_STATUS_INVALID_UTF8 = 5,
} GtStatus;

// Opaque graph handle.
typedef struct GtGraph GtGraph;

// Opaque reduced-word handle.
typedef struct GtWord GtWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns the message for the most recent failure on this thread.
//
// The pointer stays valid until the next failing call on the same
// thread; do not free it.
const char *gt_last_error(void);

// Frees a string returned through a `char **` out-parameter.
//
// # Safety
// `s` must be null or a string returned by this library and not yet
// freed.
void gt_string_free(char *s);

// Builds the rooted `degree`-regular tree truncated at `depth`
// (degree 1 gives the line graph).
//
// # Safety
// `out` must be valid for a single write.
enum GtStatus gt_graph_tree(size_t degree, size_t depth, struct GtGraph **out);

// Loads a graph from its JSON description.
//
// # Safety
// `json` must be a NUL-terminated UTF-8 string; `out` must be valid
// for a single write.
enum GtStatus gt_graph_from_json(const char *json, struct GtGraph **out);

// Serializes a graph to its JSON description.
//
// # Safety
// `g` must be a live graph handle; `out` must be valid for a single
// write. The returned string is freed with [`gt_string_free`].
enum GtStatus gt_graph_to_json(const struct GtGraph *g, char **out);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live graph handle.
size_t gt_graph_vertex_count(const struct GtGraph *g);

// Number of unshadowed edges, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live graph handle.
size_t gt_graph_edge_count(const struct GtGraph *g);

// Releases a graph handle.
//
// # Safety
// `g` must be null or a live graph handle; it must not be used
// afterwards.
void gt_graph_free(struct GtGraph *g);

// Parses a word literal ("null", "v:LABEL", or steps like
// "1>2;2<1") and reduces it to canonical form.
//
// # Safety
// `g` must be a live graph handle, `literal` a NUL-terminated UTF-8
// string, `out` valid for a single write.
enum GtStatus gt_word_parse(const struct GtGraph *g, const char *literal, struct GtWord **out);

// Multiplies two words in the groupoid (mismatched endpoints give
// the absorbing word, not an error).
//
// # Safety
// `g`, `a`, `b` must be live handles; `out` valid for a single write.
enum GtStatus gt_word_product(const struct GtGraph *g,
                              const struct GtWord *a,
                              const struct GtWord *b,
                              struct GtWord **out);

// The shadow (formal adjoint) of a word.
//
// # Safety
// `w` must be a live handle; `out` valid for a single write.
enum GtStatus gt_word_shadow(const struct GtWord *w, struct GtWord **out);

// Number of steps in a word (vertex words and the absorbing word
// have length 0); 0 for a null handle.
//
// # Safety
// `w` must be null or a live word handle.
size_t gt_word_length(const struct GtWord *w);

// True when the word is the absorbing (zero) word; false for a null
// handle.
//
// # Safety
// `w` must be null or a live word handle.
bool gt_word_is_absorbing(const struct GtWord *w);

// Formats a word as its canonical literal.
//
// # Safety
// `g` and `w` must be live handles; `out` valid for a single write.
// The returned string is freed with [`gt_string_free`].
enum GtStatus gt_word_format(const struct GtGraph *g, const struct GtWord *w, char **out);

// Releases a word handle.
//
// # Safety
// `w` must be null or a live word handle; it must not be used
// afterwards.
void gt_word_free(struct GtWord *w);

// Writes the truncated matrix of a word's generator in coordinate
// text ("dim N nnz M" header, then "row col re im" lines), over the
// basis of words of length at most `maxlen`. The absorbing word
// gives the zero matrix.
//
// # Safety
// `g` and `w` must be live handles; `out` valid for a single write.
// The returned string is freed with [`gt_string_free`].
enum GtStatus gt_word_matrix_coord(const struct GtGraph *g,
                                   const struct GtWord *w,
                                   size_t maxlen,
                                   char **out);

// Rewrites a banded symbol literal (e.g. "t-1=3,t0=2,t1=1/2") as
// shift-power sums plus an exact constant; writes a JSON document
// with the echoed symbol, the combination, and the constant.
//
// # Safety
// `symbol` must be a NUL-terminated UTF-8 string; `out` valid for a
// single write. The returned string is freed with
// [`gt_string_free`].
enum GtStatus gt_toeplitz_rewrite_json(const char *symbol, char **out);

// Runs a named verification suite at its default sizes (the seed
// feeds the sampled suites) and writes its JSON report. Returns
// `Ok` when the suite passed and `VerifyFailed` when it ran but
// found failures; the report is written in both cases.
//
// # Safety
// `name` must be a NUL-terminated UTF-8 string; `out` valid for a
// single write. The returned string is freed with
// [`gt_string_free`].
enum GtStatus gt_verify_suite_json(const char *name, uint64_t seed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRAPHTOEP_H */
