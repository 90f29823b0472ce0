#ifndef HCPSAT_H
#define HCPSAT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HcpMethod {
  HCP_METHOD_BRUTE = 0,
  HCP_METHOD_DNF = 1,
  HCP_METHOD_LAZY = 2,
} HcpMethod;

/**
 * Result code of every fallible call.
 */
typedef enum HcpStatus {
  HCP_STATUS_OK = 0,
  HCP_STATUS_NULL_POINTER = 1,
  HCP_STATUS_INVALID_UTF8 = 2,
  HCP_STATUS_PARSE_ERROR = 3,
  HCP_STATUS_VALIDATION_ERROR = 4,
  HCP_STATUS_CAP_OVERFLOW = 5,
  HCP_STATUS_MODEL_PARSE_ERROR = 6,
  HCP_STATUS_MODEL_INVALID = 7,
  HCP_STATUS_INVALID_ARGUMENT = 8,
  HCP_STATUS_INTERNAL_ERROR = 9,
  HCP_STATUS_INDEX_OUT_OF_RANGE = 10,
  HCP_STATUS_BUFFER_TOO_SMALL = 11,
} HcpStatus;

/**
 * Encoding of a graph: the formula plus block counts and warnings.
 */
typedef struct HcpEncoding HcpEncoding;

/**
 * Parsed graph.
 */
typedef struct HcpGraph HcpGraph;

/**
 * Verdict, models and decoded cycles.
 */
typedef struct HcpSolveResult HcpSolveResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failed call on this thread, or NULL. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *hcp_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void hcp_string_free(char *s);

/**
 * Parses edge-list text into a new graph stored in `*out`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum HcpStatus hcp_graph_parse(const char *text, struct HcpGraph **out);

/**
 * # Safety
 * `g` must be NULL or a handle from [`hcp_graph_parse`] not yet freed.
 */
void hcp_graph_free(struct HcpGraph *g);

/**
 * Vertex count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t hcp_graph_vertex_count(const struct HcpGraph *g);

/**
 * Edge count, or 0 for NULL.
 *
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t hcp_graph_edge_count(const struct HcpGraph *g);

/**
 * Builds `F = F1 & F2`. `max_cycles == 0` selects the default cap.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
enum HcpStatus hcp_encode(const struct HcpGraph *g, size_t max_cycles, struct HcpEncoding **out);

/**
 * # Safety
 * `e` must be NULL or a handle from [`hcp_encode`] not yet freed.
 */
void hcp_encoding_free(struct HcpEncoding *e);

/**
 * Writes the F1 and F2 block counts and the number of assumption warnings.
 * Any output pointer may be NULL.
 *
 * # Safety
 * `e` must be a live encoding handle; non-NULL outputs must be writable.
 */
enum HcpStatus hcp_encoding_counts(const struct HcpEncoding *e,
                                   size_t *f1_blocks,
                                   size_t *f2_blocks,
                                   size_t *warnings);

/**
 * Human-readable formula text. Free with [`hcp_string_free`].
 *
 * # Safety
 * `e` must be NULL or a live encoding handle.
 */
char *hcp_encoding_to_expr(const struct HcpEncoding *e);

/**
 * DIMACS CNF of the encoding. Free with [`hcp_string_free`].
 *
 * # Safety
 * `e` must be NULL or a live encoding handle.
 */
char *hcp_encoding_to_dimacs(const struct HcpEncoding *e);

/**
 * Solves the encoding of `g` in-process.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
enum HcpStatus hcp_solve(const struct HcpGraph *g,
                         enum HcpMethod method,
                         bool find_all,
                         struct HcpSolveResult **out);

/**
 * Checks a DIMACS solver's output against the CNF export of `g`.
 *
 * # Safety
 * `g` must be a live graph handle, `solver_output` a NUL-terminated string
 * and `out` a valid pointer.
 */
enum HcpStatus hcp_solve_external(const struct HcpGraph *g,
                                  const char *solver_output,
                                  struct HcpSolveResult **out);

/**
 * # Safety
 * `r` must be NULL or a result handle not yet freed.
 */
void hcp_result_free(struct HcpSolveResult *r);

/**
 * # Safety
 * `r` must be NULL or a live result handle.
 */
bool hcp_result_satisfiable(const struct HcpSolveResult *r);

/**
 * # Safety
 * `r` must be NULL or a live result handle.
 */
size_t hcp_result_model_count(const struct HcpSolveResult *r);

/**
 * Copies the `index`-th decoded cycle (0-based vertex indices) into `buf`.
 * `*len` receives the cycle length even when the buffer is too small.
 *
 * # Safety
 * `r` must be a live result handle, `len` writable, and `buf` valid for
 * `cap` writes (it may be NULL when `cap` is 0).
 */
enum HcpStatus hcp_result_cycle(const struct HcpSolveResult *r,
                                size_t index,
                                size_t *buf,
                                size_t cap,
                                size_t *len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HCPSAT_H */
