#ifndef GRAPH_MEASURE_H
#define GRAPH_MEASURE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GmSpaceKind {
  GM_SPACE_KIND_ENERGY = 0,
  GM_SPACE_KIND_DIAGRAM = 1,
  GM_SPACE_KIND_GROUPOID = 2,
  GM_SPACE_KIND_REDUCED_DIAGRAM = 3,
} GmSpaceKind;

typedef enum GmPolicy {
  GM_POLICY_EDGE_INJECTIVE = 0,
  GM_POLICY_RUN_COLLAPSE = 1,
} GmPolicy;

/**
 * Result of every call.
 */
typedef enum GmStatus {
  GM_STATUS_OK = 0,
  GM_STATUS_NULL_ARGUMENT = 1,
  GM_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed graph file.
   */
  GM_STATUS_PARSE_ERROR = 3,
  /**
   * Malformed word, set or function literal.
   */
  GM_STATUS_LITERAL_ERROR = 4,
  /**
   * Well-formed input outside the mathematics, e.g. a word outside the
   * universe or the total of an infinite space.
   */
  GM_STATUS_DOMAIN_ERROR = 5,
  /**
   * An infinite universe exceeded the enumeration limit; lower max_len.
   */
  GM_STATUS_ENUMERATION_LIMIT = 6,
  GM_STATUS_PANIC = 7,
} GmStatus;

/**
 * A parsed graph.
 */
typedef struct GmGraph GmGraph;

/**
 * Which measure space to work in. `max_len` 0 means 2|E|.
 */
typedef struct GmSpaceConfig {
  enum GmSpaceKind kind;
  enum GmPolicy policy;
  size_t max_len;
} GmSpaceConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The default setting of the graph integral: reduced diagrams,
 * edge-injective diagram map.
 */
struct GmSpaceConfig gm_space_default(void);

/**
 * Parses a graph file's contents into `*out`.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is valid for a pointer write.
 */
enum GmStatus gm_graph_parse(const char *text, struct GmGraph **out);

/**
 * # Safety
 * `graph` is NULL or a handle from [`gm_graph_parse`] not yet freed.
 */
void gm_graph_free(struct GmGraph *graph);

/**
 * Number of vertices, or 0 for NULL.
 *
 * # Safety
 * `graph` is NULL or a live handle.
 */
size_t gm_graph_vertex_count(const struct GmGraph *graph);

/**
 * Number of edges of the base graph, or 0 for NULL.
 *
 * # Safety
 * `graph` is NULL or a live handle.
 */
size_t gm_graph_edge_count(const struct GmGraph *graph);

/**
 * Measure of the set literal `set` (e.g. `{e1,e2^-1}`).
 *
 * # Safety
 * `graph` is a live handle, `set` a NUL-terminated string, `out` valid for
 * a pointer write.
 */
enum GmStatus gm_measure(const struct GmGraph *graph,
                         struct GmSpaceConfig config,
                         const char *set,
                         char **out);

/**
 * Measure of the whole universe; a domain error for infinite spaces.
 *
 * # Safety
 * `graph` is a live handle; `out` is valid for a pointer write.
 */
enum GmStatus gm_total(const struct GmGraph *graph, struct GmSpaceConfig config, char **out);

/**
 * Integral of a simple-function literal such as `3*{e1} + -2*{v1}`.
 * Complex results are written as `(re,im)`.
 *
 * # Safety
 * `graph` is a live handle, `function` a NUL-terminated string, `out`
 * valid for a pointer write.
 */
enum GmStatus gm_integrate(const struct GmGraph *graph,
                           struct GmSpaceConfig config,
                           const char *function,
                           char **out);

/**
 * ∫ g_n for n ≠ 0.
 *
 * # Safety
 * `graph` is a live handle; `out` is valid for a pointer write.
 */
enum GmStatus gm_monomial_integral(const struct GmGraph *graph,
                                   struct GmSpaceConfig config,
                                   int64_t n,
                                   char **out);

/**
 * Measure-equivalence verdict as JSON:
 * `{verdict, witness?, distinguisher?, checked_sets}`.
 *
 * # Safety
 * `left` and `right` are live handles; `out` is valid for a pointer write.
 */
enum GmStatus gm_compare_json(const struct GmGraph *left,
                              const struct GmGraph *right,
                              size_t max_len,
                              uint64_t seed,
                              char **out);

/**
 * The measure fingerprint as JSON.
 *
 * # Safety
 * `graph` is a live handle; `out` is valid for a pointer write.
 */
enum GmStatus gm_fingerprint_json(const struct GmGraph *graph, char **out);

/**
 * Message for the last failed call on this thread, or NULL. Free with
 * [`gm_string_free`].
 */
char *gm_last_error(void);

/**
 * # Safety
 * `s` is NULL or a string returned by this library and not yet freed.
 */
void gm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRAPH_MEASURE_H */
