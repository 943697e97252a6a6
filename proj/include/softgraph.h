/* softgraph - typed directed-multigraph engine for software and
 * software-process architecture.
 *
 * C API of the shared library. Handles are opaque; every fallible call
 * returns sg_status and leaves a human-readable message in the calling
 * thread's sg_last_error() slot on failure. Out-parameters are written only
 * on SG_OK. Objects returned through out-parameters are owned by the caller
 * and released with the matching *_free function.
 *
 * Graphs are single-writer: mutate a graph on one thread, then share it
 * read-only among any number of threads. All analysis entry points take
 * const handles and allocate fresh results.
 */
#ifndef SOFTGRAPH_H
#define SOFTGRAPH_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(SOFTGRAPH_BUILD)
#define SG_API __declspec(dllexport)
#else
#define SG_API __declspec(dllimport)
#endif
#else
#define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_ERROR_INVALID_ARGUMENT = 1, /* bad identifier, bad arity, null handle */
  SG_ERROR_UNKNOWN_TYPE = 2,     /* type not in the graph's dictionary */
  SG_ERROR_DUPLICATE = 3,        /* vertex id already taken */
  SG_ERROR_NOT_FOUND = 4,        /* unknown vertex, metric, ... */
  SG_ERROR_PARSE = 5,            /* malformed graph text or query */
  SG_ERROR_IO = 6,               /* file could not be read or written */
  SG_ERROR_INTERNAL = 7
} sg_status;

typedef struct sg_graph sg_graph;
typedef struct sg_string_list sg_string_list;
typedef struct sg_metric_result sg_metric_result;

SG_API const char* sg_version(void);

/* Message for the most recent failure on this thread; "" after a success. */
SG_API const char* sg_last_error(void);

/* ---- string results ---------------------------------------------------- */

SG_API void sg_string_free(char* text);
SG_API size_t sg_string_list_count(const sg_string_list* list);
SG_API const char* sg_string_list_get(const sg_string_list* list, size_t index);
SG_API void sg_string_list_free(sg_string_list* list);

/* ---- graph construction ------------------------------------------------ */

/* Empty graph over the built-in type dictionary. */
SG_API sg_status sg_graph_new(sg_graph** out);

/* Empty graph over a caller-supplied dictionary. Both lists must be
 * non-empty, duplicate-free, canonical ([a-z][a-z0-9_-]*). */
SG_API sg_status sg_graph_new_with_dictionary(const char* const* artifact_types,
                                              size_t artifact_count,
                                              const char* const* trace_types,
                                              size_t trace_count,
                                              sg_graph** out);

SG_API sg_status sg_graph_clone(const sg_graph* g, sg_graph** out);
SG_API void sg_graph_free(sg_graph* g);

SG_API sg_status sg_graph_add_vertex(sg_graph* g, const char* id,
                                     const char* const* artifact_types,
                                     size_t type_count);

/* Set semantics: adding an existing (src, trace, dst) triple is a no-op. */
SG_API sg_status sg_graph_add_edge(sg_graph* g, const char* src,
                                   const char* trace, const char* dst);

/* ---- inspection --------------------------------------------------------- */

SG_API size_t sg_graph_vertex_count(const sg_graph* g);
SG_API size_t sg_graph_edge_count(const sg_graph* g);
SG_API int sg_graph_has_vertex(const sg_graph* g, const char* id);
SG_API int sg_graph_equals(const sg_graph* a, const sg_graph* b);
SG_API sg_status sg_graph_artifact_types(const sg_graph* g, sg_string_list** out);
SG_API sg_status sg_graph_trace_types(const sg_graph* g, sg_string_list** out);

/* Distinct adjacent vertex ids. direction is "out", "in" or "both". A NULL
 * filter array means "no filter"; a non-NULL array with count 0 is an empty
 * filter that nothing passes. */
SG_API sg_status sg_graph_neighbors(const sg_graph* g, const char* id,
                                    const char* direction,
                                    const char* const* trace_filter,
                                    size_t trace_count,
                                    const char* const* artifact_filter,
                                    size_t artifact_count,
                                    sg_string_list** out);

/* Model-violation report: dangling endpoints, unlabeled vertices, labels or
 * traces outside the dictionary. Empty list = valid. */
SG_API sg_status sg_graph_validate(const sg_graph* g, sg_string_list** out);

/* ---- text interchange (.sg) and DOT ------------------------------------- */

SG_API sg_status sg_graph_parse_string(const char* text, sg_graph** out);
SG_API sg_status sg_graph_parse_file(const char* path, sg_graph** out);

/* Diagnostic reader: semantic problems (unknown types, dangling endpoints,
 * duplicate ids, unlabeled vertices) are returned as violation strings
 * instead of failing; syntax errors still fail. */
SG_API sg_status sg_graph_parse_string_lenient(const char* text, sg_graph** out_graph,
                                               sg_string_list** out_violations);

/* Canonical serialization; byte-deterministic for a given graph. Free the
 * returned text with sg_string_free. */
SG_API sg_status sg_graph_serialize(const sg_graph* g, char** out_text);
SG_API sg_status sg_graph_write_file(const sg_graph* g, const char* path);

/* DOT rendering. cluster_by may be NULL; when set, vertices carrying that
 * artifact type are grouped in a cluster. */
SG_API sg_status sg_graph_to_dot(const sg_graph* g, int label_edges,
                                 const char* cluster_by, char** out_text);

/* ---- views and maps ------------------------------------------------------ */

/* Restriction to the given artifact and trace types. Both arrays are
 * required (counts may be 0, which empties that dimension); every name must
 * be in g's dictionary. The result's dictionary is narrowed to the spec. */
SG_API sg_status sg_graph_view(const sg_graph* g,
                               const char* const* artifact_types,
                               size_t artifact_count,
                               const char* const* trace_types,
                               size_t trace_count, sg_graph** out);

SG_API sg_status sg_graph_view_stats(const sg_graph* g,
                                     const char* const* artifact_types,
                                     size_t artifact_count,
                                     const char* const* trace_types,
                                     size_t trace_count, size_t* out_vertices,
                                     size_t* out_edges);

/* Edge-wise trace renaming from[i] -> to[i]. Targets may be new types. */
SG_API sg_status sg_graph_relabel(const sg_graph* g, const char* const* from,
                                  const char* const* to, size_t pair_count,
                                  sg_graph** out);

/* Transitive composition to a fixpoint: whenever (u, first[i], v) and
 * (v, second[i], w) are edges, the edge (u, result[i], w) is added, until
 * nothing new appears. Original edges are kept. */
SG_API sg_status sg_graph_compose_closure(const sg_graph* g,
                                          const char* const* first,
                                          const char* const* second,
                                          const char* const* result,
                                          size_t rule_count, sg_graph** out);

/* contain/return collapse to "depend", depend chains close transitively,
 * restricted to class vertices and depend edges. */
SG_API sg_status sg_graph_class_diagram(const sg_graph* g, sg_graph** out);

/* ---- metrics -------------------------------------------------------------- */

/* Catalog: count_by_type, coupling, coverage, reachable_from. Arguments are
 * name/value string pairs; list values are comma-separated. See the metric
 * documentation for the argument names each metric takes. */
SG_API sg_status sg_metric_evaluate(const sg_graph* g, const char* name,
                                    const char* const* arg_names,
                                    const char* const* arg_values,
                                    size_t arg_count, sg_metric_result** out);

SG_API const char* sg_metric_result_name(const sg_metric_result* r);
SG_API double sg_metric_result_value(const sg_metric_result* r);
/* "graph", or the vertex id the metric was evaluated at. */
SG_API const char* sg_metric_result_scope(const sg_metric_result* r);
/* 1 when a coverage had zero targets and reports 1.0 vacuously. */
SG_API int sg_metric_result_vacuous(const sg_metric_result* r);
SG_API size_t sg_metric_result_detail_count(const sg_metric_result* r);
SG_API const char* sg_metric_result_detail(const sg_metric_result* r, size_t index);
SG_API void sg_metric_result_free(sg_metric_result* r);

/* Vertices reachable from the sources along directed paths whose every edge
 * passes the trace filter (NULL = any trace). Sources are included. */
SG_API sg_status sg_graph_reachable_from(const sg_graph* g,
                                         const char* const* sources,
                                         size_t source_count,
                                         const char* const* trace_filter,
                                         size_t trace_count,
                                         sg_string_list** out);

/* ---- queries --------------------------------------------------------------- */

/* Evaluates a query expression and returns the matching vertex ids, sorted.
 * Grammar:
 *   query  := orExpr
 *   orExpr := andExpr ( "or" andExpr )*
 *   andExpr:= unary ( "and" unary )*
 *   unary  := "not" unary | atom
 *   atom   := "type:" IDENT | "id:" GLOB | stepFn | "(" query ")"
 *   stepFn := ("out"|"in"|"both") "(" [ traceList "," ] query ")"
 *   traceList := IDENT ( "|" IDENT )*
 */
SG_API sg_status sg_query(const sg_graph* g, const char* query_text,
                          sg_string_list** out);

/* Parses a query and returns its canonical text form. */
SG_API sg_status sg_query_canonical(const char* query_text, char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SOFTGRAPH_H */
