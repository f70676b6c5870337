/* C interface to the fkcd community-detection library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return FKCD_OK on success; on failure fkcd_last_error() holds a
 * human-readable message for the calling thread. */
#ifndef FKCD_H
#define FKCD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fkcd_status {
    FKCD_OK = 0,
    FKCD_ERROR_INVALID_ARGUMENT = 1,
    FKCD_ERROR_IO = 2,
    FKCD_ERROR_PARSE = 3,
    FKCD_ERROR_EMPTY_GRAPH = 4,
    FKCD_ERROR_NODE_SET_MISMATCH = 5,
    FKCD_ERROR_INTERNAL = 6
} fkcd_status;

typedef enum fkcd_algorithm {
    FKCD_ALGO_FKCD = 0,   /* centrality + proximity weights, then local moves */
    FKCD_ALGO_LOUVAIN = 1 /* unit-weight baseline */
} fkcd_algorithm;

typedef enum fkcd_weight_transform {
    FKCD_WEIGHT_DIRECT = 0, /* edge weight = proximity + 1/|E| */
    FKCD_WEIGHT_INVERSE = 1 /* edge weight = 1 / (proximity + 1/|E|) */
} fkcd_weight_transform;

typedef struct fkcd_graph fkcd_graph;
typedef struct fkcd_centrality fkcd_centrality;
typedef struct fkcd_result fkcd_result;

const char* fkcd_status_name(fkcd_status status);

/* Message of the most recent failure on the calling thread; empty string if
 * none. The pointer stays valid until the next failing call on this thread. */
const char* fkcd_last_error(void);

/* ---- graph ingestion and queries ---- */

/* SNAP-style edge list: '#' comments, two whitespace-separated labels per
 * line. Self-loops and duplicate edges are dropped and counted. */
fkcd_status fkcd_graph_load_path(const char* path, fkcd_graph** out);
fkcd_status fkcd_graph_load_buffer(const char* data, size_t size,
                                   fkcd_graph** out);
void fkcd_graph_free(fkcd_graph* graph);

uint32_t fkcd_graph_node_count(const fkcd_graph* graph);
uint32_t fkcd_graph_edge_count(const fkcd_graph* graph);
uint64_t fkcd_graph_dropped_records(const fkcd_graph* graph);
fkcd_status fkcd_graph_degree(const fkcd_graph* graph, uint32_t node,
                              uint32_t* out);
fkcd_status fkcd_graph_edge_endpoints(const fkcd_graph* graph, uint32_t edge,
                                      uint32_t* u, uint32_t* v);
/* Original input label of a node; pointer valid for the graph's lifetime. */
fkcd_status fkcd_graph_node_label(const fkcd_graph* graph, uint32_t node,
                                  const char** out);

/* ---- edge centrality ---- */

/* Bounded-walk centrality estimation. threads <= 1 is the sequential
 * reference mode; higher values trade sequential reproducibility for speed
 * (output is reproducible per (seed, threads) pair). */
fkcd_status fkcd_centrality_compute(const fkcd_graph* graph, uint32_t kappa,
                                    uint64_t seed, uint32_t threads,
                                    fkcd_centrality** out);
void fkcd_centrality_free(fkcd_centrality* centrality);
fkcd_status fkcd_centrality_edge_weight(const fkcd_centrality* centrality,
                                        uint32_t edge, double* out);
/* "u v weight" lines, sorted by weight descending. */
fkcd_status fkcd_centrality_write_path(const fkcd_centrality* centrality,
                                       const fkcd_graph* graph,
                                       const char* path);

/* ---- community detection ---- */

typedef struct fkcd_params {
    fkcd_algorithm algorithm;
    uint32_t kappa;   /* walk-length bound, >= 1 */
    double epsilon;   /* minimum per-level modularity gain, > 0 */
    uint64_t seed;
    uint32_t threads; /* walk workers; <= 1 sequential */
    fkcd_weight_transform weight_transform;
} fkcd_params;

/* Defaults: fkcd algorithm, kappa 20, epsilon 1e-6, seed 42, sequential,
 * direct weight transform. */
void fkcd_params_init(fkcd_params* params);

fkcd_status fkcd_run(const fkcd_graph* graph, const fkcd_params* params,
                     fkcd_result** out);
void fkcd_result_free(fkcd_result* result);

uint32_t fkcd_result_level_count(const fkcd_result* result);
fkcd_status fkcd_result_level(const fkcd_result* result, uint32_t level,
                              uint32_t* node_count, uint32_t* edge_count,
                              double* q);
double fkcd_result_modularity(const fkcd_result* result);
double fkcd_result_coverage(const fkcd_result* result);
uint32_t fkcd_result_community_count(const fkcd_result* result);
fkcd_status fkcd_result_community_of(const fkcd_result* result, uint32_t node,
                                     uint32_t* out);

/* "label community" lines, one per node. */
fkcd_status fkcd_result_write_partition_path(const fkcd_result* result,
                                             const fkcd_graph* graph,
                                             const char* path);
/* "level node_count edge_count Q" lines. */
fkcd_status fkcd_result_write_summary_path(const fkcd_result* result,
                                           const char* path);

/* ---- evaluation ---- */

/* NMI of the result against a "node_label community_label" ground-truth file
 * covering exactly the graph's node set. */
fkcd_status fkcd_result_nmi_path(const fkcd_result* result,
                                 const fkcd_graph* graph,
                                 const char* ground_truth_path, double* out);

#ifdef __cplusplus
}
#endif

#endif /* FKCD_H */
