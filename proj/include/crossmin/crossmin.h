/* crossmin - crossing minimization heuristics over planarizations.
 *
 * C API of the shared library. All functions are thread-compatible: distinct
 * handles may be used from distinct threads, one handle must not be shared
 * mutably. Errors are reported as status codes; cm_last_error() returns a
 * thread-local message for the most recent failure on the calling thread.
 */

#ifndef CROSSMIN_H
#define CROSSMIN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t cm_status;

enum {
    CM_OK = 0,
    CM_ERR_INVALID_ARGUMENT = 1,
    CM_ERR_STRUCTURE = 2,
    CM_ERR_PARSE = 3,
    CM_ERR_IO = 4,
    CM_ERR_UNSUPPORTED = 5,
    CM_ERR_INTERNAL = 6,
};

const char* cm_version(void);

/* Message for the last failing call on this thread ("" if none). */
const char* cm_last_error(void);

/* ------------------------------------------------------------------ graphs */

/* Opaque undirected multigraph with stable vertex/edge ids. */
typedef struct cm_graph cm_graph;

cm_graph* cm_graph_new(void);
void cm_graph_free(cm_graph* g);

/* Returns the new vertex id, or -1 on error. */
int32_t cm_graph_add_vertex(cm_graph* g);
/* Returns the new edge id, or -1 on error (unknown endpoint). */
int32_t cm_graph_add_edge(cm_graph* g, int32_t u, int32_t v);
cm_status cm_graph_delete_edge(cm_graph* g, int32_t e);
/* Deletes the vertex and all incident edges. */
cm_status cm_graph_delete_vertex(cm_graph* g, int32_t v);

int32_t cm_graph_vertex_count(const cm_graph* g);
int32_t cm_graph_edge_count(const cm_graph* g);
/* Degree of v (self-loops count twice), or -1 on error. */
int32_t cm_graph_degree(const cm_graph* g, int32_t v);

cm_status cm_graph_is_planar(const cm_graph* g, int32_t* out_planar);

/* Builds a generator instance from a spec string:
 *   complete:N  complete_bipartite:AxB  cycle_product:IxJ  petersen:MxK
 *   random_regular:NxDxSEED   (aliases cbip, cxc, rr)
 * Anything else is read as a path to a graph file. NULL on error. */
cm_graph* cm_graph_generate(const char* spec);

/* Text format: "n m" header, then one "u v" line per edge, 0-based,
 * '#' comments allowed. */
cm_graph* cm_graph_read(const char* path);
cm_status cm_graph_write(const cm_graph* g, const char* path);

/* -------------------------------------------------------------- heuristics */

typedef struct {
    int64_t crossings;
    int64_t time_us;
    int64_t alpha_removed;  /* non-simple crossings removed: adjacent-edge kind */
    int64_t beta_removed;   /* non-simple crossings removed: repeated-pair kind */
    int64_t sweeps;         /* postprocessing / star-reinsertion sweeps executed */
} cm_run_stats;

/* Runs one heuristic on a connected graph. Config strings:
 *   <base>[-<variant>][-<post>][-srm][-keepns]
 * bases: fix (with none|all|inc), ccm, mim (with random|high_G|low_G|
 * high_F|low_F|both). Examples: "fix-all", "ccm-srm", "mim-both-srm".
 * The seed selects the insertion permutation; identical inputs and seeds
 * give identical results. */
cm_status cm_run_heuristic(const cm_graph* g, const char* config, uint64_t seed,
                           cm_run_stats* out);

/* Full experiment matrix: every (instance, config, permutation 0..k-1)
 * combination, one shared initialization per instance, CSV written to
 * out_csv with header
 *   instance,config,seed,crossings,time_us,alpha_removed,beta_removed,sweeps
 * jobs == 0 uses the CROSSMIN_JOBS environment variable, falling back to the
 * hardware thread count. Per-run failures do not abort the matrix; the first
 * failure message is reported through cm_last_error() with status CM_OK
 * runs remaining in the file. Returns CM_ERR_* only when nothing ran. */
cm_status cm_run_matrix(const char* const* instance_specs, int32_t n_instances,
                        const char* const* configs, int32_t n_configs,
                        int32_t permutations, uint64_t master_seed, int32_t jobs,
                        const char* out_csv);

/* Groups a results CSV by (instance, config): permutation count, best (min)
 * crossings, mean crossings and relative improvement best/mean. Optionally
 * writes the per-instance BEST over all configs and seeds. */
cm_status cm_aggregate_csv(const char* in_csv, const char* out_csv,
                           const char* best_csv_or_null);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CROSSMIN_H */
