#ifndef DDSEED_H
#define DDSEED_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum DdseedStatus {
  DDSEED_STATUS_OK = 0,
  DDSEED_STATUS_NULL_POINTER = 1,
  DDSEED_STATUS_INVALID_UTF8 = 2,
  DDSEED_STATUS_PARSE = 3,
  DDSEED_STATUS_EMPTY_GRAPH = 4,
  DDSEED_STATUS_NODE_OUT_OF_RANGE = 5,
  DDSEED_STATUS_INVALID_PARAMETER = 6,
  DDSEED_STATUS_CONVERGENCE = 7,
  DDSEED_STATUS_IO = 8,
  DDSEED_STATUS_BUFFER_TOO_SMALL = 9,
  DDSEED_STATUS_INTERNAL = 10,
} DdseedStatus;

/**
 * How `DdseedSelectParams::theta` is interpreted.
 */
typedef enum DdseedThetaMode {
  /**
   * Rounded network average degree; `theta` is ignored.
   */
  DDSEED_THETA_MODE_AUTO = 0,
  DDSEED_THETA_MODE_FIXED = 1,
  /**
   * The common-neighbour test never vetoes; `theta` is ignored.
   */
  DDSEED_THETA_MODE_UNBOUNDED = 2,
} DdseedThetaMode;

/**
 * Opaque graph handle.
 */
typedef struct DdseedGraph DdseedGraph;

/**
 * Opaque seed-set handle.
 */
typedef struct DdseedSeedSet DdseedSeedSet;

typedef struct DdseedSelectParams {
  size_t k;
  size_t d_td;
  /**
   * A `DdseedThetaMode` value.
   */
  uint32_t theta_mode;
  size_t theta;
  double beta;
  double p_pair;
  /**
   * Edge probability used by greedy and degree discount.
   */
  double ic_p;
  uint64_t master_seed;
  size_t greedy_replications;
} DdseedSelectParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library from the same thread.
 */
const char *ddseed_last_error(void);

/**
 * Library version, static storage.
 */
const char *ddseed_version(void);

/**
 * Loads a whitespace-separated edge list.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum DdseedStatus ddseed_graph_load(const char *path, bool directed, struct DdseedGraph **out);

/**
 * Builds a graph on nodes `0..node_count` from parallel endpoint arrays.
 *
 * # Safety
 * `sources` and `targets` must each hold `edge_count` elements; `out` must
 * be writable.
 */
enum DdseedStatus ddseed_graph_from_edges(size_t node_count,
                                          const size_t *sources,
                                          const size_t *targets,
                                          size_t edge_count,
                                          bool directed,
                                          struct DdseedGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void ddseed_graph_free(struct DdseedGraph *g);

/**
 * Node count, 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t ddseed_graph_node_count(const struct DdseedGraph *g);

/**
 * Edge count, 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t ddseed_graph_edge_count(const struct DdseedGraph *g);

/**
 * Label from the input file for dense node `node`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum DdseedStatus ddseed_graph_original_id(const struct DdseedGraph *g, size_t node, int64_t *out);

/**
 * Defaults: k 50, d_td 2, automatic theta, beta 0.01, p_pair 0.01,
 * ic_p 0.01, seed 0, 200 greedy replications.
 */
struct DdseedSelectParams ddseed_select_params_default(void);

/**
 * Selects seeds with `method` (for example "sidd", "dd", "degree").
 *
 * # Safety
 * `g` must be a live handle, `method` a NUL-terminated string, `params`
 * readable and `out` writable.
 */
enum DdseedStatus ddseed_select(const struct DdseedGraph *g,
                                const char *method,
                                const struct DdseedSelectParams *params,
                                struct DdseedSeedSet **out);

/**
 * # Safety
 * `s` must be null or a live seed-set handle.
 */
void ddseed_seedset_free(struct DdseedSeedSet *s);

/**
 * Number of seeds, 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live handle.
 */
size_t ddseed_seedset_len(const struct DdseedSeedSet *s);

/**
 * Copies dense seed ids in selection order into `buf`.
 *
 * # Safety
 * `s` must be a live handle and `buf` writable for `capacity` elements.
 */
enum DdseedStatus ddseed_seedset_copy(const struct DdseedSeedSet *s, size_t *buf, size_t capacity);

/**
 * Monte Carlo independent-cascade spread of `seeds`.
 *
 * # Safety
 * `g` must be a live handle, `seeds` readable for `seed_count` elements and
 * the outputs writable.
 */
enum DdseedStatus ddseed_estimate_spread(const struct DdseedGraph *g,
                                         const size_t *seeds,
                                         size_t seed_count,
                                         double p,
                                         size_t replications,
                                         uint64_t master_seed,
                                         double *mean,
                                         double *stddev);

/**
 * Writes one score per node for `measure` (for example "pagerank").
 *
 * # Safety
 * `g` must be a live handle, `measure` a NUL-terminated string and `buf`
 * writable for `capacity` elements.
 */
enum DdseedStatus ddseed_centrality(const struct DdseedGraph *g,
                                    const char *measure,
                                    double *buf,
                                    size_t capacity);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DDSEED_H */
