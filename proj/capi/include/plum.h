#ifndef PLUM_H
#define PLUM_H

/*
 * C interface to the plum library: generation of truncations of the
 * universal planar host graph, reductions, ear decompositions, minor
 * embeddings and certificate checking.
 *
 * Conventions:
 *   - every function returns a plum_status; PLUM_OK means success
 *   - output strings are heap-allocated JSON/DOT text; release them
 *     with plum_string_free
 *   - opaque handles are released with their matching _free function
 *   - on failure, plum_last_error() returns a thread-local message
 */

#include <stddef.h>

#if defined(_WIN32)
#define PLUM_API __declspec(dllexport)
#else
#define PLUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plum_status {
    PLUM_OK = 0,
    PLUM_ERR_PARSE = 1,
    PLUM_ERR_INVALID_ARGUMENT = 2,
    PLUM_ERR_NONPLANAR = 3,
    PLUM_ERR_INVALID_ROTATION = 4,
    PLUM_ERR_DISCONNECTED = 5,
    PLUM_ERR_MISSING_EDGE = 6,
    PLUM_ERR_NOT_TWO_CONNECTED = 7,
    PLUM_ERR_TOO_LARGE = 8,
    PLUM_ERR_ALREADY_EXPANDED = 9,
    PLUM_ERR_NOT_EXPANDED = 10,
    PLUM_ERR_EQUAL_ENDS = 11,
    PLUM_ERR_DEPTH_CAP = 12,
    PLUM_ERR_ORDER_VIOLATION = 13,
    PLUM_ERR_EAR_FACE = 14,
    PLUM_ERR_DANGLING_ADDRESS = 15,
    PLUM_ERR_CAP_EXCEEDED = 16,
    PLUM_ERR_INTERNAL = 17
} plum_status;

typedef struct plum_graph plum_graph;       /* embedded plane graph */
typedef struct plum_universe plum_universe; /* lazily materialized host */

PLUM_API const char* plum_version(void);
PLUM_API const char* plum_last_error(void);
PLUM_API void plum_string_free(char* s);

/* ---- graphs ------------------------------------------------------- */

/* Parses {"vertices":[...],"edges":[[u,v]...],"rotation":{...}?} and
 * embeds the graph (computing a planar rotation when none is given). */
PLUM_API plum_status plum_graph_from_json(const char* json, plum_graph** out);
PLUM_API plum_status plum_graph_to_json(const plum_graph* g, char** out);
PLUM_API plum_status plum_graph_to_dot(const plum_graph* g, char** out);
/* {"vertices":n,"edges":m,"faces":f,"planar_rotation":true,
 *  "two_connected":b,"subcubic":b,"connected":b} */
PLUM_API plum_status plum_graph_info_json(const plum_graph* g, char** out);
PLUM_API void plum_graph_free(plum_graph* g);

/* ---- universal truncations ---------------------------------------- */

/* Closed-form counts; out = {V, E, F}. */
PLUM_API plum_status plum_census(int level, unsigned long long out[3]);

/* Full level-n truncation as JSON (vertices, edges, rotation,
 * addresses, faces). vertex_cap = 0 selects the default (1e7). */
PLUM_API plum_status plum_generate_json(int level, unsigned long long vertex_cap, char** out);

PLUM_API plum_status plum_universe_new(unsigned long long vertex_cap, plum_universe** out);
PLUM_API void plum_universe_free(plum_universe* u);

/* Expands one face ("A", "B.4.0", ...); returns the delta as JSON:
 * {"center":addr,"vertices":[addr...],"edges":[[addr,addr]...],
 *  "children":[face...]}. */
PLUM_API plum_status plum_universe_expand(plum_universe* u, const char* face, char** out);

/* Diameter of an expanded face between two boundary indices, as a JSON
 * list of addresses. */
PLUM_API plum_status plum_universe_diameter(plum_universe* u, const char* face, int end_i,
                                            int end_j, char** out);

/* Slice subgraph: face region at `depth`, optionally cut by the
 * diameter (diam_i, diam_j) keeping `side` (0/1). Output is graph JSON
 * plus an "addresses" block. Pass has_diameter = 0 to take the whole
 * face. */
PLUM_API plum_status plum_universe_slice(plum_universe* u, const char* face, int has_diameter,
                                         int diam_i, int diam_j, int side, int depth,
                                         char** out);

/* Closed face piece at `depth`; strip removes the face's own boundary. */
PLUM_API plum_status plum_universe_piece(plum_universe* u, const char* face, int depth,
                                         int strip, char** out);

/* ---- reductions and decompositions -------------------------------- */

/* Sub-cubic 2-connected supergraph-with-witness of an arbitrary planar
 * input: out_graph is graph JSON, out_witness the blowup/edge_map/added
 * witness JSON. */
PLUM_API plum_status plum_reduce(const plum_graph* g, char** out_graph, char** out_witness);

/* Ear decomposition JSON {"base_cycle":[...],"ears":[{"path":[...],
 * "face":[...]}...]}; use_seed != 0 shuffles the edge order by seed. */
PLUM_API plum_status plum_ears(const plum_graph* g, int use_seed, unsigned long long seed,
                               char** out);

/* ---- embedding and verification ----------------------------------- */

/* Minor model of a sub-cubic 2-connected input inside the universal
 * host; model JSON {"input":…,"host_level_map":…,"branch_sets":…,
 * "branch_paths":…}. max_extra_depth < 0 selects the default (12). */
PLUM_API plum_status plum_embed(const plum_graph* g, int max_extra_depth,
                                unsigned long long vertex_cap, char** out_model);

/* Same for an arbitrary finite planar input (reduction composed in). */
PLUM_API plum_status plum_embed_any(const plum_graph* g, int max_extra_depth,
                                    unsigned long long vertex_cap, char** out_model);

/* Checks a model against its embedded "input" block (or a supplied
 * input graph when input_json != NULL). Writes the report JSON and sets
 * *passed. A model that fails a condition still returns PLUM_OK. */
PLUM_API plum_status plum_check_model(const char* model_json, const char* input_json,
                                      char** out_report, int* passed);

/* Exhaustive minor search on tiny graphs. Report JSON:
 * {"is_minor":b,"branch_sets":…,"edge_links":…}. */
PLUM_API plum_status plum_brute_force_minor(const plum_graph* host, const plum_graph* pattern,
                                            int host_cap, int pattern_cap, char** out);

/* Seeded connectivity probe of the canonical level-n slice. */
PLUM_API plum_status plum_probe_slice(int level, int depth, int trials,
                                      unsigned long long seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PLUM_H */
