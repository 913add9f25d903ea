#ifndef PTL_PTL_H
#define PTL_PTL_H

/* C interface to the planar Turan toolkit.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returns a ptl_status; on failure the
 * message is available from ptl_last_error() on the same thread until the
 * next failing call. Strings returned through char** are heap-allocated
 * and must be released with ptl_string_free. Reports are JSON documents
 * carrying a "schema_version" field; rationals are "p/q" strings. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PTL_BUILDING_LIBRARY)
#define PTL_API __attribute__((visibility("default")))
#else
#define PTL_API
#endif

#define PTL_SCHEMA_VERSION 1

typedef enum ptl_status {
  PTL_OK = 0,
  PTL_ERR_ARGUMENT = 1,   /* bad argument, unknown family, disconnected input */
  PTL_ERR_PARSE = 2,      /* malformed graph6 or embedding text */
  PTL_ERR_NONPLANAR = 3,  /* input graph has no planar embedding */
  PTL_ERR_BOUND = 4,      /* n beyond the exhaustive bound */
  PTL_ERR_CONSTRUCT = 5,  /* witness construction failed */
  PTL_ERR_INTERNAL = 6
} ptl_status;

typedef enum ptl_verdict {
  PTL_PASS = 0,
  PTL_FAIL = 1,
  PTL_PRECONDITION = 2,
  PTL_REPORT = 3 /* value reported, no verdict */
} ptl_verdict;

typedef struct ptl_graph ptl_graph;
typedef struct ptl_plane ptl_plane;

typedef struct ptl_search_options {
  int workers;  /* >= 1 */
  int max_n;    /* exhaustive bound, usually 10 */
  int long_run; /* nonzero: allow max_n + 1 */
} ptl_search_options;

PTL_API const char* ptl_last_error(void);
PTL_API const char* ptl_version(void);
PTL_API void ptl_string_free(char* s);

/* Graphs */
PTL_API ptl_status ptl_graph_new(int n, ptl_graph** out);
PTL_API ptl_status ptl_graph_from_graph6(const char* text, ptl_graph** out);
PTL_API ptl_status ptl_graph_add_edge(ptl_graph* g, int u, int v);
PTL_API ptl_status ptl_graph_order(const ptl_graph* g, int* out);
PTL_API ptl_status ptl_graph_size(const ptl_graph* g, int* out);
PTL_API ptl_status ptl_graph_has_edge(const ptl_graph* g, int u, int v, int* out);
PTL_API ptl_status ptl_graph_to_graph6(const ptl_graph* g, char** out);
PTL_API void ptl_graph_free(ptl_graph* g);

/* Plane graphs. ptl_plane_from_text accepts the embedding format (first
 * line "n e f outer") or a graph6 line, which is embedded by the planarity
 * test. For nonplanar input PTL_ERR_NONPLANAR is returned and, if witness
 * is not NULL, *witness receives the Kuratowski subdivision as JSON. */
PTL_API ptl_status ptl_plane_from_text(const char* text, ptl_plane** out, char** witness);
PTL_API ptl_status ptl_plane_from_graph(const ptl_graph* g, ptl_plane** out, char** witness);
PTL_API ptl_status ptl_plane_face_count(const ptl_plane* p, int* out);
PTL_API ptl_status ptl_plane_outer(const ptl_plane* p, int* out);
PTL_API ptl_status ptl_plane_set_outer(ptl_plane* p, int face);
PTL_API ptl_status ptl_plane_graph(const ptl_plane* p, ptl_graph** out);
PTL_API ptl_status ptl_plane_to_embedding(const ptl_plane* p, char** out);
PTL_API void ptl_plane_free(ptl_plane* p);

/* Reports */
PTL_API ptl_status ptl_faces_json(const ptl_plane* p, char** out);
PTL_API ptl_status ptl_decompose_json(const ptl_plane* p, char** out);
/* Discharging ledger, the block-certificate check and the reduction bound
 * chain. *verdict is PASS, FAIL (a certificate or identity failed) or
 * PRECONDITION (not {K4, Theta5}-free, or minimum degree below 3). */
PTL_API ptl_status ptl_discharge_json(const ptl_plane* p, char** out, ptl_verdict* verdict);
PTL_API ptl_status ptl_bound_chain_json(const ptl_graph* g, char** out, ptl_verdict* verdict);

/* Bound table for family preset over lo..hi. Results do not depend on the
 * worker count. */
PTL_API ptl_status ptl_search_json(const char* family, int lo, int hi, const ptl_search_options* opts,
                                   char** out);
PTL_API ptl_status ptl_family_names_json(char** out);

PTL_API ptl_status ptl_construct(int k, ptl_plane** out);
PTL_API ptl_status ptl_verify_json(const ptl_plane* p, int k, char** out, int* pass);

#ifdef __cplusplus
}
#endif

#endif
