/* C interface to pdskit. Every function returns a pk_status; results come back
 * through out-parameters. Objects are opaque handles released by their _free
 * function. On an error status, pk_last_error() describes the failure (per thread). */
#ifndef PDSKIT_H
#define PDSKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PDSKIT_BUILDING)
#define PK_API __attribute__((visibility("default")))
#else
#define PK_API
#endif

typedef enum pk_status {
    PK_OK = 0,
    PK_ABSENT = 1,    /* search finished: no such word / object exists */
    PK_GAVE_UP = 2,   /* bounded search stopped at a cap before deciding */
    PK_ERR_INPUT = -1,
    PK_ERR_PARSE = -2,
    PK_ERR_CAP = -3,  /* refused up front: the instance exceeds a cap */
    PK_ERR_IO = -4,
    PK_ERR_INTERNAL = -5
} pk_status;

PK_API const char* pk_status_name(pk_status s);
PK_API const char* pk_last_error(void);

/* ---- result containers ---- */

typedef struct pk_ints pk_ints;
typedef struct pk_text pk_text;

PK_API size_t pk_ints_size(const pk_ints* v);
PK_API const int64_t* pk_ints_data(const pk_ints* v);
PK_API void pk_ints_free(pk_ints* v);

PK_API const char* pk_text_str(const pk_text* t);
PK_API void pk_text_free(pk_text* t);

/* ---- Mealy automata ---- */

typedef struct pk_mealy pk_mealy;

/* next/out are row-major: cell q*a + x. */
PK_API pk_status pk_mealy_create(uint32_t n, uint32_t a, uint32_t b, const uint32_t* next, const uint32_t* out,
                                 pk_mealy** result);
PK_API pk_status pk_mealy_parse(const char* text, pk_mealy** result);
PK_API pk_status pk_mealy_load(const char* path, pk_mealy** result);
/* comment may be NULL; embedded newlines produce several comment lines. */
PK_API pk_status pk_mealy_format(const pk_mealy* m, const char* comment, pk_text** result);
PK_API pk_status pk_mealy_save(const pk_mealy* m, const char* path, const char* comment);
PK_API void pk_mealy_free(pk_mealy* m);

PK_API pk_status pk_mealy_dims(const pk_mealy* m, uint32_t* n, uint32_t* a, uint32_t* b);
PK_API pk_status pk_mealy_run(const pk_mealy* m, uint32_t q, const uint32_t* word, size_t len, uint32_t* final_state,
                              pk_ints** outputs);
PK_API pk_status pk_mealy_image(const pk_mealy* m, const uint32_t* states, size_t count, const uint32_t* word,
                                size_t len, pk_ints** result);
PK_API pk_status pk_mealy_is_reduced(const pk_mealy* m, int* reduced);
PK_API pk_status pk_mealy_minimize(const pk_mealy* m, pk_mealy** result);
/* The partition of `states` by output response to `word`, as "{0}{1,2}". */
PK_API pk_status pk_mealy_uncertainty(const pk_mealy* m, const uint32_t* states, size_t count, const uint32_t* word,
                                      size_t len, pk_text** result);

/* ---- partial semiautomata ---- */

typedef struct pk_psemi pk_psemi;

#define PK_UNDEFINED UINT32_C(0xffffffff)

PK_API pk_status pk_psemi_create(uint32_t n, uint32_t a, const uint32_t* next, pk_psemi** result);
PK_API pk_status pk_psemi_parse(const char* text, pk_psemi** result);
PK_API pk_status pk_psemi_load(const char* path, pk_psemi** result);
PK_API pk_status pk_psemi_format(const pk_psemi* p, const char* comment, pk_text** result);
PK_API pk_status pk_psemi_save(const pk_psemi* p, const char* path, const char* comment);
PK_API void pk_psemi_free(pk_psemi* p);

PK_API pk_status pk_psemi_dims(const pk_psemi* p, uint32_t* n, uint32_t* a);
/* PK_ABSENT when the word is undefined somewhere on `states`. */
PK_API pk_status pk_psemi_image(const pk_psemi* p, const uint32_t* states, size_t count, const uint32_t* word,
                                size_t len, pk_ints** result);

/* ---- preset distinguishing sequences ---- */

/* max_len < 0 means unbounded. PK_OK with the word, PK_ABSENT, or PK_GAVE_UP. */
PK_API pk_status pk_shortest_pds(const pk_mealy* m, const uint32_t* subset, size_t count, int64_t max_len,
                                 uint64_t max_nodes, pk_ints** word, uint64_t* nodes_visited);

typedef struct pk_worst_pds {
    uint64_t max_length;
    uint64_t automata_enumerated;
    uint64_t pairs_with_pds;
    pk_mealy* witness;      /* NULL when no pair had a PDS; caller frees */
    pk_ints* witness_subset; /* NULL with witness; caller frees */
} pk_worst_pds;

PK_API pk_status pk_worst_case_pds(uint32_t n, uint32_t a, uint32_t b, uint32_t k, uint64_t cap, unsigned jobs,
                                   pk_worst_pds* result);

/* ---- transformations ---- */

typedef struct pk_maps pk_maps;

/* Concatenated image arrays, `count` maps of `ground` entries each. */
PK_API pk_status pk_maps_create(uint32_t ground, const uint32_t* images, size_t count, pk_maps** result);
/* "1,0;0,0" */
PK_API pk_status pk_maps_parse(uint32_t ground, const char* text, pk_maps** result);
PK_API pk_status pk_maps_full(uint32_t n, pk_maps** result);
PK_API pk_status pk_maps_symmetric(uint32_t n, pk_maps** result);
PK_API size_t pk_maps_count(const pk_maps* m);
PK_API uint32_t pk_maps_ground(const pk_maps* m);
/* Map i as "a,b,c". */
PK_API pk_status pk_maps_get(const pk_maps* m, size_t i, pk_text** result);
PK_API void pk_maps_free(pk_maps* m);

/* levels[i] = number of closure elements whose shortest product has length i+1. */
PK_API pk_status pk_closure(const pk_maps* basis, uint64_t cap, uint64_t* size, pk_ints** levels);
/* PK_ABSENT when f is outside the closure. */
PK_API pk_status pk_complexity(const pk_maps* basis, const uint32_t* f, uint64_t cap, uint64_t* value);
PK_API pk_status pk_restriction_complexity(const pk_maps* basis, const uint32_t* domain, const uint32_t* images,
                                           size_t size, uint64_t cap, uint64_t* value);

typedef struct pk_worst_complexity {
    uint64_t value;
    uint64_t bases_examined;
    pk_ints* basis;    /* indices into the candidate set; caller frees */
    pk_text* witness;  /* "a,b,c"; caller frees */
} pk_worst_complexity;

PK_API pk_status pk_worst_case_complexity(const pk_maps* set, uint64_t cap_bases, uint64_t cap_closure, int canonical,
                                          unsigned jobs, pk_worst_complexity* result);
PK_API pk_status pk_directed_diameter(const pk_maps* generators, uint64_t cap, uint64_t* value);
PK_API pk_status pk_group_worst_diameter(const pk_maps* group, uint64_t cap_bases, uint64_t* value);

/* ---- k-graphs and walks ---- */

typedef struct pk_kgraph pk_kgraph;
typedef struct pk_walk pk_walk;

PK_API pk_status pk_kgraph_build(const pk_maps* basis, uint32_t k, uint64_t cap, pk_kgraph** result);
PK_API void pk_kgraph_free(pk_kgraph* g);
PK_API pk_status pk_kgraph_counts(const pk_kgraph* g, uint64_t* vertices, uint64_t* arcs);
PK_API pk_status pk_kgraph_vertex(const pk_kgraph* g, uint32_t v, pk_ints** subset);
PK_API pk_status pk_kgraph_vertex_of(const pk_kgraph* g, const uint32_t* subset, size_t k, uint32_t* v);
/* Component index per vertex; components ordered by smallest member. */
PK_API pk_status pk_kgraph_scc(const pk_kgraph* g, uint64_t* components, pk_ints** component_of);
PK_API pk_status pk_kgraph_dot(const pk_kgraph* g, pk_text** result);

PK_API pk_status pk_walk_from_letters(const pk_kgraph* g, uint32_t start, const uint32_t* letters, size_t len,
                                      pk_walk** result);
PK_API pk_status pk_walk_random(const pk_kgraph* g, uint32_t start, size_t len, uint64_t seed, pk_walk** result);
PK_API void pk_walk_free(pk_walk* w);
PK_API size_t pk_walk_length(const pk_walk* w);
PK_API uint32_t pk_walk_start(const pk_walk* w);
PK_API pk_status pk_walk_letters(const pk_kgraph* g, const pk_walk* w, pk_ints** letters);
/* Evaluation as "{0->1,2->0}". */
PK_API pk_status pk_walk_eval(const pk_kgraph* g, const pk_walk* w, pk_text** result);
PK_API pk_status pk_walk_saturate(const pk_kgraph* g, const pk_walk* w, uint32_t pivot, pk_walk** result);

/* Per component, 8 consecutive values: component, vertices, pivot, original_length,
 * pieces, factor_length, length, bound. */
#define PK_COMPONENT_FIELDS 8
PK_API pk_status pk_walk_compress(const pk_kgraph* g, const pk_walk* w, pk_walk** result, pk_ints** components,
                                  uint64_t* bridges);

/* ---- extremal constructions ---- */

PK_API pk_status pk_fig1(uint32_t n, pk_mealy** result);

typedef struct pk_sokolovskii_info {
    uint32_t m;
    uint64_t r_k;
    pk_psemi* semiautomaton; /* caller frees */
    pk_maps* basis;          /* caller frees */
    pk_text* pi;             /* "a,b,c"; caller frees */
} pk_sokolovskii_info;

PK_API pk_status pk_sokolovskii(uint32_t n, uint32_t k, uint64_t cap_subsets, pk_sokolovskii_info* result);

typedef struct pk_lower_bound {
    uint32_t n, k, m;
    uint64_t r_k;
    int has_computed;
    uint64_t computed;
    uint64_t bound;
    uint64_t exact;
    int pass;
    int equals_exact;
    int cycle_check;
    uint64_t closure_size;
} pk_lower_bound;

PK_API pk_status pk_verify_lower_bound(uint32_t n, uint32_t k, uint64_t cap_closure, pk_lower_bound* result);

/* ---- Landau's function ---- */

/* value as decimal text, parts ascending. */
PK_API pk_status pk_landau(uint32_t k, uint32_t cap, pk_text** value, pk_ints** parts);
PK_API pk_status pk_max_order_permutation(uint32_t k, pk_ints** images);

/* ---- synchronization ---- */

/* PK_OK with word, PK_ABSENT, or PK_GAVE_UP. */
PK_API pk_status pk_sync_careful(const pk_psemi* p, uint64_t max_nodes, pk_ints** word, uint64_t* image_size);
PK_API pk_status pk_sync_irreducible(const pk_psemi* p, uint64_t max_nodes, pk_ints** word, uint64_t* image_size);
PK_API pk_status pk_sync_is_irreducible(const pk_psemi* p, const uint32_t* word, size_t len, uint64_t max_nodes,
                                        int* irreducible);

/* ---- bounds ---- */

PK_API pk_status pk_entropy(double p, double* value);
PK_API pk_status pk_binary_entropy(double x, double* value);
PK_API pk_status pk_phi(double a, double* value);
PK_API pk_status pk_entropy_limit(uint64_t n, double p, double* value);
PK_API pk_status pk_bounds_header(pk_text** result);
PK_API pk_status pk_bound_row_csv(uint32_t n, uint32_t k, pk_text** result);
/* fixed_k = 0 selects k = round(ratio * n), clamped to [2, n]. */
PK_API pk_status pk_bounds_table(uint32_t n_min, uint32_t n_max, uint32_t fixed_k, double ratio, pk_text** result);

/* ---- acceptance checks ---- */

/* level "quick" or "full". report gets one line per check; failures counts the failed ones. */
PK_API pk_status pk_verify(const char* level, unsigned jobs, pk_text** report, int* failures);

#ifdef __cplusplus
}
#endif

#endif
