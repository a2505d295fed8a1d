#ifndef PRISM_H
#define PRISM_H

#include <stddef.h>

#if defined(PRISM_BUILDING)
#  define PRISM_API __attribute__((visibility("default")))
#else
#  define PRISM_API
#endif

#ifdef __cplusplus
#  define PRISM_NOEXCEPT noexcept
#else
#  define PRISM_NOEXCEPT
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum prism_status {
    PRISM_OK = 0,
    PRISM_E_INVALID_ARGUMENT,
    PRISM_E_PARSE,
    PRISM_E_IO,
    PRISM_E_CUSP_TYPE_INVALID,
    PRISM_E_VERTEX_NOT_SPHERICAL,
    PRISM_E_FAMILY_PARAMETER,
    PRISM_E_UNKNOWN_NAME,
    PRISM_E_RELATOR_VIOLATION,
    PRISM_E_NOT_TRANSITIVE,
    PRISM_E_DEGREE_NOT_DIVISIBLE,
    PRISM_E_SIGNATURE_MISMATCH,
    PRISM_E_DEGREE_MISMATCH,
    PRISM_E_INVALID_REP,
    PRISM_E_DISCONNECTED_SPINE,
    PRISM_E_NOT_A_MANIFOLD,
    PRISM_E_NO_POSITIVE_ROOT,
    PRISM_E_UNSUPPORTED_A3,
    PRISM_E_CUSP_VOLUME_UNSUPPORTED,
    PRISM_E_UNSUPPORTED_SIGNATURE,
    PRISM_E_QUADRATURE,
    PRISM_E_NOT_A_236_CUSP,
    PRISM_E_INDEX_TOO_LARGE,
    PRISM_E_OUT_OF_MEMORY,
    PRISM_E_INTERNAL
} prism_status;

typedef struct prism_signature prism_signature;
typedef struct prism_reps prism_reps;

PRISM_API const char* prism_status_name(prism_status s) PRISM_NOEXCEPT;
/* Message of the last failure on this thread; "" after success. */
PRISM_API const char* prism_last_error(void) PRISM_NOEXCEPT;
/* Strings returned through char** are malloc'd. */
PRISM_API void prism_free_string(char* s) PRISM_NOEXCEPT;

/* ---- signatures ---- */

PRISM_API prism_status prism_signature_new(const int a[9], const char* name, prism_signature** out) PRISM_NOEXCEPT;
/* n <= 0 means no family parameter. */
PRISM_API prism_status prism_signature_lookup(const char* name, int n, prism_signature** out) PRISM_NOEXCEPT;
PRISM_API prism_status prism_signature_parse(const char* line, prism_signature** out) PRISM_NOEXCEPT;
PRISM_API void prism_signature_free(prism_signature* s) PRISM_NOEXCEPT;
PRISM_API prism_status prism_signature_get(const prism_signature* s, int a[9]) PRISM_NOEXCEPT;
PRISM_API prism_status prism_signature_format(const prism_signature* s, char** out) PRISM_NOEXCEPT;
/* "(2,3,6)", "(3,3,3)" or "(2,4,4)" */
PRISM_API prism_status prism_signature_cusp_type(const prism_signature* s, char** out) PRISM_NOEXCEPT;
/* lcm of the finite vertex group orders */
PRISM_API prism_status prism_signature_vertex_lcm(const prism_signature* s, long long* out) PRISM_NOEXCEPT;

/* Builtin catalog rows, then the parity-split family rows. */
PRISM_API size_t prism_catalog_count(void) PRISM_NOEXCEPT;
/* name, tab, the nine entries ("n" for a family parameter), tab, min n or 0, tab, parity */
PRISM_API prism_status prism_catalog_row(size_t i, char** out) PRISM_NOEXCEPT;

/* ---- representations ---- */

PRISM_API prism_status prism_reps_new(prism_reps** out) PRISM_NOEXCEPT;
PRISM_API prism_status prism_reps_read_file(const char* path, prism_reps** out) PRISM_NOEXCEPT;
PRISM_API prism_status prism_reps_parse(const char* text, prism_reps** out) PRISM_NOEXCEPT;
PRISM_API void prism_reps_free(prism_reps* r) PRISM_NOEXCEPT;
PRISM_API size_t prism_reps_count(const prism_reps* r) PRISM_NOEXCEPT;
/* images of x,y,z,w, each of length degree, 0-based */
PRISM_API prism_status prism_reps_push(prism_reps* r, int degree, const int* x, const int* y, const int* z,
                                       const int* w) PRISM_NOEXCEPT;
PRISM_API prism_status prism_reps_degree(const prism_reps* r, size_t i, int* out) PRISM_NOEXCEPT;
/* gen: 0..3 for x,y,z,w; buf must hold degree ints */
PRISM_API prism_status prism_reps_images(const prism_reps* r, size_t i, int gen, int* buf, size_t len) PRISM_NOEXCEPT;
PRISM_API prism_status prism_reps_format(const prism_reps* r, size_t i, char** out) PRISM_NOEXCEPT;
/* cycle notation of the word's permutation, e.g. "(0,1,2)(3,12,7)" */
PRISM_API prism_status prism_reps_evaluate(const prism_reps* r, size_t i, const char* word, char** out) PRISM_NOEXCEPT;

/* ---- certification ---- */

typedef struct prism_check_info {
    int relators_ok;
    int transitive;
    int manifold;
    int cusps;
    int h1_rank;
    int h1_torsion; /* number of torsion invariants */
} prism_check_info;

/* h1 (nullable) receives the homology string when the cover is a valid manifold, "" otherwise */
PRISM_API prism_status prism_check(const prism_signature* s, const prism_reps* r, size_t i, prism_check_info* out,
                                   char** h1) PRISM_NOEXCEPT;

typedef struct prism_spine_info {
    int vertices, edges, cells;
    int coarse_vertices, coarse_edges, coarse_cells;
} prism_spine_info;

PRISM_API prism_status prism_spine(const prism_signature* s, const prism_reps* r, size_t i, prism_spine_info* out) PRISM_NOEXCEPT;
/* coarse spine cells and presentation */
PRISM_API prism_status prism_spine_report(const prism_signature* s, const prism_reps* r, size_t i, char** out) PRISM_NOEXCEPT;

typedef struct prism_surface_info {
    int components;
    int genus;   /* of the first component */
    int euler;   /* total */
    long long area_num, area_den;  /* area / pi */
    int separating;
} prism_surface_info;

PRISM_API prism_status prism_surface(const prism_signature* s, const prism_reps* r, size_t i,
                                     prism_surface_info* out) PRISM_NOEXCEPT;

/* gluing table text; ideal_classes (nullable) gets the number of ideal vertex classes */
PRISM_API prism_status prism_triangulate(const prism_signature* s, const prism_reps* r, size_t i, char** table,
                                         int* ideal_classes) PRISM_NOEXCEPT;
PRISM_API prism_status prism_triangulation_block(const prism_signature* s, const prism_reps* r, size_t i,
                                                 int block, char** out) PRISM_NOEXCEPT;

/* ---- isometries ---- */

/* reversing != 0 searches orientation-reversing maps. buf receives count*degree images
   (as many as fit in len); count is the total number found. */
PRISM_API prism_status prism_find_isometries(const prism_signature* sa, const prism_reps* ra, size_t ia,
                                             const prism_signature* sb, const prism_reps* rb, size_t ib,
                                             int reversing, int* buf, size_t len, size_t* count) PRISM_NOEXCEPT;
/* map: comma list like "y>z+,z>y+,w>w+" */
PRISM_API prism_status prism_verify_intertwine(const int* phi, int degree, const prism_reps* ra, size_t ia,
                                               const prism_reps* rb, size_t ib, const char* map, int* ok) PRISM_NOEXCEPT;

/* ---- geometry ---- */

PRISM_API prism_status prism_geometry_report(const prism_signature* s, char** out) PRISM_NOEXCEPT;
PRISM_API prism_status prism_relator_residual(const prism_signature* s, double* out) PRISM_NOEXCEPT;
/* volume is NaN when the cusp volume formula does not apply */
PRISM_API prism_status prism_cusp(const prism_signature* s, double* height, double* volume) PRISM_NOEXCEPT;
PRISM_API prism_status prism_volume(const prism_signature* s, double tol, double* volume, double* error) PRISM_NOEXCEPT;

/* ---- filters ---- */

typedef struct prism_prefilter_info {
    int ck_trivial;
    int dc; /* 1 exists, 0 absent, -1 not applicable */
    long long mcd;
    int eliminated;
} prism_prefilter_info;

PRISM_API prism_status prism_prefilter(const prism_signature* s, prism_prefilter_info* out) PRISM_NOEXCEPT;

typedef struct prism_filter_counts {
    size_t input, manifold, one_cusp, homology_z;
} prism_filter_counts;

/* survivors (nullable) receives a new list */
PRISM_API prism_status prism_filter(const prism_signature* s, const prism_reps* r, int workers,
                                    prism_filter_counts* out, prism_reps** survivors) PRISM_NOEXCEPT;

/* ---- low-index search ---- */

typedef void (*prism_progress_fn)(size_t done, size_t total, unsigned long long results, void* user);

typedef struct prism_enumerate_options {
    int workers;          /* >= 1 */
    int split_depth;      /* 0 picks the default */
    const char* checkpoint_path;  /* nullable */
    const char* output_path;      /* nullable; required with a checkpoint */
    int keep;             /* collect results into *out */
    prism_progress_fn progress;
    void* user;
} prism_enumerate_options;

PRISM_API void prism_enumerate_options_init(prism_enumerate_options* o) PRISM_NOEXCEPT;
/* by_index (nullable) must hold max_index + 1 entries */
PRISM_API prism_status prism_enumerate(const prism_signature* s, int max_index, const prism_enumerate_options* o,
                                       prism_reps** out, unsigned long long* count, unsigned long long* by_index) PRISM_NOEXCEPT;
PRISM_API prism_status prism_brute_force(const prism_signature* s, int index, prism_reps** out) PRISM_NOEXCEPT;
PRISM_API prism_status prism_canonical(const prism_reps* r, size_t i, prism_reps* dst) PRISM_NOEXCEPT;

#ifdef __cplusplus
}
#endif

#endif
