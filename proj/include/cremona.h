/* C interface to the cremona shared library.
 *
 * All functions return crm_status; results come back through out-parameters.
 * Opaque handles own their resources and are released with the matching
 * *_free function.  Strings returned by the library are heap-allocated and
 * released with crm_string_free.  On any failure, crm_last_error() returns a
 * thread-local human-readable message describing what went wrong.
 */

#ifndef CREMONA_H
#define CREMONA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crm_status {
    CRM_OK = 0,
    /* input problems */
    CRM_ERR_INVALID = 1,         /* invalid argument / precondition violated */
    CRM_ERR_PARSE = 2,           /* malformed document or literal */
    /* mathematically negative answers */
    CRM_ERR_NOETHER_SELFINT = 3, /* sum i^2 nu_i != d^2 - 1 */
    CRM_ERR_NOETHER_GENUS = 4,   /* sum i nu_i != 3(d-1) */
    CRM_ERR_REDUCIBLE = 5,       /* fails the degree-lowering test */
    CRM_ERR_MATH = 6,            /* a verification came out false */
    /* environment */
    CRM_ERR_IO = 7,
    CRM_ERR_INTERNAL = 8
} crm_status;

typedef struct crm_map crm_map;       /* a plane map: three equal-degree forms */
typedef struct crm_points crm_points; /* assigned base points with multiplicities */

const char* crm_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* crm_last_error(void);

void crm_string_free(char* s);

/* ---- homaloidal types ------------------------------------------------- */

/* Admissibility of the multi-index (counts[0..n-1]) = (nu_1..nu_n) at degree
 * n+1.  CRM_OK: admissible.  CRM_ERR_NOETHER_SELFINT / _GENUS / _REDUCIBLE:
 * the three failure modes; for _REDUCIBLE, *reducible_step (when non-NULL)
 * receives the 1-based step at which the reduction got stuck. */
crm_status crm_admissible(const long long* counts, size_t n, long long* reducible_step);

/* Census of degree d as a JSON document (schema cremona.census/1).
 * cache_dir NULL or empty disables caching. */
crm_status crm_census_json(long long degree, const char* cache_dir, char** json_out);

/* CREMONA_CACHE_DIR, else XDG_CACHE_HOME/cremona, else ~/.cache/cremona. */
crm_status crm_default_cache_dir(char** dir_out);

crm_status crm_dim_biro(long long degree, long long* out);
crm_status crm_dim_bir(long long degree, long long* out);
crm_status crm_dim_bira(long long degree, long long factor_degree, long long* out);

/* ---- maps -------------------------------------------------------------- */

crm_status crm_map_parse_json(const char* text, crm_map** out);
crm_status crm_map_render_json(const crm_map* m, char** json_out);
void crm_map_free(crm_map* m);

crm_status crm_map_degree(const crm_map* m, long long* out);

/* outer(inner); strip != 0 removes the common factor of the components */
crm_status crm_map_compose(const crm_map* outer, const crm_map* inner, int strip, crm_map** out);

/* *verified = 1 iff both compositions are the identity up to a factor */
crm_status crm_map_verify_pair(const crm_map* a, const crm_map* b, int* verified);

crm_status crm_map_jacobian_nonzero(const crm_map* m, int* nonzero);

/* ---- base points ------------------------------------------------------- */

crm_status crm_points_parse_json(const char* text, crm_points** out);
void crm_points_free(crm_points* p);

/* Per-point report {point, expected, found, match} plus overall verdict
 * (schema cremona.mults/1).  CRM_OK even when multiplicities differ; the
 * verdict lives in the document. */
crm_status crm_map_multiplicities_json(const crm_map* m, const crm_points* pts, char** json_out);

/* Factor into quadratic maps and a linear tail, using the listed plane base
 * points (schema cremona.factorization/1).  CRM_ERR_MATH when the net has
 * base points the list cannot account for (infinitely near), when listed
 * multiplicities do not match, or when centers degenerate. */
crm_status crm_map_factor_json(const crm_map* m, const crm_points* pts, char** json_out);

crm_status crm_map_invert(const crm_map* m, const crm_points* pts, crm_map** out);

/* ---- bundled example maps ---------------------------------------------- */

/* Inventory with names, degrees, homaloidal types, stated base points
 * (schema cremona.fixtures/1). */
crm_status crm_fixtures_list_json(char** json_out);

crm_status crm_fixture_map(const char* name, crm_map** out);

/* Run every bundled check: Jacobian, stated multiplicities, inverse pairs
 * (schema cremona.fixture-report/1).  *all_passed receives the verdict. */
crm_status crm_fixtures_run_json(char** json_out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* CREMONA_H */
