/* C interface to the Coxeter toolkit.
 *
 * All functions return a cox_status; results come back through out
 * parameters. Strings returned through char** are heap-allocated and must be
 * released with cox_string_free(). On failure, cox_last_error() returns a
 * message for the current thread, valid until the next failing call.
 *
 * Conventions:
 *   - systems travel as opaque cox_system handles;
 *   - words are whitespace-separated generator names, "e" for the identity;
 *   - generator subsets are comma-separated names, "" for the empty set;
 *   - structured results are deterministic JSON documents.
 */

#ifndef COXETER_H
#define COXETER_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cox_system cox_system;

typedef enum cox_status {
  COX_OK = 0,
  COX_ERR_PARSE = 1,    /* malformed system text */
  COX_ERR_INVALID = 2,  /* argument outside its domain */
  COX_ERR_CAP = 3,      /* work bound exceeded before completion */
  COX_ERR_DOMAIN = 4,   /* requested quantity undefined for this input */
  COX_ERR_INTERNAL = 5
} cox_status;

/* --- lifecycle ---------------------------------------------------------- */

cox_status cox_system_parse(const char* text, cox_system** out_sys);
void cox_system_free(cox_system* sys);

const char* cox_last_error(void);

/* --- introspection ------------------------------------------------------ */

int cox_system_rank(const cox_system* sys);
cox_status cox_system_serialize(const cox_system* sys, char** out_text);
cox_status cox_system_fingerprint(const cox_system* sys, char** out_hex);
void cox_string_free(char* s);

/* --- word engine -------------------------------------------------------- */

/* closure_cap <= 0 selects the default bound (10^6 closure words). */
cox_status cox_reduce(const cox_system* sys, const char* word, long closure_cap,
                      char** out_word);
cox_status cox_equal(const cox_system* sys, const char* word_a, const char* word_b,
                     long closure_cap, int* out_equal);
cox_status cox_length(const cox_system* sys, const char* word, long closure_cap,
                      long* out_length);

/* --- structured operations (JSON out) ----------------------------------- */

cox_status cox_classify(const cox_system* sys, char** out_json);
cox_status cox_spherical(const cox_system* sys, int k, char** out_json);
cox_status cox_v(const cox_system* sys, char** out_json);
/* word == NULL or "" computes the plain special intersection <T n U>. */
cox_status cox_intersect(const cox_system* sys, const char* T, const char* U,
                         const char* word, long closure_cap, char** out_json);
/* use_oracle != 0 runs the coset-graph oracle (enum_cap elements) instead of
 * the closed formula. */
cox_status cox_angle(const cox_system* sys, const char* T, const char* U,
                     int use_oracle, long enum_cap, char** out_json);
cox_status cox_split(const cox_system* sys, const char* sprime, char** out_json);
cox_status cox_curvature(const cox_system* sys, const char* sprime, char** out_json);
cox_status cox_fa(const cox_system* sys, int n, char** out_json);
cox_status cox_maxfa(const cox_system* sys, int n, char** out_json);
/* T == NULL enumerates/builds on the full generating set. */
cox_status cox_nerve(const cox_system* sys, const char* T, char** out_json);
cox_status cox_dim_bounds(const cox_system* sys, int subset_rank_cap, char** out_json);
cox_status cox_enumerate(const cox_system* sys, const char* T, long element_cap,
                         char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* COXETER_H */
