/* C interface to the mvdual library.
 *
 * Conventions:
 *   - Every function returns an mvd_status; results come back through out
 *     parameters. On failure the out parameters are untouched and
 *     mvd_last_error() describes the problem (thread-local storage).
 *   - Objects are opaque handles created by *_parse / *_from_json /
 *     constructor calls and released with the matching *_free. Freeing NULL
 *     is a no-op.
 *   - Structured data travels as JSON text in the library's documented
 *     formats; rationals are "p/q" strings. Strings returned through char**
 *     are heap-allocated and released with mvd_string_free.
 *   - Booleans are ints (0/1).
 */
#ifndef MVDUAL_H
#define MVDUAL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    MVD_OK = 0,
    MVD_ERR_PARSE = 1,    /* malformed term text or JSON */
    MVD_ERR_DOMAIN = 2,   /* semantic violation (dimension mismatch, ...) */
    MVD_ERR_ARGUMENT = 3  /* null handle or invalid argument */
} mvd_status;

const char* mvd_last_error(void);
void mvd_string_free(char* s);

typedef struct mvd_term mvd_term;
typedef struct mvd_poly mvd_poly;
typedef struct mvd_plfun mvd_plfun;
typedef struct mvd_presentation mvd_presentation;
typedef struct mvd_zmap mvd_zmap;
typedef struct mvd_algebra mvd_algebra;
typedef struct mvd_spectrum mvd_spectrum;
typedef struct mvd_germ mvd_germ;
typedef struct mvd_witness mvd_witness;

void mvd_term_free(mvd_term* t);
void mvd_poly_free(mvd_poly* p);
void mvd_plfun_free(mvd_plfun* f);
void mvd_presentation_free(mvd_presentation* p);
void mvd_zmap_free(mvd_zmap* z);
void mvd_algebra_free(mvd_algebra* a);
void mvd_spectrum_free(mvd_spectrum* s);
void mvd_germ_free(mvd_germ* g);
void mvd_witness_free(mvd_witness* w);

/* --- terms ------------------------------------------------------------- */

mvd_status mvd_term_parse(const char* text, mvd_term** out);
mvd_status mvd_term_print(const mvd_term* t, char** out);
/* point_json: array of rationals, e.g. ["1/2","1/3"] */
mvd_status mvd_term_eval(const mvd_term* t, const char* point_json, char** value_out);
mvd_status mvd_term_compile(const mvd_term* t, int arity, mvd_plfun** out);

/* --- piecewise linear functions ---------------------------------------- */

mvd_status mvd_plfun_from_json(const char* json, mvd_plfun** out);
mvd_status mvd_plfun_to_json(const mvd_plfun* f, char** out);
mvd_status mvd_plfun_eval(const mvd_plfun* f, const char* point_json, char** value_out);
mvd_status mvd_plfun_equal(const mvd_plfun* f, const mvd_plfun* g, int* out);
mvd_status mvd_plfun_zero_set(const mvd_plfun* f, mvd_poly** out);
mvd_status mvd_plfun_one_set(const mvd_plfun* f, mvd_poly** out);

/* --- polyhedra ---------------------------------------------------------- */

mvd_status mvd_poly_from_json(const char* json, mvd_poly** out);
mvd_status mvd_poly_to_json(const mvd_poly* p, char** out);
mvd_status mvd_poly_full_cube(int n, mvd_poly** out);
mvd_status mvd_poly_equal(const mvd_poly* p, const mvd_poly* q, int* out);
mvd_status mvd_poly_intersect(const mvd_poly* p, const mvd_poly* q, mvd_poly** out);
mvd_status mvd_poly_union(const mvd_poly* p, const mvd_poly* q, mvd_poly** out);
mvd_status mvd_poly_project(const mvd_poly* p, const int* coords, int n_coords, mvd_poly** out);
mvd_status mvd_poly_product(const mvd_poly* p, const mvd_poly* q, mvd_poly** out);

/* --- presentations and duality ------------------------------------------ */

mvd_status mvd_presentation_from_json(const char* json, mvd_presentation** out);
mvd_status mvd_presentation_to_json(const mvd_presentation* p, char** out);
mvd_status mvd_variety(const mvd_presentation* p, mvd_poly** out);
mvd_status mvd_in_ideal(const mvd_poly* p, const mvd_term* s, const mvd_term* t, int* out);
mvd_status mvd_radical_equal(const mvd_presentation* s, const mvd_presentation* t, int* out);
/* homspec json: { "source": presentation, "target": presentation,
 *                 "images": ["term", ...] } */
mvd_status mvd_check_hom(const char* homspec_json, int* out);
mvd_status mvd_dual_hom(const char* homspec_json, mvd_zmap** out);
mvd_status mvd_zmap_from_json(const char* json, mvd_zmap** out);
mvd_status mvd_zmap_to_json(const mvd_zmap* z, char** out);
/* result json: { "keptInputs": [...], "factor": zmap } */
mvd_status mvd_zmap_factor(const mvd_zmap* z, const int* components, int n_components,
                           char** result_json);

/* --- finite algebras and spectra ----------------------------------------- */

mvd_status mvd_algebra_chain(int n, mvd_algebra** out);
mvd_status mvd_algebra_from_json(const char* json, mvd_algebra** out);
mvd_status mvd_algebra_to_json(const mvd_algebra* a, char** out);
mvd_status mvd_algebra_product(const mvd_algebra* a, const mvd_algebra* b, mvd_algebra** out);
mvd_status mvd_spectrum_of(const mvd_algebra* a, mvd_spectrum** out);
mvd_status mvd_coproduct_spectrum(const mvd_algebra* a, const mvd_algebra* b, mvd_spectrum** out);
mvd_status mvd_tensor_spectrum(const mvd_algebra* a, const mvd_algebra* b, mvd_spectrum** out);
mvd_status mvd_spectrum_from_json(const char* json, mvd_spectrum** out);
mvd_status mvd_spectrum_to_json(const mvd_spectrum* s, char** out);
mvd_status mvd_algebra_of_spectrum(const mvd_spectrum* s, mvd_algebra** out);
mvd_status mvd_tensor_relations_check(const mvd_algebra* a, const mvd_algebra* b,
                                      const char* point_json, int* out);

/* --- tangents ------------------------------------------------------------ */

mvd_status mvd_germ_from_json(const char* json, mvd_germ** out);
mvd_status mvd_germ_to_json(const mvd_germ* g, char** out);
mvd_status mvd_witness_from_json(const char* json, mvd_witness** out);
/* tangent json: { "base": [...], "directions": [[...], ...] } */
mvd_status mvd_tangent_extract(const mvd_germ* g, int k, char** tangent_json);
mvd_status mvd_germ_in_poly(const mvd_poly* x, const mvd_germ* g, int* out);
mvd_status mvd_outgoing_verify(const mvd_poly* x, const char* tangent_json,
                               const mvd_witness* w, int* out);
mvd_status mvd_outgoing_check(const mvd_poly* x, const mvd_germ* g, int k,
                              const mvd_witness* w, int* out);

/* --- sampling suite ------------------------------------------------------ */

/* report json: { "polyhedra": n, "checks": n,
 *                "germsInsideX": n, "counterexamples": n } */
mvd_status mvd_poly_falsify(int dim, int n_polyhedra, int samples_per_poly, uint64_t seed,
                            char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* MVDUAL_H */
