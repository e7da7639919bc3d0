#ifndef LEIBNIZ_LEIBNIZ_H
#define LEIBNIZ_LEIBNIZ_H

/*
 * C interface to the leibniz library.
 *
 * Every function returns a status code (LBZ_OK on success); outputs are
 * written through out-parameters.  On failure the out-parameters are left
 * untouched and lbz_last_error() returns a message for the calling thread.
 * Strings returned through char** are owned by the caller and must be
 * released with lbz_string_free(); handles must be released with the
 * matching *_free function.  JSON in and out is UTF-8 text.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lbz_algebra lbz_algebra;
typedef struct lbz_presentation lbz_presentation;

enum {
    LBZ_OK = 0,
    LBZ_ERR_PARSE = 1,  /* malformed JSON or file contents */
    LBZ_ERR_DOMAIN = 2, /* value outside the operation's domain */
    LBZ_ERR_ARG = 3,    /* bad argument: null handle, unknown name, ... */
    LBZ_ERR_INTERNAL = 4
};

/* Message describing the most recent failure on this thread; never NULL. */
const char* lbz_last_error(void);

void lbz_string_free(char* s);
void lbz_algebra_free(lbz_algebra* a);
void lbz_presentation_free(lbz_presentation* p);

/* ------------------------------------------------------------ algebras */

/* Parses { "dim": n, "basis": [...], "products": [...] }. */
int lbz_algebra_parse(const char* json_text, lbz_algebra** out);
int lbz_algebra_to_json(const lbz_algebra* a, char** out_json);
int lbz_algebra_dim(const lbz_algebra* a, int* out_dim);

/* {"leibniz": bool, "lie": bool|null, "violations": [...]};
 * "lie" is null when the table is not Leibniz. */
int lbz_check(const lbz_algebra* a, char** out_json);

/* Full structural report: identity check, series, annihilator and center
 * dimensions, generator data, completeness. */
int lbz_analyze(const lbz_algebra* a, char** out_json);

/* {"der_dim": d, "inner_dim": i, "der_basis": [matrix...],
 *  "inner_basis": [matrix...]} with matrices in the file format. */
int lbz_derivations(const lbz_algebra* a, char** out_json);

int lbz_completeness(const lbz_algebra* a, char** out_json);

/* matrix_json rows hold the new basis written in the old coordinates. */
int lbz_basis_change(const lbz_algebra* a, const char* matrix_json,
                     lbz_algebra** out);
int lbz_tables_equal(const lbz_algebra* a, const lbz_algebra* b,
                     int* out_equal);
int lbz_verify_isomorphism(const lbz_algebra* a, const lbz_algebra* b,
                           const char* matrix_json, int* out_equal);

/* ------------------------------------------------------- presentations */

/* Parses { "algebra": <object or path>, "generators": [...],
 *          "words": {...}, "abelian_flags": {...} }.  A string "algebra"
 * value names a file resolved relative to base_dir ("" or NULL = cwd). */
int lbz_presentation_parse(const char* json_text, const char* base_dir,
                           lbz_presentation** out);
int lbz_presentation_to_json(const lbz_presentation* p, char** out_json);

/* Overrides one abelian flag (value 0 or 1). */
int lbz_presentation_set_flag(lbz_presentation* p, const char* generator,
                              int value);
int lbz_presentation_clear_flags(lbz_presentation* p);

/* Builds the maximal solvable extension.  The result JSON carries the
 * extension table under "table" plus generators, partners, resolved
 * b-flags, alpha, beta, components, and warnings. */
int lbz_extend(const lbz_presentation* p, char** out_json);

/* Structural report of the base algebra plus the extension summary. */
int lbz_analyze_presentation(const lbz_presentation* p, char** out_json);

/* ------------------------------------------------------------- catalog */

/* [{"name": ..., "summary": ..., "params": ..., "has_presentation": ...}] */
int lbz_catalog_list(char** out_json);

/* params_json: object mapping parameter names to string (or integer)
 * values, e.g. {"n": "6", "k": "1"}.  NULL means no parameters.
 * Result: {"name": ..., "table": {...}, "presentation": {...}|null}. */
int lbz_catalog_get(const char* name, const char* params_json,
                    char** out_json);

/* ------------------------------------------------------------- regress */

/* {"cases": [{"name", "pass", "detail"}...], "passed": p, "failed": f} */
int lbz_run_regressions(const char* data_dir, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
