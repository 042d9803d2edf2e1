/* C interface to the occ132 engine: 132-occurrence generating functions,
 * kernel shape catalogs, brute-force oracle and property suites.
 *
 * Every function returning occ132_status reports failures through the status
 * code; occ132_last_error() then holds a message for the calling thread.
 * Handles are opaque and owned by the caller, who releases them with the
 * matching *_free function. Output text is returned as an occ132_string. */
#ifndef OCC132_H
#define OCC132_H

#include <stddef.h>
#include <stdint.h>

#if defined(OCC132_BUILDING_LIBRARY)
#define OCC132_API __attribute__((visibility("default")))
#else
#define OCC132_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum occ132_status {
    OCC132_OK = 0,
    OCC132_E_INVALID_ARGUMENT = 1,
    OCC132_E_GUARD = 2,
    OCC132_E_IO = 3,
    OCC132_E_FORMAT = 4,
    OCC132_E_MISSING_SHAPES = 5,
    OCC132_E_MATH = 6,
    OCC132_E_INTERNAL = 7
} occ132_status;

typedef enum occ132_format {
    OCC132_FORMAT_JSON = 0,
    OCC132_FORMAT_CSV = 1,
    OCC132_FORMAT_LATEX = 2
} occ132_format;

typedef struct occ132_string occ132_string;
typedef struct occ132_catalog occ132_catalog;
typedef struct occ132_solver occ132_solver;

OCC132_API const char* occ132_version(void);
OCC132_API const char* occ132_status_string(occ132_status status);
/* Message of the last failure on this thread ("" if none). */
OCC132_API const char* occ132_last_error(void);
/* OCC132_THREADS if set, else hardware concurrency. */
OCC132_API int occ132_default_threads(void);

OCC132_API const char* occ132_string_data(const occ132_string* s);
OCC132_API size_t occ132_string_length(const occ132_string* s);
OCC132_API void occ132_string_free(occ132_string* s);

/* ---- permutations ------------------------------------------------------ */

/* Number of 132 occurrences; values must be a permutation of 1..n. */
OCC132_API occ132_status occ132_count_132(const int* values, size_t n, uint64_t* out);
/* JSON description of the kernel and cell decomposition of a permutation
 * given as text ("57614283" or "10,11,7,12"). */
OCC132_API occ132_status occ132_kernel_json(const char* permutation, occ132_string** out);

/* ---- shape catalogs ---------------------------------------------------- */

OCC132_API occ132_status occ132_catalog_enumerate(int max_occ, int threads, occ132_catalog** out);
/* Reuses the JSON-lines file at cache_path when it is current and covers
 * max_occ; otherwise enumerates and (if cache_path is non-NULL) rewrites it. */
OCC132_API occ132_status occ132_catalog_obtain(const char* cache_path, int max_occ, int threads, occ132_catalog** out);
OCC132_API occ132_status occ132_catalog_read(const char* path, occ132_catalog** out);
OCC132_API occ132_status occ132_catalog_write(const occ132_catalog* catalog, const char* path);
OCC132_API occ132_status occ132_catalog_to_jsonl(const occ132_catalog* catalog, occ132_string** out);
OCC132_API occ132_status occ132_catalog_census_json(const occ132_catalog* catalog, occ132_string** out);
/* Exhaustive search of size 2r+1 confirming the exceptional shape is unique. */
OCC132_API occ132_status occ132_verify_exceptional(int r, int threads);
OCC132_API int occ132_catalog_max_occ(const occ132_catalog* catalog);
OCC132_API size_t occ132_catalog_size(const occ132_catalog* catalog);
OCC132_API void occ132_catalog_free(occ132_catalog* catalog);

/* ---- generating functions ---------------------------------------------- */

/* The solver copies the catalog; order is the series truncation N. */
OCC132_API occ132_status occ132_solver_create(const occ132_catalog* catalog, int order, occ132_solver** out);
OCC132_API void occ132_solver_free(occ132_solver* solver);

/* JSON array of decimal strings, or "n,coefficient" CSV. */
OCC132_API occ132_status occ132_psi_series(occ132_solver* solver, int r, occ132_format format, occ132_string** out);
/* Decimal coefficient of x^n in Psi_r (n <= order). */
OCC132_API occ132_status occ132_psi_coefficient(occ132_solver* solver, int r, int n, occ132_string** out);
/* JSON {"two_P","two_Q","exponent_num","exponent_den",...} or LaTeX. */
OCC132_API occ132_status occ132_psi_closed_form(occ132_solver* solver, int r, occ132_format format, occ132_string** out);
OCC132_API occ132_status occ132_phi_series(occ132_solver* solver, int r, int k, occ132_format format, occ132_string** out);

/* ---- oracle and verification ------------------------------------------- */

/* Brute-force count over S_n; k <= 0 means unrestricted. n <= 10. */
OCC132_API occ132_status occ132_oracle_count(int n, int r, int k, int threads, uint64_t* out);
OCC132_API occ132_status occ132_oracle_distribution_json(int n, int threads, occ132_string** out);
/* Solver-vs-oracle table for n = 0..max_n; k <= 0 compares Psi_r, otherwise
 * Phi_r(x;k). *mismatches receives the number of differing rows. */
OCC132_API occ132_status occ132_verify(occ132_solver* solver, int r, int max_n, int k, int threads, occ132_string** report,
                                       int* mismatches);
/* Structural property suites over S_1..S_max_n; one PASS/FAIL line each. */
OCC132_API occ132_status occ132_check_invariants(int max_n, int threads, occ132_string** report, int* failures);
/* Informational JSON report on the size/feasible-cell conjecture and on the
 * shape of P_r, Q_r for r = 1..max_occ. */
OCC132_API occ132_status occ132_conjectures(occ132_solver* solver, int max_occ, occ132_string** report, int* counterexamples);

#ifdef __cplusplus
}
#endif

#endif /* OCC132_H */
