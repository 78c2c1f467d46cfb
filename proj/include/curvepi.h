/* curvepi - fundamental groups of plane curve complements via ruled surfaces.
 *
 * C interface of the shared library.  All functions are thread-safe; every
 * handle is owned by the caller and released with the matching _free call.
 * Strings returned through handles stay valid until the handle is freed.
 */
#ifndef CURVEPI_H
#define CURVEPI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cp_status {
  CP_OK = 0,                /* computation ran, verdict certified/clean */
  CP_MISMATCH = 1,          /* computation ran, some check did not match */
  CP_INVALID_INPUT = 2,     /* parameters or text inputs rejected */
  CP_BUDGET_EXHAUSTED = 3,  /* a configured budget was hit */
  CP_INTERNAL_ERROR = 4
} cp_status;

/* Opaque report: a status, a JSON document, and an error message. */
typedef struct cp_report cp_report;

/* options_json is a JSON object or NULL.  Recognized keys:
 *   "catalog": "tiny" | "small" | "full"      finite-quotient catalog
 *   "tuple_cap": integer                       hom-count budget
 *   "tietze_budget": integer
 *   "search_length": integer                   L, surjectivity search
 *   "ball_radius": integer                     R, injectivity ball
 *   "epi_syllable_bound": integer
 *   "threads": integer                         hom-count fan-out
 *   "strict": bool                             mismatches fail the exit code
 *   "seed": integer                            recorded in the report only
 *   "timings": bool                            include timings_ms (breaks
 *                                              byte-for-byte reproducibility)
 */

/* Full pipeline for the curve x^{aN} y^{bN} + (x^N + y^N + x^m y^m z)^{a+b}. */
cp_report* cp_analyze(long N, long a, long b, const char* options_json);

/* Singularity resolution and claim audit only. */
cp_report* cp_resolve(long N, long a, long b, const char* options_json);

/* Ruled-surface replay only; the report carries the full step trace. */
cp_report* cp_surface(long N, long a, long b, const char* options_json);

/* Orbifold fundamental group of the genus-0 orbifold with the given cone
 * multiplicities (each >= 2) and puncture count. */
cp_report* cp_orbifold(const long* cone_multiplicities, size_t cone_count, long punctures,
                       const char* options_json);

/* The pencil of (p,q)-torus curves: multiple-fiber certificate plus the
 * orbifold group of its base. */
cp_report* cp_orbifold_pencil(long p, long q, const char* options_json);

/* Abelianization and finite-quotient fingerprint of a presentation given in
 * the text format "< a b | a^2, b^3, (a b)^5 >". */
cp_report* cp_group_fingerprint(const char* presentation, const char* options_json);

cp_status cp_report_status(const cp_report* report);
/* Canonical JSON document; NULL only when the computation never produced one. */
const char* cp_report_json(const cp_report* report);
/* Human-readable rendering derived from the JSON document. */
const char* cp_report_text(cp_report* report);
/* Empty string when the status is CP_OK or CP_MISMATCH. */
const char* cp_report_error(const cp_report* report);
void cp_report_free(cp_report* report);

/* Apply a braid word ("s1 s2^-1") to a free word ("m1 m2") by the Hurwitz
 * action on `strands` strands.  Returns a fresh string, to be released with
 * cp_string_free; NULL on error with the status set. */
char* cp_braid_act(long strands, const char* braid_word, const char* free_word, cp_status* status);

void cp_string_free(char* s);

const char* cp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CURVEPI_H */
