/*
 * qbethe -- exact verification of quantum-group monodromy identities.
 *
 * Stable C interface.  The library computes with exact rational
 * arithmetic and reports identity checks at deterministic, seeded
 * sample points.  All functions are thread-compatible: distinct
 * sessions may be used from distinct threads concurrently; a single
 * session must not be shared between threads without external locking.
 *
 * Ownership: objects returned through out-parameters are owned by the
 * caller and must be released with the matching *_destroy / qb_string_free.
 */
#ifndef QBETHE_H
#define QBETHE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes returned by every fallible entry point. */
typedef enum qb_status {
    QB_OK = 0,
    QB_ERR_INVALID_ARG = 1, /* structurally invalid input            */
    QB_ERR_DOMAIN = 2,      /* evaluation outside mathematical domain */
    QB_ERR_NOMEM = 3,       /* allocation failure                    */
    QB_ERR_INTERNAL = 4     /* unexpected internal failure           */
} qb_status;

/* A configuration handle: seed, sample counts, instance filters. */
typedef struct qb_session qb_session;

/* The outcome of running a verification suite. */
typedef struct qb_report qb_report;

/* Library version as "major.minor.patch". */
const char* qb_version(void);

/* --- session lifecycle -------------------------------------------------- */

qb_status qb_session_create(qb_session** out_session);
void qb_session_destroy(qb_session* session);

/* Human-readable message for the most recent failure on this session.
 * The pointer stays valid until the next call on the same session. */
const char* qb_session_last_error(const qb_session* session);

/* Integer options: "seed", "samples", "N", "n", "jobs".
 * Unset options keep their documented defaults (seed 0, samples 5,
 * jobs 1; N and n unset means "use each check's own instance list"). */
qb_status qb_session_set_int(qb_session* session, const char* key,
                             int64_t value);

/* String options: "flavor" ("trigA" | "trigB" | "rational" | "all"),
 * "sizes" (comma-separated, e.g. "2,1,1"), "caps" ("key=value,..."),
 * "format" ("json" | "text"). */
qb_status qb_session_set_string(qb_session* session, const char* key,
                                const char* value);

/* --- verification ------------------------------------------------------- */

/* Runs one suite: "rmatrix", "weightfn", "grid", "commutation",
 * "bethe-gt", "degeneration", "golden", or "all". */
qb_status qb_run_suite(qb_session* session, const char* suite,
                       qb_report** out_report);

/* 1 when every check in the report passed, 0 otherwise. */
int qb_report_all_passed(const qb_report* report);

/* Renders the report as "json" or "text".  The returned string must be
 * released with qb_string_free. */
qb_status qb_report_render(const qb_report* report, const char* format,
                           char** out_text);

void qb_report_destroy(qb_report* report);

/* --- single values ------------------------------------------------------ */

/* Evaluates one named quantity at explicit parameters and returns its
 * exact value as text.  Objects include "ikDet", "ikLeft", "ikRight",
 * "weightW", "fFunction", "rElement", "domainWall"; `params` is a
 * semicolon-separated list of name=value bindings with exact rational
 * values ("q=2;u1=3;v1=5/7;...").  The returned string must be released
 * with qb_string_free. */
qb_status qb_compute_value(qb_session* session, const char* object,
                           const char* params, char** out_text);

void qb_string_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QBETHE_H */
