#ifndef PSEUDOLIN_H
#define PSEUDOLIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(PL_BUILDING_LIBRARY)
#define PL_API __attribute__((visibility("default")))
#else
#define PL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pl_status {
    PL_OK = 0,
    PL_ERR_INVALID_ARGUMENT = 1,
    PL_ERR_PARSE = 2,
    PL_ERR_DOMAIN = 3,
    PL_ERR_INTERNAL = 4
} pl_status;

/* Message of the last failed call on this thread; never NULL. */
PL_API const char* pl_last_error(void);
PL_API const char* pl_version(void);
/* Strings returned through char** out parameters are released with this. */
PL_API void pl_string_free(char* s);

typedef struct pl_options {
    uint64_t seed;
    int certificate;
    int trials;
    int dx, dy;
    int order, degree, factors;
    int n, delta;
    int generic;
    int regular_infinity;
    int allow_improper;
    const char* instance; /* bounds-table: hermite, resolvent, lclm or symprod */
} pl_options;

PL_API void pl_options_init(pl_options* opt);

/* ---- reports of the command layer */

typedef struct pl_report pl_report;

PL_API pl_status pl_telescoper(const char* f, const pl_options* opt, pl_report** out);
PL_API pl_status pl_resolvent(const char* poly, const pl_options* opt, pl_report** out);
PL_API pl_status pl_lclm(const char* const* ops, size_t count, const pl_options* opt, pl_report** out);
PL_API pl_status pl_symprod(const char* const* ops, size_t count, const pl_options* opt, pl_report** out);
PL_API pl_status pl_bounds_table(const pl_options* opt, pl_report** out);
PL_API pl_status pl_check_props(const char* prop, const pl_options* opt, pl_report** out);

/* 1 when verification passed and no asserted bound was violated. */
PL_API int pl_report_ok(const pl_report* r);
/* Borrowed strings, valid until pl_report_free. */
PL_API const char* pl_report_text(const pl_report* r);
PL_API const char* pl_report_json(const pl_report* r);
/* Empty except for bounds-table. */
PL_API const char* pl_report_csv(const pl_report* r);
PL_API void pl_report_free(pl_report* r);

/* ---- operators */

typedef struct pl_operator pl_operator;

PL_API pl_status pl_operator_parse(const char* text, pl_operator** out);
PL_API pl_status pl_operator_to_string(const pl_operator* op, char** out);
/* -1 for the zero operator or a NULL handle. */
PL_API int pl_operator_order(const pl_operator* op);
PL_API pl_status pl_operator_lclm(const pl_operator* const* ops, size_t count, pl_operator** out);
PL_API pl_status pl_operator_symprod(const pl_operator* const* ops, size_t count, uint64_t seed, pl_operator** out);
PL_API void pl_operator_free(pl_operator* op);

/* ---- minimal relations of theta = d/dx + T */

typedef struct pl_relation pl_relation;

/* t holds n*n row-major rational functions of x, a holds n polynomials. */
PL_API pl_status pl_relation_solve(const char* const* t, const char* const* a, size_t n, pl_relation** out);
PL_API int pl_relation_order(const pl_relation* rel);
/* Coefficient eta_i as text, 0 <= i <= order. */
PL_API pl_status pl_relation_coeff(const pl_relation* rel, int i, char** out);
PL_API int pl_relation_verify(const pl_relation* rel);
PL_API void pl_relation_free(pl_relation* rel);

#ifdef __cplusplus
}
#endif

#endif
