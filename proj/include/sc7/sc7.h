/*
 * C interface to the sc7 library: self-conjugate 7-core partition counts,
 * Hurwitz class numbers and the q-series / lattice / class-number routes
 * connecting them.
 *
 * Conventions
 *   - Every function that can fail returns an sc7_status. On failure the
 *     message for the calling thread is available from sc7_last_error().
 *   - Exact values (rationals, big integers) are returned as NUL-terminated
 *     decimal strings "p/q" or "k", allocated by the library and released
 *     with sc7_string_free().
 *   - Opaque handles are created by *_create / builder functions and released
 *     by the matching *_destroy function; destroy functions accept NULL.
 *   - A handle may be used from one thread at a time. Functions that take no
 *     handle are safe to call concurrently.
 */
#ifndef SC7_SC7_H
#define SC7_SC7_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SC7_BUILDING_LIBRARY)
#    define SC7_API __declspec(dllexport)
#  else
#    define SC7_API __declspec(dllimport)
#  endif
#else
#  define SC7_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the CLI exit codes. */
typedef enum sc7_status {
  SC7_OK = 0,
  SC7_ERR_USAGE = 1,      /* malformed argument, unknown name, NULL pointer */
  SC7_ERR_HYPOTHESIS = 2, /* a mathematical precondition of the request fails */
  SC7_ERR_INTERNAL = 4
} sc7_status;

typedef enum sc7_route {
  SC7_ROUTE_ENUM = 0,    /* enumeration of self-conjugate 7-cores */
  SC7_ROUTE_QSERIES = 1, /* product generating function */
  SC7_ROUTE_ETA = 2,     /* eta quotient */
  SC7_ROUTE_THETA = 3,   /* ternary theta decomposition */
  SC7_ROUTE_THEOREM = 4, /* Hurwitz class number of -D_n */
  SC7_ROUTE_COR2 = 5     /* Dirichlet character sum */
} sc7_route;

typedef struct sc7_context sc7_context;
typedef struct sc7_forms sc7_forms;
typedef struct sc7_series sc7_series;
typedef struct sc7_report sc7_report;

SC7_API const char* sc7_version(void);
SC7_API const char* sc7_last_error(void);
SC7_API void sc7_string_free(char* s);

SC7_API const char* sc7_route_name(sc7_route route);
SC7_API sc7_status sc7_route_from_name(const char* name, sc7_route* out);

/* Evaluation context: caches the series routes between calls. */
SC7_API sc7_status sc7_context_create(sc7_context** out);
SC7_API void sc7_context_destroy(sc7_context* ctx);
/* sc_7(n) along the given route. SC7_ERR_HYPOTHESIS when n is outside the
 * route's domain (e.g. theorem route with even n or n = 5 mod 7). */
SC7_API sc7_status sc7_context_value(sc7_context* ctx, int64_t n, sc7_route route, char** value_out);

/* D_n and epsilon(n) for odd n >= 1. */
SC7_API sc7_status sc7_discriminant(int64_t n, int64_t* D_out, int* epsilon_out);

/* sc_7((n + 2) f^2 - 2) through the multiplicative scaling formula. */
SC7_API sc7_status sc7_scale(int64_t n, int64_t f, char** value_out);

/* Number of t-core partitions of n (all partitions, not only self-conjugate). */
SC7_API sc7_status sc7_core_count(int32_t n, int32_t t, int64_t* out);

/* Hurwitz class number H(-D); D > 0 with -D = 0 or 1 mod 4. */
SC7_API sc7_status sc7_hurwitz(int64_t D, char** value_out);

/* Reduced binary quadratic forms of discriminant -D, sorted by (a, b, c). */
SC7_API sc7_status sc7_forms_create(int64_t D, sc7_forms** out);
SC7_API void sc7_forms_destroy(sc7_forms* forms);
SC7_API size_t sc7_forms_count(const sc7_forms* forms);
SC7_API sc7_status sc7_forms_get(const sc7_forms* forms, size_t index, int64_t* a, int64_t* b, int64_t* c);

/* Truncated q-series. which: 1, 2, 3 select the theta series of Q1, Q2, Q3. */
SC7_API sc7_status sc7_series_scgen(int32_t t, int32_t precision, sc7_series** out);
SC7_API sc7_status sc7_series_eta_sc7(int32_t precision, sc7_series** out);
SC7_API sc7_status sc7_series_theta(int32_t which, int32_t precision, sc7_series** out);
SC7_API void sc7_series_destroy(sc7_series* series);
SC7_API int32_t sc7_series_precision(const sc7_series* series);
SC7_API sc7_status sc7_series_coefficient(const sc7_series* series, int32_t k, char** value_out);
/* JSON array of coefficient strings. */
SC7_API sc7_status sc7_series_to_json(const sc7_series* series, char** json_out);

/* Verification checks. */
SC7_API size_t sc7_check_count(void);
SC7_API const char* sc7_check_name(size_t index);
/* max < 0 selects the check's default bound. A failed check is reported
 * through the report, not the status. */
SC7_API sc7_status sc7_verify(const char* check, int64_t max, sc7_report** out);
SC7_API void sc7_report_destroy(sc7_report* report);
SC7_API int sc7_report_passed(const sc7_report* report);
SC7_API int64_t sc7_report_cases(const sc7_report* report);
/* "OK <cases> cases" or "FAIL <check> at <where>: lhs=... rhs=...";
 * owned by the report. */
SC7_API const char* sc7_report_summary(const sc7_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SC7_SC7_H */
