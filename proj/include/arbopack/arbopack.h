/*
 * arbopack C API.
 *
 * Packing k edge- and arc-disjoint spanning mixed arborescences with
 * per-vertex root bounds. Instances and results are opaque handles; every
 * result carries a JSON document and a human-readable rendering.
 *
 * Status codes double as the CLI exit codes.
 */
#ifndef ARBOPACK_H
#define ARBOPACK_H

#include <stddef.h>

#if defined(_WIN32)
#define ARBOPACK_API __declspec(dllexport)
#elif defined(__GNUC__)
#define ARBOPACK_API __attribute__((visibility("default")))
#else
#define ARBOPACK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arbopack_status {
  ARBOPACK_OK = 0,             /* feasible / packing found / packing valid */
  ARBOPACK_NEGATIVE = 1,       /* infeasible / no packing / packing invalid */
  ARBOPACK_ERR_INPUT = 2,      /* malformed or inconsistent input */
  ARBOPACK_ERR_CAPACITY = 3,   /* size limit exceeded */
  ARBOPACK_ERR_INTERNAL = 4    /* internal-consistency failure */
} arbopack_status;

typedef struct arbopack_instance arbopack_instance;
typedef struct arbopack_result arbopack_result;

typedef struct arbopack_options {
  /* Largest |V| for exhaustive scans; 0 selects the default (10). */
  unsigned max_n;
  /* -1: automatic (on for |V| <= 8), 0: off, 1: on. */
  int paranoid;
  /* Nonzero: attach the orientation step log to solve output. */
  int trace;
} arbopack_options;

ARBOPACK_API const char* arbopack_version(void);
ARBOPACK_API const char* arbopack_status_string(arbopack_status status);

/* Message of the last failed call on this thread ("" if none). */
ARBOPACK_API const char* arbopack_last_error(void);

ARBOPACK_API void arbopack_options_init(arbopack_options* options);

/* Parses an instance document. On failure *out is NULL. */
ARBOPACK_API arbopack_status arbopack_instance_load(const char* json, size_t length, arbopack_instance** out);
ARBOPACK_API void arbopack_instance_free(arbopack_instance* instance);
ARBOPACK_API size_t arbopack_instance_vertex_count(const arbopack_instance* instance);

/*
 * Operations. On OK / NEGATIVE, *out receives the result. On an error
 * status *out receives a result whose JSON is {"error": ..., "kind": ...}
 * (plus "diagnostics" for internal errors), or NULL if even that failed.
 * `options` may be NULL for defaults.
 */
ARBOPACK_API arbopack_status arbopack_check(const arbopack_instance* instance, const arbopack_options* options,
                                            arbopack_result** out);
ARBOPACK_API arbopack_status arbopack_solve(const arbopack_instance* instance, const arbopack_options* options,
                                            arbopack_result** out);
ARBOPACK_API arbopack_status arbopack_verify(const arbopack_instance* instance, const char* packing_json,
                                             size_t length, arbopack_result** out);
ARBOPACK_API arbopack_status arbopack_oracle(const arbopack_instance* instance, arbopack_result** out);
/* Type-1 laminarization trace of two disjoint set families (see README). */
ARBOPACK_API arbopack_status arbopack_pieo_trace(const char* json, size_t length, arbopack_result** out);

/* Owned by the result; valid until arbopack_result_free. */
ARBOPACK_API const char* arbopack_result_json(const arbopack_result* result);
ARBOPACK_API const char* arbopack_result_text(const arbopack_result* result);
ARBOPACK_API void arbopack_result_free(arbopack_result* result);

#ifdef __cplusplus
}
#endif

#endif /* ARBOPACK_H */
