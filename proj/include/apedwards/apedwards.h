#ifndef APEDWARDS_H
#define APEDWARDS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define APE_API __declspec(dllexport)
#else
#define APE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every result is a JSON document returned through char** out; release it
   with ape_string_free. Rationals are passed as strings "p" or "p/q". */

typedef enum ape_status {
  APE_OK = 0,
  APE_INVALID_ARGUMENT = 1,
  APE_PARSE = 2,
  APE_ZERO_DENOMINATOR = 3,
  APE_DIVISION_BY_ZERO = 4,
  APE_FIELD_MISMATCH = 5,
  APE_TRIVIAL_POINT = 6,
  APE_DEGENERATE_PARAMETER = 7,
  APE_POLE = 8,
  APE_DEGENERATE = 9,
  APE_EXCEPTIONAL_PAIR = 10,
  APE_NOT_ON_CURVE = 11,
  APE_UNSUPPORTED = 12,
  APE_IO = 13,
  APE_INTERNAL = 14
} ape_status;

typedef struct ape_context ape_context;

APE_API ape_context* ape_context_new(void);
APE_API void ape_context_free(ape_context* ctx);
/* Message of the last failed call on ctx ("" if none). Owned by ctx. */
APE_API const char* ape_last_error(const ape_context* ctx);
APE_API const char* ape_status_name(ape_status status);
APE_API const char* ape_version(void);
APE_API void ape_string_free(char* s);

/* Progression kind, index sets and moduli object of AP_m(a, q). */
APE_API ape_status ape_classify(ape_context* ctx, const char* a, const char* q, long m, char** out);

/* Certificate for the marked point of E_ijk(a, q). ref_a / ref_b optionally
   name a short model y^2 = x^3 + A x + B to run Nagell-Lutz in (both or
   neither). */
APE_API ape_status ape_certify(ape_context* ctx, const char* a, const char* q, const long* ijk,
                               const char* ref_a, const char* ref_b, char** out);

/* Up to `samples` values of d. With indices == NULL (m, a, q) are
   classified; otherwise the literal (a, q) and the given indices are used. */
APE_API ape_status ape_find_d(ape_context* ctx, const char* a, const char* q, long m, long samples,
                              const long* indices, size_t n_indices, char** out);

/* Re-derives the fixture. groups is a comma-separated filter or NULL.
   *passed is set to 1 when there is no mismatch. */
APE_API ape_status ape_verify_tables(ape_context* ctx, const char* fixture_path, const char* groups,
                                     long q_list_bound, unsigned workers, char** out, int* passed);

typedef void (*ape_progress_fn)(const char* q, size_t points, void* user);

typedef struct ape_search_options {
  long bound;
  unsigned workers;
  unsigned shards;     /* 0: automatic */
  unsigned max_shards; /* stop early after this many shards (or q values); 0: no limit */
  const char* checkpoint_path; /* NULL: none */
  ape_progress_fn progress;    /* scan only; may be NULL */
  void* progress_user;
} ape_search_options;

APE_API void ape_search_options_init(ape_search_options* opts);

/* kind "central" or "non-central": D_1234 at q (a ignored). kind "indices":
   C_S over the literal (a, q) with the given indices. */
APE_API ape_status ape_search_model(ape_context* ctx, const char* kind, const char* a, const char* q,
                                    const long* indices, size_t n_indices, const ape_search_options* opts,
                                    char** out);

/* D_1234 over every admissible q of height <= q_height; scan == 0 only
   counts. */
APE_API ape_status ape_search_scan(ape_context* ctx, const char* kind, long q_height, int scan,
                                   const ape_search_options* opts, char** out);

/* Number of positive rationals of height <= height. */
APE_API ape_status ape_count_q(ape_context* ctx, long height, uint64_t* total);

#ifdef __cplusplus
}
#endif

#endif
