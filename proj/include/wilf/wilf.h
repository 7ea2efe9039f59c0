#ifndef WILF_H
#define WILF_H

/*
 * C interface to the prefix-scheme engine for pattern-avoiding permutations.
 *
 * Conventions:
 *  - Every fallible call returns a wilf_status; on anything but WILF_OK the
 *    calling thread's wilf_last_error() describes the problem.
 *  - Strings returned through char** out-parameters are heap allocated and
 *    must be released with wilf_string_free().
 *  - Pattern sets use the text forms "123,132" or "[[1,2,3],[1,3,2]]"; the
 *    empty string is the empty set. Permutations use "2413" or "[2,4,1,3]".
 *  - Counts cross the boundary as decimal strings (they outgrow 64 bits).
 *  - A wilf_scheme handle caches counting work and must not be used from
 *    two threads at once; distinct handles are independent.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(WILF_BUILDING)
#    define WILF_API __declspec(dllexport)
#  else
#    define WILF_API __declspec(dllimport)
#  endif
#else
#  define WILF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wilf_status {
  WILF_OK = 0,
  WILF_NOT_FOUND = 1, /* honest negative result: no scheme, no recurrence */
  WILF_INVALID_INPUT = 2,
  WILF_PARSE_ERROR = 3,
  WILF_INTEGRITY_ERROR = 4,
  WILF_INTERNAL_ERROR = 5
} wilf_status;

typedef enum wilf_mode {
  WILF_MODE_CERTIFIED = 0,
  WILF_MODE_EMPIRICAL = 1
} wilf_mode;

typedef struct wilf_scheme wilf_scheme;

typedef struct wilf_search_options {
  int max_depth;  /* >= 1; default 4 */
  wilf_mode mode; /* default WILF_MODE_CERTIFIED */
  int horizon;    /* empirical test length; default 8 */
  int symmetries; /* nonzero: also try symmetry images */
  int explain;    /* nonzero: fill *proof_log (certified mode only) */
} wilf_search_options;

WILF_API void wilf_search_options_init(wilf_search_options* options);

WILF_API const char* wilf_last_error(void);
WILF_API const char* wilf_status_name(wilf_status status);
WILF_API void wilf_string_free(char* s);

/* Discovery. On WILF_NOT_FOUND *out is set to NULL. proof_log may be NULL;
 * when options->explain is set it receives a JSON proof transcript, also on
 * WILF_NOT_FOUND. */
WILF_API wilf_status wilf_scheme_find(const char* patterns, const wilf_search_options* options,
                                      wilf_scheme** out, char** proof_log);
/* Parses and validates a scheme document. */
WILF_API wilf_status wilf_scheme_load(const char* document, wilf_scheme** out);
WILF_API void wilf_scheme_free(wilf_scheme* scheme);

WILF_API wilf_status wilf_scheme_document(const wilf_scheme* scheme, char** out);
/* Symmetry mapping the requested pattern set onto the scheme's own set
 * ("identity" for loaded documents). Static storage. */
WILF_API const char* wilf_scheme_symmetry(const wilf_scheme* scheme);
WILF_API int wilf_scheme_depth(const wilf_scheme* scheme);
/* Validation report plus oracle cross-check of n = 1..check_n as JSON;
 * *agrees is set to 1 when the scheme is well-formed and every term matches. */
WILF_API wilf_status wilf_scheme_verify(const wilf_scheme* scheme, int check_n, int* agrees, char** report);

WILF_API wilf_status wilf_count(wilf_scheme* scheme, int n, char** out);
/* Size of the prefix class sigma at size n with prefix values values[0..len). */
WILF_API wilf_status wilf_count_class(wilf_scheme* scheme, const char* sigma, int n, const int* values,
                                      size_t len, char** out);
/* Terms n = 1..length, newline separated. */
WILF_API wilf_status wilf_sequence(wilf_scheme* scheme, int length, char** out);

/* Recurrence guessing over whitespace/comma separated decimal terms (brackets
 * are ignored). *out receives the JSON candidate. WILF_NOT_FOUND when no
 * candidate survives the held-out check. */
WILF_API wilf_status wilf_guess(const char* terms, int max_order, int max_degree, int guard, char** out);

/* Brute force. */
WILF_API wilf_status wilf_oracle_count(const char* patterns, int n, char** out);
/* Avoiders of length n, one per line; sigma may be NULL or "" for no prefix
 * constraint, otherwise values[0..len) are the prefix values. */
WILF_API wilf_status wilf_oracle_members(const char* patterns, int n, const char* sigma, const int* values,
                                         size_t len, char** out);

#ifdef __cplusplus
}
#endif

#endif
