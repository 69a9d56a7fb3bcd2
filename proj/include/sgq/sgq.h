/* C interface to the sgq library. Every call returning char** hands back a
 * newline-terminated JSON document owned by the caller; release it with
 * sg_string_free. On failure the out pointer is left untouched and
 * sg_last_error() describes the problem. */
#ifndef SGQ_SGQ_H
#define SGQ_SGQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(SGQ_BUILDING)
#define SGQ_API __attribute__((visibility("default")))
#else
#define SGQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_CHECK_FAILED = 1, /* JSON produced, but a checked property failed */
  SG_INVALID_ARGUMENT = 2,
  SG_PARSE_ERROR = 3,
  SG_INTERNAL = 4
} sg_status;

typedef struct sg_semigroup sg_semigroup;
typedef struct sg_element sg_element;
typedef struct sg_functional sg_functional;

SGQ_API sg_status sg_semigroup_create(const int64_t* gens, size_t count, sg_semigroup** out);
SGQ_API void sg_semigroup_destroy(sg_semigroup* s);
SGQ_API sg_status sg_semigroup_info_json(const sg_semigroup* s, char** out);

/* Parses an algebra expression; generators must lie in s. */
SGQ_API sg_status sg_element_parse(const sg_semigroup* s, const char* text, sg_element** out);
SGQ_API void sg_element_destroy(sg_element* x);

/* basis < 0 omits the basis images; otherwise the first `basis` members. */
SGQ_API sg_status sg_element_eval_json(const sg_element* x, int64_t basis, char** out);
SGQ_API sg_status sg_element_symbol_json(const sg_element* x, char** out);
SGQ_API sg_status sg_element_split_json(const sg_element* x, char** out);
SGQ_API sg_status sg_element_norm_json(const sg_element* x, size_t dim, char** out);
/* pairs < 0 omits the basis pair table. */
SGQ_API sg_status sg_element_coproduct_json(const sg_element* x, int64_t pairs, char** out);
SGQ_API sg_status sg_element_grouplike_json(const sg_element* x, char** out);
SGQ_API sg_status sg_element_haar_json(const sg_element* x, char** out);

SGQ_API sg_status sg_functional_parse(const sg_semigroup* s, const char* text, sg_functional** out);
SGQ_API void sg_functional_destroy(sg_functional* f);
SGQ_API sg_status sg_convolve_json(const sg_functional* f, const sg_functional* g, const sg_element* x, char** out);

/* has_mult == 0 tries every admissible multiplier up to 6. */
SGQ_API sg_status sg_morphism_json(const int64_t* from, size_t from_count, const int64_t* to, size_t to_count,
                                   int has_mult, int64_t mult, int max_len, char** out);

/* suite is one of the suite names or "all". */
SGQ_API sg_status sg_check_json(const sg_semigroup* s, const char* suite, char** out);

/* Message for the last failing call on this thread; "" if none. */
SGQ_API const char* sg_last_error(void);
/* Byte offset of the last parse error on this thread, or -1. */
SGQ_API int64_t sg_last_error_offset(void);

SGQ_API void sg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
