/* C interface to the galchar library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Functions returning gc_status leave a thread-local message readable via
 * gc_last_error() on failure. Strings returned through char** belong to the
 * caller and are released with gc_string_free().
 */
#ifndef GALCHAR_GALCHAR_H
#define GALCHAR_GALCHAR_H

#include <stddef.h>

#if defined(_WIN32)
#define GC_API __declspec(dllexport)
#else
#define GC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gc_status {
  GC_OK = 0,
  GC_ERR_PARSE = 1,     /* malformed input text */
  GC_ERR_DOMAIN = 2,    /* input outside an operation's domain */
  GC_ERR_SIZE = 3,      /* a size cap was exceeded */
  GC_ERR_INVARIANT = 4, /* an internal verification failed */
  GC_ERR_SCOPE = 5,     /* request outside what the library computes */
  GC_ERR_ARGUMENT = 6,  /* null pointer or invalid enum value */
  GC_ERR_INTERNAL = 7
} gc_status;

typedef enum gc_format { GC_FORMAT_TEXT = 0, GC_FORMAT_STRUCTURED = 1 } gc_format;

typedef struct gc_group gc_group;
typedef struct gc_table gc_table;

GC_API const char* gc_version(void);
GC_API const char* gc_last_error(void);
GC_API const char* gc_status_name(gc_status status);
GC_API void gc_string_free(char* s);

/* element_cap = 0 selects the default cap. */
GC_API gc_status gc_group_parse(const char* spec, size_t element_cap, gc_group** out);
GC_API void gc_group_free(gc_group* group);
GC_API size_t gc_group_order(const gc_group* group);
GC_API unsigned gc_group_exponent(const gc_group* group);
/* Canonical rendering of the group specification. */
GC_API gc_status gc_group_spec(const gc_group* group, char** out);

GC_API gc_status gc_table_compute(const gc_group* group, gc_table** out);
GC_API void gc_table_free(gc_table* table);
GC_API size_t gc_table_size(const gc_table* table);
/* Exact entry over its smallest cyclotomic field, e.g. "-1*z^2 - 1*z^3 @5" or "-1". */
GC_API gc_status gc_table_entry(const gc_table* table, size_t row, size_t cls, char** out);
/* Replaces one entry (parsed from the text grammar), producing a new table. */
GC_API gc_status gc_table_with_entry(const gc_table* table, size_t row, size_t cls, const char* value,
                                     gc_table** out);
/* *passed = 1 when every consistency check holds. */
GC_API gc_status gc_table_verify(const gc_table* table, int* passed);
/* *compatible = 1 when the Galois action by ell is consistent with the table. */
GC_API gc_status gc_table_galois_compatible(const gc_table* table, long long ell, int* compatible);

GC_API gc_status gc_pair_class_count(const gc_group* group, size_t* out);
GC_API gc_status gc_tuple_class_count(const gc_group* group, unsigned n, size_t* out);

GC_API gc_status gc_report_table(const gc_group* group, gc_format format, char** out);
/* all != 0 iterates every ell coprime to the exponent; otherwise uses ell. */
GC_API gc_status gc_report_galois(const gc_group* group, long long ell, int all, gc_format format, char** out);
GC_API gc_status gc_report_pairs(const gc_group* group, gc_format format, char** out);
/* pair and triple may be NULL; word uses letters s1 s2 s1^-1 s2^-1. */
GC_API gc_status gc_report_braid(const gc_group* group, const char* word, const char* pair, const char* triple,
                                 gc_format format, char** out);
/* kind is "cyclic" or "dihedral"; has_ell = 0 tabulates every unit. */
GC_API gc_status gc_report_cover(const char* kind, unsigned n, long long ell, int has_ell, gc_format format,
                                 char** out);
GC_API gc_status gc_report_tuples(const gc_group* group, unsigned n, gc_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GALCHAR_GALCHAR_H */
