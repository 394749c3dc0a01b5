#ifndef FACTUALIS_H
#define FACTUALIS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FactStatus {
  FACT_STATUS_OK = 0,
  FACT_STATUS_NULL_ARG = 1,
  FACT_STATUS_INVALID_UTF8 = 2,
  FACT_STATUS_PARSE = 3,
  FACT_STATUS_IO = 4,
  // The lexicon file had rejected rows or a bad header.
  FACT_STATUS_LOAD = 5,
  FACT_STATUS_PROJECTION = 6,
  FACT_STATUS_UNKNOWN_REPORT = 7,
  // The signature is NA or UNGR where a graded one is required.
  FACT_STATUS_NOT_SIGNATURE = 8,
  FACT_STATUS_PANIC = 99,
} FactStatus;

typedef enum FactMapping {
  FACT_MAPPING_PAPER = 0,
  FACT_MAPPING_FINE = 1,
} FactMapping;

typedef enum FactPfvUnknown {
  FACT_PFV_UNKNOWN_WEAKER = 0,
  FACT_PFV_UNKNOWN_ERROR = 1,
} FactPfvUnknown;

typedef enum FactClassing {
  FACT_CLASSING_ANIM_FIRST = 0,
  FACT_CLASSING_INANIM_FIRST = 1,
} FactClassing;

// Opaque lexicon handle.
typedef struct FactLexicon FactLexicon;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread, or null. Valid until the
// next call into this library from the same thread.
const char *fact_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void fact_string_free(char *s);

// Builds a handle on the bundled seed lexicon.
//
// # Safety
// `out` must be a valid pointer.
enum FactStatus fact_lexicon_seed(struct FactLexicon **out);

// Loads a TSV lexicon. Any rejected row fails the load with `Load`.
//
// # Safety
// `path` must be a NUL-terminated string and `out` a valid pointer.
enum FactStatus fact_lexicon_load(const char *path, struct FactLexicon **out);

// # Safety
// `lex` must be null or a handle from this library, not yet freed.
void fact_lexicon_free(struct FactLexicon *lex);

// Number of readings, 0 for a null handle.
//
// # Safety
// `lex` must be null or a live handle.
size_t fact_lexicon_len(const struct FactLexicon *lex);

// Inferential class name of a signature such as `"1|-1"`.
//
// # Safety
// `sig` must be a NUL-terminated string and `out` a valid pointer.
enum FactStatus fact_signature_class(const char *sig, char **out);

// Strength level 0..5; NA and UNGR give 0.
//
// # Safety
// `sig` must be a NUL-terminated string and `out` a valid pointer.
enum FactStatus fact_signature_strength(const char *sig, uint8_t *out);

// Twelve-column factuality grid as two tab-separated lines: header, values.
//
// # Safety
// `sig` must be a NUL-terminated string and `out` a valid pointer.
enum FactStatus fact_grid(const char *sig, enum FactMapping mapping_mode, char **out);

// Projects a clause expression; one `event\tchain\tvalue` line per profile entry.
//
// # Safety
// `lex` must be a live handle, `expr` a NUL-terminated string and `out` a
// valid pointer.
enum FactStatus fact_project(const struct FactLexicon *lex,
                             const char *expr,
                             enum FactMapping mapping_mode,
                             enum FactPfvUnknown pfv_unknown,
                             char **out);

// Renders a statistics report by name, or every report for `"all"`.
//
// # Safety
// `lex` must be a live handle, `name` a NUL-terminated string and `out` a
// valid pointer.
enum FactStatus fact_stats(const struct FactLexicon *lex,
                           const char *name,
                           enum FactClassing classing,
                           bool as_tsv,
                           char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FACTUALIS_H */
