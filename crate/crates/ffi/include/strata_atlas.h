#ifndef STRATA_ATLAS_H
#define STRATA_ATLAS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stddef.h>
#include <stdint.h>

/*
 Status codes returned by every fallible function.
 */
typedef enum SaStatus {
  SA_STATUS_OK = 0,
  SA_STATUS_NULL_POINTER = 1,
  SA_STATUS_INVALID_ARGUMENT = 2,
  SA_STATUS_CAP_EXCEEDED = 3,
  SA_STATUS_UTF8 = 4,
  SA_STATUS_MISMATCH = 5,
  SA_STATUS_INTERNAL = 6,
  SA_STATUS_PANIC = 7,
} SaStatus;

/*
 A group, level and admissible set, ready for queries.
 */
typedef struct SaSession SaSession;

/*
 Stratum counts of a session.
 */
typedef struct SaCounts {
  size_t admissible;
  size_t ekor;
  size_t kr;
  size_t newton;
  uint64_t components;
} SaCounts;

/*
 Opens a session for GSp(2g) at `level` (comma-separated indices, e.g.
 `"0,1"`); a null `level` selects the Iwahori level.

 # Safety
 `level` must be null or a valid C string; `out` must be a valid pointer.
 */
enum SaStatus sa_session_new(uint32_t g, const char *level, struct SaSession **out);

/*
 Releases a session. Null is ignored.

 # Safety
 `session` must be null or come from [`sa_session_new`] and not be freed twice.
 */
void sa_session_free(struct SaSession *session);

/*
 Fills `out` with the stratum counts of the session.

 # Safety
 `session` and `out` must be valid pointers.
 */
enum SaStatus sa_session_counts(const struct SaSession *session, struct SaCounts *out);

/*
 Renders an artifact (`"adm"`, `"ekor"`, `"kr"`, `"hasse-ekor"`,
 `"hasse-kr"`, `"newton"`, `"zip"`, `"summary"`) in `format` (`"md"`,
 `"json"` or `"dot"`; null means `"md"`).

 # Safety
 `session` and `out` must be valid pointers; `artifact` and `format` must be
 null or valid C strings. Free `*out` with [`sa_string_free`].
 */
enum SaStatus sa_session_render(const struct SaSession *session,
                                const char *artifact,
                                const char *format,
                                char **out);

/*
 Runs the full self-check for GSp(2g) and writes its report to `out`.
 Returns [`SaStatus::Mismatch`] (with the report still written) when any
 check fails.

 # Safety
 `out` must be a valid pointer. Free `*out` with [`sa_string_free`].
 */
enum SaStatus sa_selfcheck(uint32_t g, char **out);

/*
 The JSON schema describing every JSON output.

 # Safety
 `out` must be a valid pointer. Free `*out` with [`sa_string_free`].
 */
enum SaStatus sa_json_schema(char **out);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a string produced by this library, freed once.
 */
void sa_string_free(char *s);

/*
 The message of the last failed call on this thread, or null. The pointer
 stays valid until the next call into this library on the same thread.
 */
const char *sa_last_error_message(void);

/*
 Library version as a static C string.
 */
const char *sa_version(void);

#endif  /* STRATA_ATLAS_H */
