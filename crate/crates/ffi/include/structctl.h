#ifndef STRUCTCTL_H
#define STRUCTCTL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Decision procedure for [`sc_check`].
 */
typedef enum ScMethod {
  SC_METHOD_PBH = 0,
  SC_METHOD_KALMAN = 1,
  SC_METHOD_MATROID = 2,
} ScMethod;

/**
 * Result of every fallible call.
 */
typedef enum ScStatus {
  SC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  SC_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  SC_STATUS_INVALID_UTF8 = 2,
  /**
   * A file could not be read or written.
   */
  SC_STATUS_IO = 3,
  /**
   * Malformed JSON, expression or parameter list.
   */
  SC_STATUS_PARSE = 4,
  /**
   * Inconsistent dimensions, labels, partitions or spaces.
   */
  SC_STATUS_SHAPE = 5,
  /**
   * A configured enumeration limit was reached.
   */
  SC_STATUS_LIMIT = 6,
  /**
   * Division by zero or evaluation at a pole.
   */
  SC_STATUS_ARITHMETIC = 7,
  /**
   * An internal panic was caught at the boundary.
   */
  SC_STATUS_PANIC = 8,
} ScStatus;

/**
 * Controllability verdict.
 */
typedef enum ScVerdict {
  SC_VERDICT_CONTROLLABLE = 0,
  SC_VERDICT_NOT_CONTROLLABLE = 1,
  SC_VERDICT_CERTIFIED = 2,
  SC_VERDICT_INCONCLUSIVE = 3,
} ScVerdict;

/**
 * A certificate tied to the system it was built for.
 */
typedef struct ScCertificate ScCertificate;

/**
 * A parsed system together with the row partition from its file, if any.
 */
typedef struct ScSystem ScSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *sc_last_error(void);

/**
 * Parses a system document.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ScStatus sc_system_from_json(const char *json, struct ScSystem **out);

/**
 * Loads a system document from a file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum ScStatus sc_system_load(const char *path, struct ScSystem **out);

/**
 * Serializes a system back to a document.
 *
 * # Safety
 * `sys` must come from this library; `out` must be a valid pointer.
 */
enum ScStatus sc_system_to_json(const struct ScSystem *sys, char **out);

/**
 * Releases a system; null is ignored.
 *
 * # Safety
 * `sys` must come from this library and not be used afterwards.
 */
void sc_system_free(struct ScSystem *sys);

/**
 * State and input dimensions.
 *
 * # Safety
 * All pointers must be valid.
 */
enum ScStatus sc_system_dims(const struct ScSystem *sys, size_t *n, size_t *m);

/**
 * Runs one decision procedure with default options. The matroid method uses
 * the partition from the system document, or singletons.
 *
 * # Safety
 * `sys` must come from this library; `verdict` must be a valid pointer.
 */
enum ScStatus sc_check(const struct ScSystem *sys, enum ScMethod method, enum ScVerdict *verdict);

/**
 * Runs every procedure and returns the JSON report also printed by
 * `structctl check --json`.
 *
 * # Safety
 * `sys` must come from this library; `out` must be a valid pointer.
 */
enum ScStatus sc_report_json(const struct ScSystem *sys, char **out);

/**
 * Searches for a certificate. `partition` uses the `1,2;3,4` syntax and may
 * be null to use the document partition or singletons. On success
 * `verdict` is set and `out` receives a certificate, or null when none was
 * found.
 *
 * # Safety
 * `sys` must come from this library; `partition` must be null or a
 * NUL-terminated string; `verdict` and `out` must be valid pointers.
 */
enum ScStatus sc_certificate_search(const struct ScSystem *sys,
                                    const char *partition,
                                    enum ScVerdict *verdict,
                                    struct ScCertificate **out);

/**
 * Serializes a certificate document.
 *
 * # Safety
 * `cert` must come from this library; `out` must be a valid pointer.
 */
enum ScStatus sc_certificate_to_json(const struct ScCertificate *cert, char **out);

/**
 * Parses a certificate document against the system it refers to.
 *
 * # Safety
 * `sys` must come from this library; `json` must be a NUL-terminated
 * string; `out` must be a valid pointer.
 */
enum ScStatus sc_certificate_from_json(const struct ScSystem *sys,
                                       const char *json,
                                       struct ScCertificate **out);

/**
 * Releases a certificate; null is ignored.
 *
 * # Safety
 * `cert` must come from this library and not be used afterwards.
 */
void sc_certificate_free(struct ScCertificate *cert);

/**
 * Recomputes every clause of a certificate. `valid` is set to whether all
 * hold; the failed clauses, if any, are left in [`sc_last_error`] as
 * newline-separated text even though the call itself succeeds.
 *
 * # Safety
 * `sys` and `cert` must come from this library; `valid` must be a valid pointer.
 */
enum ScStatus sc_verify(const struct ScSystem *sys, const struct ScCertificate *cert, bool *valid);

/**
 * Parallel composition of `count` systems over the same parameters and with
 * the same number of inputs.
 *
 * # Safety
 * `systems` must point to `count` handles from this library; `out` must be
 * a valid pointer.
 */
enum ScStatus sc_compose_parallel(const struct ScSystem *const *systems,
                                  size_t count,
                                  struct ScSystem **out);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void sc_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* STRUCTCTL_H */
