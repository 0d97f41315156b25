#ifndef HOPFDUAL_H
#define HOPFDUAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes; the numeric values match the CLI exit codes where they overlap.
 */
typedef enum HdStatus {
  HD_STATUS_OK = 0,
  /**
   * A structure failed verification.
   */
  HD_STATUS_VERIFICATION_FAILED = 1,
  /**
   * Malformed input, schema error or bad parameters.
   */
  HD_STATUS_INVALID_INPUT = 2,
  HD_STATUS_NULL_POINTER = 3,
  HD_STATUS_INVALID_UTF8 = 4,
  /**
   * The handle has the wrong kind for this call.
   */
  HD_STATUS_WRONG_KIND = 5,
  HD_STATUS_PANIC = 6,
} HdStatus;

/**
 * A verified partial dualization datum.
 */
typedef struct HdDatum HdDatum;

/**
 * A verified Hopf algebra.
 */
typedef struct HdHopf HdHopf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. Valid until the next
 * failing call on the same thread.
 */
const char *hd_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void hd_string_free(char *s);

/**
 * Loads and verifies a Hopf algebra document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum HdStatus hd_hopf_from_json(const char *json, struct HdHopf **out);

/**
 * Builds a Hopf algebra preset, e.g. `("hat-taft", "4,2,2")`.
 *
 * # Safety
 * `name` and `params` must be NUL-terminated strings; `out` must be writable.
 */
enum HdStatus hd_hopf_from_preset(const char *name, const char *params, struct HdHopf **out);

/**
 * Dimension of the algebra, or 0 for NULL.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
size_t hd_hopf_dim(const struct HdHopf *h);

/**
 * The canonical JSON document; free with [`hd_string_free`].
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HdStatus hd_hopf_to_json(const struct HdHopf *h, char **out);

/**
 * # Safety
 * `h` must be NULL or a handle not yet freed.
 */
void hd_hopf_free(struct HdHopf *h);

/**
 * Loads and verifies a dualization datum document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum HdStatus hd_datum_from_json(const char *json, struct HdDatum **out);

/**
 * Builds a datum preset, e.g. `("taft-datum", "4,2,2")` or `("s3-datum", "")`.
 *
 * # Safety
 * `name` and `params` must be NUL-terminated strings; `out` must be writable.
 */
enum HdStatus hd_datum_from_preset(const char *name, const char *params, struct HdDatum **out);

/**
 * # Safety
 * `d` must be NULL or a handle not yet freed.
 */
void hd_datum_free(struct HdDatum *d);

/**
 * Partially dualizes the datum; the result is a new Hopf handle.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum HdStatus hd_dualize(const struct HdDatum *d, struct HdHopf **out);

/**
 * Dualizes twice and checks the isomorphism back to `H`; `HD_STATUS_OK`
 * means every check passed.
 *
 * # Safety
 * `d` must be a live handle.
 */
enum HdStatus hd_check_involutive(const struct HdDatum *d);

/**
 * Runs a CLI command line (`argv[0]` is the program name) and returns its
 * exit code. When `out` is not NULL it receives the printed report, to be
 * freed with [`hd_string_free`].
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings.
 */
int32_t hd_run_command(int32_t argc, const char *const *argv, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HOPFDUAL_H */
