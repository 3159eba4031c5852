#ifndef HUPKIT_H
#define HUPKIT_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of a toolkit call.
 */
typedef enum HupStatus {
  /**
   * decided: uniqueness holds
   */
  HUP_OK_HUP = 0,
  /**
   * decided: an annihilating pair exists (or verification failed)
   */
  HUP_OK_NOT_HUP = 1,
  /**
   * undecided within the configured budgets
   */
  HUP_OK_UNKNOWN = 2,
  /**
   * unreadable or malformed JSON input
   */
  HUP_ERR_BAD_INPUT = 64,
  /**
   * certificate does not match the instance
   */
  HUP_ERR_MISMATCH = 65,
  /**
   * light-like direction: the single-hyperplane rule applies
   */
  HUP_ERR_LIGHT_LIKE = 66,
  /**
   * internal failure
   */
  HUP_ERR_INTERNAL = 70,
  /**
   * a required pointer argument was null
   */
  HUP_ERR_NULL_ARG = 71,
} HupStatus;

/**
 * Opaque decision handle owning the canonical JSON document.
 */
typedef struct HupDecision HupDecision;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Decide a cross instance from its JSON encoding.
 *
 * On success `*out` owns the decision; release it with
 * [`hupkit_decision_free`].
 *
 * # Safety
 * `instance_json` must be a valid NUL-terminated UTF-8 string and `out` a
 * valid pointer.
 */
enum HupStatus hupkit_decide_json(const char *instance_json, struct HupDecision **out);

/**
 * Decide a light-cone / two-hyperplane instance from its JSON encoding.
 *
 * # Safety
 * `instance_json` must be a valid NUL-terminated UTF-8 string and `out` a
 * valid pointer.
 */
enum HupStatus hupkit_cone_json(const char *instance_json, struct HupDecision **out);

/**
 * Replay a certificate against an instance; the handle's verdict is 0 when
 * the verification passes and 1 otherwise.
 *
 * # Safety
 * Both strings must be valid NUL-terminated UTF-8 and `out` a valid pointer.
 */
enum HupStatus hupkit_verify_json(const char *certificate_json,
                                  const char *instance_json,
                                  struct HupDecision **out);

/**
 * Verdict behind a handle: 0 uniqueness (or verification pass), 1
 * counterexample (or failure), 2 undecided; -1 for a null handle.
 *
 * # Safety
 * `handle` must be null or a pointer returned by this library.
 */
int hupkit_decision_verdict(const struct HupDecision *handle);

/**
 * Canonical JSON document behind a handle.  The pointer stays valid until
 * the handle is freed; returns null for a null handle.
 *
 * # Safety
 * `handle` must be null or a pointer returned by this library.
 */
const char *hupkit_decision_document(const struct HupDecision *handle);

/**
 * Release a decision handle (null is a no-op).
 *
 * # Safety
 * `handle` must be null or an owned pointer returned by this library, and
 * must not be used afterwards.
 */
void hupkit_decision_free(struct HupDecision *handle);

/**
 * Library version as a static NUL-terminated string.
 */
const char *hupkit_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HUPKIT_H */
