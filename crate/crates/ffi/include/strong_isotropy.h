#ifndef STRONG_ISOTROPY_H
#define STRONG_ISOTROPY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every entry point.
 */
typedef enum SiStatus {
  SI_STATUS_OK = 0,
  SI_STATUS_NULL_POINTER = 1,
  SI_STATUS_INVALID_UTF8 = 2,
  SI_STATUS_USAGE_ERROR = 3,
  SI_STATUS_UNDECIDED = 4,
  SI_STATUS_RESOURCE_LIMIT = 5,
  SI_STATUS_PANIC = 6,
} SiStatus;

/**
 * Engine settings. Create with [`si_engine_new`].
 */
typedef struct SiEngine SiEngine;

/**
 * A diagonal quadratic form over the rationals.
 */
typedef struct SiQuadraticForm SiQuadraticForm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *si_last_error_message(void);

/**
 * Engine version as a static nul-terminated string.
 */
const char *si_version(void);

/**
 * New engine with the default enumeration cap.
 */
struct SiEngine *si_engine_new(void);

/**
 * # Safety
 * `engine` must come from [`si_engine_new`] and not be freed twice.
 */
void si_engine_free(struct SiEngine *engine);

/**
 * # Safety
 * `engine` must be a live handle.
 */
enum SiStatus si_engine_set_enumeration_cap(struct SiEngine *engine, size_t cap);

/**
 * Runs one JSON request and stores the JSON response in `*response`, to be
 * released with [`si_string_free`]. A response is produced for every
 * request that could be read; the return value mirrors its status.
 *
 * # Safety
 * `engine` must be live, `request` a nul-terminated string and `response`
 * writable.
 */
enum SiStatus si_run_json(const struct SiEngine *engine, const char *request, char **response);

/**
 * # Safety
 * `text` must come from this library and not be freed twice.
 */
void si_string_free(char *text);

/**
 * Parses a form literal such as `"1,-1,2/3"`.
 *
 * # Safety
 * `text` must be nul-terminated and `form` writable.
 */
enum SiStatus si_qform_parse(const char *text, struct SiQuadraticForm **form);

/**
 * # Safety
 * `form` must come from [`si_qform_parse`] and not be freed twice.
 */
void si_qform_free(struct SiQuadraticForm *form);

/**
 * Dimension of the form, 0 for a null handle.
 *
 * # Safety
 * `form` must be live or null.
 */
size_t si_qform_dimension(const struct SiQuadraticForm *form);

/**
 * Isotropy over the rationals.
 *
 * # Safety
 * `form` must be live and `out` writable.
 */
enum SiStatus si_qform_is_isotropic(const struct SiQuadraticForm *form, bool *out);

/**
 * Whether the signed discriminant is a square.
 *
 * # Safety
 * `form` must be live and `out` writable.
 */
enum SiStatus si_qform_discriminant_trivial(const struct SiQuadraticForm *form, bool *out);

/**
 * Whether the Witt (Clifford) invariant is split.
 *
 * # Safety
 * `form` must be live and `out` writable.
 */
enum SiStatus si_qform_witt_trivial(const struct SiQuadraticForm *form, bool *out);

/**
 * The Hilbert symbol `(a, b)_v` as +1 or -1. `place` is `"real"` or a
 * prime written in decimal.
 *
 * # Safety
 * `place` must be nul-terminated and `out` writable.
 */
enum SiStatus si_hilbert_symbol(int64_t a, int64_t b, const char *place, int8_t *out);

/**
 * Strong isotropy of `SL_m(D)/mu_d` with `ind(D) = ind_d`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SiStatus si_classify_type_a(uint64_t m, uint64_t ind_d, uint64_t d, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRONG_ISOTROPY_H */
