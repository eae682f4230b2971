#ifndef HYPERMORSE_H
#define HYPERMORSE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which simplicial complex [`hm_complex_json`] returns.
 */
typedef enum HmComplexMode {
  HM_COMPLEX_MODE_ASSOC = 0,
  HM_COMPLEX_MODE_LOWER = 1,
} HmComplexMode;

/**
 * Which hypergraph [`hm_morse_critical_json`] reads the Morse values on.
 */
typedef enum HmMorseHost {
  HM_MORSE_HOST_HYPER = 0,
  HM_MORSE_HOST_ASSOC = 1,
  HM_MORSE_HOST_LOWER = 2,
} HmMorseHost;

/**
 * Status codes. Values 1 to 5 match the exit codes of the command-line tool.
 */
typedef enum HmStatus {
  HM_STATUS_OK = 0,
  HM_STATUS_INTERNAL = 1,
  HM_STATUS_PARSE = 2,
  HM_STATUS_INVALID_DOCUMENT = 3,
  HM_STATUS_INVALID_MORPHISM = 4,
  HM_STATUS_SIZE_CAP = 5,
  HM_STATUS_NULL_ARGUMENT = 10,
  HM_STATUS_BUFFER_TOO_SMALL = 11,
} HmStatus;

/**
 * Opaque handle to a parsed hypergraph document.
 */
typedef struct HmHypergraph HmHypergraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a hypergraph document. On success `*out` owns a new handle.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum HmStatus hm_hypergraph_from_json(const char *json, struct HmHypergraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `h` must come from [`hm_hypergraph_from_json`] and not be used afterwards.
 */
void hm_hypergraph_free(struct HmHypergraph *h);

/**
 * Number of distinct hyperedges.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum HmStatus hm_hypergraph_edge_count(const struct HmHypergraph *h, size_t *out);

/**
 * Embedded Betti numbers in degrees `0..=dim Δℋ`.
 *
 * `coeff` is `"z"`, `"q"` or `"zp:<p>"`. `*len` receives the number of
 * degrees; if it exceeds `cap` nothing is written to `out` and the call returns
 * `BUFFER_TOO_SMALL`, so passing `cap = 0` queries the length.
 *
 * # Safety
 * `out` must point to `cap` writable `size_t` values (may be null when `cap` is 0).
 */
enum HmStatus hm_embedded_betti(const struct HmHypergraph *h,
                                const char *coeff,
                                size_t *out,
                                size_t cap,
                                size_t *len);

/**
 * The associated or lower-associated complex as a JSON result object.
 *
 * # Safety
 * `h` must be a live handle, `out` a valid pointer and `mode` a declared enumerator.
 */
enum HmStatus hm_complex_json(const struct HmHypergraph *h, enum HmComplexMode mode, char **out);

/**
 * Critical hyperedges of the document's Morse values on the chosen host, as JSON.
 *
 * # Safety
 * `h` must be a live handle, `out` a valid pointer and `on` a declared enumerator.
 */
enum HmStatus hm_morse_critical_json(const struct HmHypergraph *h, enum HmMorseHost on, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void hm_string_free(char *s);

/**
 * Message for the most recent failed call on this thread, or an empty string.
 * Valid until the next call into this library on the same thread.
 */
const char *hm_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *hm_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HYPERMORSE_H */
