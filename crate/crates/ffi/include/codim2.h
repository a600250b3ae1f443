#ifndef CODIM2_H
#define CODIM2_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum Codim2Status {
  CODIM2_STATUS_OK = 0,
  CODIM2_STATUS_INVALID_INPUT = 1,
  CODIM2_STATUS_PRECONDITION = 2,
  CODIM2_STATUS_INTERNAL = 3,
  CODIM2_STATUS_CANCELLED = 4,
  CODIM2_STATUS_NULL_POINTER = 5,
  CODIM2_STATUS_PANIC = 6,
} Codim2Status;

/**
 * A validated configuration with row names.
 */
typedef struct Codim2Config Codim2Config;

typedef struct Codim2Polynomial Codim2Polynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. The pointer stays
 * valid until the next call into this library on the same thread.
 */
const char *codim2_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *codim2_version(void);

/**
 * Builds a configuration from `n_rows` rows stored as
 * `rows[2 i], rows[2 i + 1]`.
 *
 * # Safety
 * `rows` must point to `2 * n_rows` readable integers and `out` must be
 * writable.
 */
enum Codim2Status codim2_config_new(const int64_t *rows, size_t n_rows, struct Codim2Config **out);

/**
 * Parses `{"B": ...}` or `{"A": ...}`, with optional `"vars"`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` must be writable.
 */
enum Codim2Status codim2_config_from_json(const char *json, struct Codim2Config **out);

/**
 * # Safety
 * `cfg` must come from this library and not be used afterwards.
 */
void codim2_config_free(struct Codim2Config *cfg);

/**
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_config_rows(const struct Codim2Config *cfg, size_t *out);

/**
 * Degree of the toric variety.
 *
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_config_degree(const struct Codim2Config *cfg, int64_t *out);

/**
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_config_is_prime(const struct Codim2Config *cfg, bool *out);

/**
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_config_is_centrally_symmetric(const struct Codim2Config *cfg, bool *out);

/**
 * Chow form in the variables `<name>0`, `<name>1` per row.
 *
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_chow_form(const struct Codim2Config *cfg, struct Codim2Polynomial **out);

/**
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_dual_full_discriminant(const struct Codim2Config *cfg,
                                                struct Codim2Polynomial **out);

/**
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_full_discriminant(const struct Codim2Config *cfg,
                                           struct Codim2Polynomial **out);

/**
 * # Safety
 * `cfg` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_a_discriminant(const struct Codim2Config *cfg,
                                        struct Codim2Polynomial **out);

/**
 * # Safety
 * `poly` must come from this library and not be used afterwards.
 */
void codim2_polynomial_free(struct Codim2Polynomial *poly);

/**
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_polynomial_term_count(const struct Codim2Polynomial *poly, size_t *out);

/**
 * Total degree, or -1 for the zero polynomial.
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_polynomial_degree(const struct Codim2Polynomial *poly, int64_t *out);

/**
 * Canonical text form; release with [`codim2_string_free`].
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_polynomial_to_string(const struct Codim2Polynomial *poly, char **out);

/**
 * JSON term list; release with [`codim2_string_free`].
 *
 * # Safety
 * `poly` must be a live handle and `out` writable.
 */
enum Codim2Status codim2_polynomial_to_json(const struct Codim2Polynomial *poly, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void codim2_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CODIM2_H */
