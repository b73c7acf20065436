#ifndef OVERPARTITION_H
#define OVERPARTITION_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum OpStatus {
  OP_STATUS_OK = 0,
  OP_STATUS_NULL_ARGUMENT = 1,
  OP_STATUS_INVALID_UTF8 = 2,
  OP_STATUS_UNKNOWN_ID = 3,
  OP_STATUS_MALFORMED = 4,
  OP_STATUS_NOT_IN_CLASS = 5,
  OP_STATUS_OUT_OF_RANGE = 6,
  OP_STATUS_FAILED = 7,
  OP_STATUS_PANIC = 8,
} OpStatus;

// Outcome of a verification run.
typedef enum OpVerdict {
  OP_VERDICT_PASS = 0,
  OP_VERDICT_FAIL = 1,
  OP_VERDICT_FLAGGED = 2,
} OpVerdict;

// A finished verification report.
typedef struct OpReport OpReport;

// Coefficients q^0..q^max_n of a registered series.
typedef struct OpSeries OpSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static version string, never freed.
const char *op_version(void);

// Message for the last failed call on this thread. Empty after a success.
// The pointer stays valid until the next call into the library.
const char *op_last_error(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must be null or a pointer previously returned by this library.
void op_string_free(char *s);

// Number of members of weight `n` in the named class.
//
// # Safety
// `class_id` must be a NUL-terminated string and `out` a valid pointer.
enum OpStatus op_class_count(const char *class_id, uint64_t n, uint64_t *out);

// Expands a registered series through q^max_n.
//
// # Safety
// `series_id` must be a NUL-terminated string and `out` a valid pointer.
enum OpStatus op_series_new(const char *series_id, uint64_t max_n, struct OpSeries **out);

// Number of stored coefficients, or 0 for a null handle.
//
// # Safety
// `series` must be null or a live handle.
uint64_t op_series_len(const struct OpSeries *series);

// Coefficient of q^n as a decimal string. Free it with `op_string_free`.
//
// # Safety
// `series` must be a live handle and `out` a valid pointer.
enum OpStatus op_series_coeff_str(const struct OpSeries *series, uint64_t n, char **out);

// Coefficient of q^n as an `int64_t`. Returns `OUT_OF_RANGE` if it does not fit.
//
// # Safety
// `series` must be a live handle and `out` a valid pointer.
enum OpStatus op_series_coeff_i64(const struct OpSeries *series, uint64_t n, int64_t *out);

// # Safety
// `series` must be null or a handle from `op_series_new`, freed at most once.
void op_series_free(struct OpSeries *series);

// Applies a bijection (or its inverse) to a partition written as
// comma-separated parts, overlined parts suffixed with `~`.
//
// # Safety
// `map_id` and `input` must be NUL-terminated strings and `out` a valid pointer.
enum OpStatus op_bijection_apply(const char *map_id, const char *input, bool inverse, char **out);

// Verifies one registered identity through q^max_n with the default
// enumeration caps. With `with_timing` false the report is deterministic.
//
// # Safety
// `identity_id` must be a NUL-terminated string and `out` a valid pointer.
enum OpStatus op_verify(const char *identity_id,
                        uint64_t max_n,
                        bool with_timing,
                        struct OpReport **out);

// Verdict of a report. A null handle reads as `FAIL`.
//
// # Safety
// `report` must be null or a live handle.
enum OpVerdict op_report_verdict(const struct OpReport *report);

// The report as one JSON object. Free it with `op_string_free`.
//
// # Safety
// `report` must be a live handle and `out` a valid pointer.
enum OpStatus op_report_json(const struct OpReport *report, char **out);

// # Safety
// `report` must be null or a handle from `op_verify`, freed at most once.
void op_report_free(struct OpReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* OVERPARTITION_H */
