#ifndef IFJS_H
#define IFJS_H

/* Generated by cbindgen; do not edit. */

#include <stddef.h>

typedef enum IfjsStatus {
  IFJS_STATUS_OK = 0,
  IFJS_STATUS_NULL_POINTER = 1,
  IFJS_STATUS_INVALID_ARGUMENT = 2,
  IFJS_STATUS_UNIVERSE_MISMATCH = 3,
  IFJS_STATUS_UNKNOWN_NAME = 4,
  IFJS_STATUS_PARSE_ERROR = 5,
  IFJS_STATUS_VALIDATION_ERROR = 6,
  IFJS_STATUS_IO_ERROR = 7,
  IFJS_STATUS_INTERNAL = 8,
  IFJS_STATUS_PANIC = 9,
} IfjsStatus;

/**
 * A loaded dataset of named sets.
 */
typedef struct IfjsDataset IfjsDataset;

/**
 * An intuitionistic fuzzy set.
 */
typedef struct IfjsIfs IfjsIfs;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *ifjs_last_error(void);

/**
 * Builds a set from `n` membership and non-membership degrees.
 *
 * # Safety
 * `mu` and `nu` must point to `n` doubles; the out-pointer must be writable.
 */
enum IfjsStatus ifjs_ifs_new(const double *mu,
                             const double *nu,
                             size_t n,
                             struct IfjsIfs **out_set);

/**
 * # Safety
 * `set` must come from this library and not be used afterwards.
 */
void ifjs_ifs_free(struct IfjsIfs *set);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `set` must be null or a live handle.
 */
size_t ifjs_ifs_len(const struct IfjsIfs *set);

/**
 * Copies element `index` into `mu` and `nu`.
 *
 * # Safety
 * `set` must be a live handle; `mu` and `nu` writable.
 */
enum IfjsStatus ifjs_ifs_get(const struct IfjsIfs *set, size_t index, double *mu, double *nu);

/**
 * Normalized Jensen-Shannon distance between two values.
 *
 * # Safety
 * the out-pointer must be writable.
 */
enum IfjsStatus ifjs_js_norm(double mu_a, double nu_a, double mu_b, double nu_b, double *out_value);

/**
 * Entropy of one value.
 *
 * # Safety
 * the out-pointer must be writable.
 */
enum IfjsStatus ifjs_entropy_ifv(double mu, double nu, double *out_value);

/**
 * Weighted entropy of a set; null `weights` means uniform.
 *
 * # Safety
 * `set` must be a live handle; `weights` null or `len(set)` doubles.
 */
enum IfjsStatus ifjs_entropy_ifs(const struct IfjsIfs *set,
                                 const double *weights_ptr,
                                 double *out_value);

/**
 * Evaluates a registered measure (`wu`, `wu-lambda`, `xiao`, `yc`,
 * `jgamma` or a `sim-` variant) on two sets. Pass NaN for unused
 * `lambda` / `gamma`, and null `weights` for uniform.
 *
 * # Safety
 * Handles must be live; `measure` a NUL-terminated string.
 */
enum IfjsStatus ifjs_measure(const char *measure,
                             double lambda,
                             double gamma,
                             const struct IfjsIfs *a,
                             const struct IfjsIfs *b,
                             const double *weights_ptr,
                             double *out_value);

/**
 * Loads a JSON dataset file or a built-in dataset by name.
 *
 * # Safety
 * `source` must be a NUL-terminated string; the out-pointer writable.
 */
enum IfjsStatus ifjs_dataset_load(const char *source, struct IfjsDataset **out_dataset);

/**
 * # Safety
 * `dataset` must come from this library and not be used afterwards.
 */
void ifjs_dataset_free(struct IfjsDataset *dataset);

/**
 * Number of sets, or 0 for a null handle.
 *
 * # Safety
 * `dataset` must be null or a live handle.
 */
size_t ifjs_dataset_len(const struct IfjsDataset *dataset);

/**
 * Copies the named set into a new handle owned by the caller.
 *
 * # Safety
 * `dataset` must be live; `name` NUL-terminated; the out-pointer writable.
 */
enum IfjsStatus ifjs_dataset_get(const struct IfjsDataset *dataset,
                                 const char *name,
                                 struct IfjsIfs **out_set);

/**
 * Runs a built-in scenario; `passed` receives 1 or 0.
 *
 * # Safety
 * `id` must be NUL-terminated; `passed` writable.
 */
enum IfjsStatus ifjs_run_scenario(const char *id, int *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IFJS_H */
