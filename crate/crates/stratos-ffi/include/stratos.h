#ifndef STRATOS_H
#define STRATOS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum StratosStatus {
  StratosStatus_Ok = 0,
  StratosStatus_NullArgument = 1,
  StratosStatus_InvalidInput = 2,
  StratosStatus_BudgetExceeded = 3,
  StratosStatus_Panic = 4,
} StratosStatus;

/**
 * Opaque handle to a finite preordered set.
 */
typedef struct StratosProset StratosProset;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a proset from `n` NUL-terminated labels and `m` generating
 * pairs given as `2m` indices. On success writes a handle that must be
 * released with `stratos_proset_free`.
 *
 * # Safety
 * `labels` must point to `n` valid C strings, `pairs` to `2 * m`
 * indices, and `out` to a writable pointer slot.
 */
enum StratosStatus stratos_proset_new(const char *const *labels,
                                      uintptr_t n,
                                      const uintptr_t *pairs,
                                      uintptr_t m,
                                      struct StratosProset **out);

/**
 * The 4-point circle model.
 *
 * # Safety
 * `out` must be a writable pointer slot.
 */
enum StratosStatus stratos_pseudocircle(struct StratosProset **out);

/**
 * Releases a proset handle. Null is ignored.
 *
 * # Safety
 * `p` must come from this library and not be freed twice.
 */
void stratos_proset_free(struct StratosProset *p);

/**
 * Number of elements; 0 for a null handle.
 *
 * # Safety
 * `p` must be a live handle or null.
 */
uintptr_t stratos_proset_len(const struct StratosProset *p);

/**
 * Writes whether element `i` lies below element `j`.
 *
 * # Safety
 * `p` must be a live handle, `out` writable.
 */
enum StratosStatus stratos_proset_leq(const struct StratosProset *p,
                                      uintptr_t i,
                                      uintptr_t j,
                                      bool *out);

/**
 * Number of homotopy classes of maps `x -> y` under the given
 * enumeration budget.
 *
 * # Safety
 * `x`, `y` must be live handles, `out` writable.
 */
enum StratosStatus stratos_homset_class_count(const struct StratosProset *x,
                                              const struct StratosProset *y,
                                              uint64_t budget,
                                              uintptr_t *out);

/**
 * Writes a description of the degree-`degree` homology group, e.g.
 * `"Z + Z/2"`. Free the string with `stratos_string_free`.
 *
 * # Safety
 * `p` must be a live handle, `out` writable.
 */
enum StratosStatus stratos_homology_describe(const struct StratosProset *p,
                                             uintptr_t degree,
                                             char **out);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void stratos_string_free(char *s);

/**
 * Category of the map given by `assignment` (one target index per
 * source element): least cover size minus one.
 *
 * # Safety
 * `x`, `y` live handles; `assignment` holds `stratos_proset_len(x)`
 * indices; `out` writable.
 */
enum StratosStatus stratos_cat(const struct StratosProset *x,
                               const struct StratosProset *y,
                               const uintptr_t *assignment,
                               uint64_t budget,
                               uintptr_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STRATOS_H */
