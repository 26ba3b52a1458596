#ifndef COXTRANS_H
#define COXTRANS_H

#pragma once

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum CoxStatus {
  COX_STATUS_OK = 0,
  COX_STATUS_NULL_POINTER = 1,
  COX_STATUS_INVALID_UTF8 = 2,
  COX_STATUS_BUFFER_TOO_SMALL = 3,
  COX_STATUS_OVERFLOW = 4,
  COX_STATUS_DIMENSION = 10,
  COX_STATUS_DOMAIN = 11,
  COX_STATUS_UNKNOWN_DIAGRAM = 12,
  COX_STATUS_INVALID_PARAMETER = 13,
  COX_STATUS_SYNTAX = 14,
  COX_STATUS_VALUATION = 15,
  COX_STATUS_NO_BICOLORING = 16,
  COX_STATUS_NOT_A_TREE = 17,
  COX_STATUS_CYCLIC = 18,
  COX_STATUS_NOT_EXTENDED = 19,
  COX_STATUS_NOT_INDEFINITE = 20,
  COX_STATUS_CONSISTENCY = 21,
  COX_STATUS_PANIC = 99,
} CoxStatus;

/**
 * Opaque valued graph.
 */
typedef struct CoxGraph CoxGraph;

/**
 * Opaque binary polyhedral group.
 */
typedef struct CoxGroup CoxGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Last error message on this thread; valid until the next failing call.
 */
const char *cox_last_error(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void cox_string_free(char *s);

/**
 * Catalog name (`E6`, `D4~`, `T[2,3,7]`, `A[5]~k=2`, ...).
 *
 * # Safety
 * `name` must be a NUL-terminated string; `out` must be writable.
 */
enum CoxStatus cox_graph_from_name(const char *name, struct CoxGraph **out);

/**
 * Graph DSL text (`vertex a`, `edge a b 1 2`, ...).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum CoxStatus cox_graph_from_dsl(const char *text, struct CoxGraph **out);

/**
 * # Safety
 * `g` must come from `cox_graph_from_*` or be null.
 */
void cox_graph_free(struct CoxGraph *g);

/**
 * Number of vertices, 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
size_t cox_graph_vertex_count(const struct CoxGraph *g);

/**
 * Coefficients of χ(λ) = det(λI − C), constant term first.
 * `len` receives the number of coefficients even when `cap` is too small.
 *
 * # Safety
 * `g` must be a live handle; `out` must hold `cap` values; `len` must be writable.
 */
enum CoxStatus cox_charpoly(const struct CoxGraph *g, int64_t *out, size_t cap, size_t *len);

/**
 * Spectral radius of the Coxeter transformation.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum CoxStatus cox_spectral_radius(const struct CoxGraph *g, double *out);

/**
 * Rendered defect form for an orientation (`bicolored`, `central`, or a flip list);
 * a null orientation means bicolored.
 *
 * # Safety
 * `g` must be a live handle; `orientation` null or NUL-terminated; `out` writable.
 * The result is freed with `cox_string_free`.
 */
enum CoxStatus cox_defect_string(const struct CoxGraph *g,
                                 const char *orientation,
                                 bool ascii,
                                 char **out);

/**
 * `Z5`, `BD3`, `T`, `O`, `J`.
 *
 * # Safety
 * `name` must be NUL-terminated; `out` writable.
 */
enum CoxStatus cox_group_new(const char *name, struct CoxGroup **out);

/**
 * # Safety
 * `g` must come from `cox_group_new` or be null.
 */
void cox_group_free(struct CoxGroup *g);

/**
 * Group order, 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
size_t cox_group_order(const struct CoxGroup *g);

/**
 * Catalog name of the extended diagram K with 2I − A(G) ≅ K.
 *
 * # Safety
 * `g` must be a live handle; `out` writable. Free the result with `cox_string_free`.
 */
enum CoxStatus cox_group_mckay_diagram(const struct CoxGroup *g, char **out);

/**
 * Molien series coefficients of t⁰..tⁿ.
 *
 * # Safety
 * `g` must be a live handle; `out` must hold `cap` values; `len` writable.
 */
enum CoxStatus cox_molien_series(const struct CoxGroup *g,
                                 size_t n,
                                 int64_t *out,
                                 size_t cap,
                                 size_t *len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COXTRANS_H */
