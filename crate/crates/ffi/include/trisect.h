#ifndef TRISECT_H
#define TRISECT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum TrisectDefiniteness {
  TRISECT_DEFINITENESS_ZERO = 0,
  TRISECT_DEFINITENESS_POSITIVE = 1,
  TRISECT_DEFINITENESS_NEGATIVE = 2,
  TRISECT_DEFINITENESS_INDEFINITE = 3,
} TrisectDefiniteness;

typedef enum TrisectParity {
  TRISECT_PARITY_EVEN = 0,
  TRISECT_PARITY_ODD = 1,
} TrisectParity;

typedef enum TrisectStatus {
  TRISECT_STATUS_OK = 0,
  TRISECT_STATUS_NULL_POINTER = 1,
  TRISECT_STATUS_INVALID_UTF8 = 2,
  TRISECT_STATUS_PARSE_ERROR = 3,
  TRISECT_STATUS_SHAPE_ERROR = 4,
  TRISECT_STATUS_VALIDATION_FAILED = 5,
  TRISECT_STATUS_UNKNOWN_NAME = 6,
  TRISECT_STATUS_OPERATION_FAILED = 7,
  TRISECT_STATUS_INTERNAL_INCONSISTENCY = 8,
  TRISECT_STATUS_PANIC = 9,
} TrisectStatus;

typedef enum TrisectWitness {
  TRISECT_WITNESS_NONE = 0,
  TRISECT_WITNESS_PARAMETERS = 1,
  TRISECT_WITNESS_B1 = 2,
  TRISECT_WITNESS_H1_TORSION = 3,
  TRISECT_WITNESS_B2 = 4,
  TRISECT_WITNESS_SIGNATURE = 5,
  TRISECT_WITNESS_PARITY = 6,
} TrisectWitness;

/**
 * Opaque diagram handle.
 */
typedef struct TrisectDiagram TrisectDiagram;

typedef struct TrisectParams {
  uintptr_t g;
  uintptr_t k;
  uintptr_t p;
  /**
   * 0 for a closed diagram.
   */
  uintptr_t b;
} TrisectParams;

/**
 * Basis-independent invariants of a closed diagram (or of the cap of a
 * page-genus-zero relative one). Torsion orders are available through
 * [`trisect_report_structured`].
 */
typedef struct TrisectInvariants {
  int64_t euler;
  uintptr_t b1;
  uintptr_t h1_torsion_count;
  uintptr_t b2;
  uintptr_t b3;
  int64_t signature;
  enum TrisectParity parity;
  enum TrisectDefiniteness definiteness;
} TrisectInvariants;

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next call into the library from the same thread.
 */
const char *trisect_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void trisect_string_free(char *s);

/**
 * # Safety
 * `d` must be NULL or a handle returned by this library, not yet freed.
 */
void trisect_diagram_free(struct TrisectDiagram *d);

/**
 * Parses `.td` text. Structural errors give `ParseError` or `ShapeError`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TrisectStatus trisect_diagram_parse(const char *text, struct TrisectDiagram **out);

/**
 * # Safety
 * `name` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TrisectStatus trisect_catalog_get(const char *name, struct TrisectDiagram **out);

/**
 * Renders a diagram as `.td` text.
 *
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum TrisectStatus trisect_diagram_render(const struct TrisectDiagram *d, char **out);

/**
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum TrisectStatus trisect_diagram_params(const struct TrisectDiagram *d,
                                          struct TrisectParams *out);

/**
 * Writes the number of violated conditions to `violations`. Returns
 * `ValidationFailed` when it is nonzero; the error message lists them.
 *
 * # Safety
 * `d` must be a live handle and `violations` a writable pointer.
 */
enum TrisectStatus trisect_diagram_validate(const struct TrisectDiagram *d, uintptr_t *violations);

/**
 * Caps every boundary component.
 *
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum TrisectStatus trisect_cap_all(const struct TrisectDiagram *d, struct TrisectDiagram **out);

/**
 * Caps one boundary component (1-based).
 *
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum TrisectStatus trisect_cap_component(const struct TrisectDiagram *d,
                                         uintptr_t component,
                                         struct TrisectDiagram **out);

/**
 * # Safety
 * `left` and `right` must be live handles and `out` a writable pointer.
 */
enum TrisectStatus trisect_connected_sum(const struct TrisectDiagram *left,
                                         const struct TrisectDiagram *right,
                                         struct TrisectDiagram **out);

/**
 * # Safety
 * `left` and `right` must be live handles and `out` a writable pointer.
 */
enum TrisectStatus trisect_boundary_sum(const struct TrisectDiagram *left,
                                        const struct TrisectDiagram *right,
                                        struct TrisectDiagram **out);

/**
 * Invariants of a valid closed diagram, or of the cap of a valid
 * page-genus-zero relative diagram.
 *
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum TrisectStatus trisect_invariants(const struct TrisectDiagram *d,
                                      struct TrisectInvariants *out);

/**
 * Full report in the structured `key = value` format.
 *
 * # Safety
 * `d` must be a live handle and `out` a writable pointer.
 */
enum TrisectStatus trisect_report_structured(const struct TrisectDiagram *d, char **out);

/**
 * Sets `*distinct` to 1 when the diagrams are provably not
 * diffeomorphism-and-handleslide equivalent, else 0, and `*witness` to the
 * first differing invariant.
 *
 * # Safety
 * `a` and `b` must be live handles; `distinct` and `witness` writable.
 */
enum TrisectStatus trisect_distinguish(const struct TrisectDiagram *a,
                                       const struct TrisectDiagram *b,
                                       int32_t *distinct,
                                       enum TrisectWitness *witness);

#endif /* TRISECT_H */
