#ifndef HOOPFORGE_H
#define HOOPFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HfStatus {
  HF_STATUS_OK = 0,
  HF_STATUS_NULL_POINTER = 1,
  HF_STATUS_INVALID_UTF8 = 2,
  HF_STATUS_PARSE = 3,
  HF_STATUS_AXIOM_VIOLATION = 4,
  HF_STATUS_OUT_OF_RANGE = 5,
  HF_STATUS_INVALID_ARGUMENT = 6,
  HF_STATUS_UNSUPPORTED = 7,
  HF_STATUS_BUDGET_EXCEEDED = 8,
  HF_STATUS_PANIC = 99,
} HfStatus;

typedef enum HfVariety {
  HF_VARIETY_HOOP = 0,
  HF_VARIETY_BASIC = 1,
  HF_VARIETY_WAJSBERG = 2,
  HF_VARIETY_GODEL = 3,
  HF_VARIETY_PRODUCT = 4,
} HfVariety;

/**
 * A strong external action of `B` on `X`.
 */
typedef struct HfAction HfAction;

/**
 * A split extension `X -> A <-> B`.
 */
typedef struct HfExtension HfExtension;

/**
 * A validated finite hoop.
 */
typedef struct HfHoop HfHoop;

/**
 * Subvariety membership of a hoop.
 */
typedef struct HfClassification {
  bool bounded;
  bool basic;
  bool wajsberg;
  bool godel;
  bool product;
  /**
   * Meaningful only when `bounded` is set.
   */
  bool involutive;
} HfClassification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into this library from the same thread.
 */
const char *hf_last_error(void);

/**
 * Library version as a static string.
 */
const char *hf_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void hf_string_free(char *s);

/**
 * Parses and validates an algebra in the text format.
 *
 * # Safety
 * `source` must be a NUL-terminated string; `out` must be writable.
 */
enum HfStatus hf_hoop_parse(const char *source, struct HfHoop **out);

/**
 * Builds a hoop from row-major `order * order` tables. A negative `bottom`
 * means unbounded.
 *
 * # Safety
 * `mul` and `imp` must point to `order * order` elements.
 */
enum HfStatus hf_hoop_from_tables(size_t order,
                                  size_t unit,
                                  const size_t *mul,
                                  const size_t *imp,
                                  ptrdiff_t bottom,
                                  struct HfHoop **out);

/**
 * The `n`-element Lukasiewicz chain (`godel == false`) or Godel chain.
 *
 * # Safety
 * `out` must be writable.
 */
enum HfStatus hf_hoop_chain(size_t n, bool godel, struct HfHoop **out);

/**
 * # Safety
 * `h` must be null or a handle from this library, not yet freed.
 */
void hf_hoop_free(struct HfHoop *h);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t hf_hoop_order(const struct HfHoop *h);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HfStatus hf_hoop_unit(const struct HfHoop *h, size_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HfStatus hf_hoop_mul(const struct HfHoop *h, size_t x, size_t y, size_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HfStatus hf_hoop_imp(const struct HfHoop *h, size_t x, size_t y, size_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum HfStatus hf_hoop_classify(const struct HfHoop *h, struct HfClassification *out);

/**
 * Writes the hoop in the text format. Free the result with
 * [`hf_string_free`].
 *
 * # Safety
 * `h` must be a live handle, `name` a NUL-terminated string, `out` writable.
 */
enum HfStatus hf_hoop_to_text(const struct HfHoop *h, const char *name, char **out);

/**
 * Checks an identity such as `"forall x y : x * y = y * x"`.
 *
 * # Safety
 * `h` must be a live handle, `identity` a NUL-terminated string, `out`
 * writable.
 */
enum HfStatus hf_hoop_check_identity(const struct HfHoop *h, const char *identity, bool *out);

/**
 * Builds a split extension from index maps `k: X -> A`, `p: A -> B` and
 * `s: B -> A`.
 *
 * # Safety
 * Handles must be live; each map must point to as many elements as its
 * domain has.
 */
enum HfStatus hf_extension_new(const struct HfHoop *x,
                               const struct HfHoop *a,
                               const struct HfHoop *b,
                               const size_t *k,
                               const size_t *p,
                               const size_t *s,
                               struct HfExtension **out);

/**
 * The regular and dense decomposition of a bounded hoop.
 *
 * # Safety
 * `a` must be a live handle and `out` writable.
 */
enum HfStatus hf_extension_decompose(const struct HfHoop *a, struct HfExtension **out);

/**
 * # Safety
 * `e` must be null or a live handle.
 */
void hf_extension_free(struct HfExtension *e);

/**
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
enum HfStatus hf_extension_is_strong(const struct HfExtension *e, bool *out);

/**
 * Middle algebra of the extension as a new handle.
 *
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
enum HfStatus hf_extension_middle(const struct HfExtension *e, struct HfHoop **out);

/**
 * The action of a strong extension.
 *
 * # Safety
 * `e` must be a live handle and `out` writable.
 */
enum HfStatus hf_extension_action(const struct HfExtension *e, struct HfAction **out);

/**
 * Validates an action from row-major `|B| * |X|` tables of `f` and `g`.
 *
 * # Safety
 * Handles must be live; `f` and `g` must point to `|B| * |X|` elements.
 */
enum HfStatus hf_action_new(const struct HfHoop *b,
                            const struct HfHoop *x,
                            const size_t *f,
                            const size_t *g,
                            enum HfVariety variety,
                            struct HfAction **out);

/**
 * # Safety
 * `act` must be null or a live handle.
 */
void hf_action_free(struct HfAction *act);

/**
 * `f_b(x)` and `g_b(x)`.
 *
 * # Safety
 * `act` must be a live handle; `f` and `g` writable.
 */
enum HfStatus hf_action_apply(const struct HfAction *act, size_t b, size_t x, size_t *f, size_t *g);

/**
 * The strong extension built from the action.
 *
 * # Safety
 * `act` must be a live handle and `out` writable.
 */
enum HfStatus hf_action_extension(const struct HfAction *act, struct HfExtension **out);

/**
 * Number of actions of `b` on `x` within `variety`.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum HfStatus hf_action_count(const struct HfHoop *b,
                              const struct HfHoop *x,
                              enum HfVariety variety,
                              size_t *out);

/**
 * Whether actions and strong extensions of `b` by `x` correspond. With
 * `oracle`, extensions are also found by direct search.
 *
 * # Safety
 * Handles must be live and `out` writable.
 */
enum HfStatus hf_verify_bijection(const struct HfHoop *b,
                                  const struct HfHoop *x,
                                  enum HfVariety variety,
                                  bool oracle,
                                  bool *out);

/**
 * Runs a named suite and returns its JSON report. `max_order` 0 keeps the
 * preset's default.
 *
 * # Safety
 * `preset` must be a NUL-terminated string; `json` and `passed` writable.
 */
enum HfStatus hf_suite_run(const char *preset,
                           size_t max_order,
                           size_t jobs,
                           bool oracle,
                           char **json,
                           bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOOPFORGE_H */
