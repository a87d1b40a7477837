#ifndef PLUTCHIK_H
#define PLUTCHIK_H

#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call. Nonzero values match the `plutchik` command's exit
 * codes, plus a few codes specific to the C interface.
 */
typedef enum PlutchikStatus {
  PLUTCHIK_STATUS_OK = 0,
  PLUTCHIK_STATUS_IO = 3,
  PLUTCHIK_STATUS_JSON = 4,
  PLUTCHIK_STATUS_UNKNOWN_KEY = 10,
  PLUTCHIK_STATUS_DUPLICATE_KEY = 11,
  PLUTCHIK_STATUS_MIXED_KINDS = 12,
  PLUTCHIK_STATUS_BAD_VALUE = 13,
  PLUTCHIK_STATUS_WRONG_ARITY = 14,
  PLUTCHIK_STATUS_OUT_OF_RANGE = 15,
  PLUTCHIK_STATUS_TRIPLE_OVERFLOW = 16,
  PLUTCHIK_STATUS_EMPTY_SCORES = 17,
  PLUTCHIK_STATUS_EMPTY_CORPUS = 20,
  PLUTCHIK_STATUS_HETEROGENEOUS_KINDS = 21,
  PLUTCHIK_STATUS_UNKNOWN_GROUP_FIELD = 22,
  PLUTCHIK_STATUS_EMPTY_GROUP = 23,
  PLUTCHIK_STATUS_INVALID_OPTION = 30,
  PLUTCHIK_STATUS_INVALID_OPTION_COMBINATION = 31,
  PLUTCHIK_STATUS_NON_POSITIVE_RATIO = 32,
  PLUTCHIK_STATUS_GRID_OVERFLOW = 40,
  PLUTCHIK_STATUS_TITLE_MISMATCH = 41,
  /**
   * A required pointer argument was null.
   */
  PLUTCHIK_STATUS_NULL_ARGUMENT = 50,
  /**
   * A string argument was not valid UTF-8.
   */
  PLUTCHIK_STATUS_INVALID_UTF8 = 51,
  /**
   * The library panicked; the handle arguments should not be reused.
   */
  PLUTCHIK_STATUS_INTERNAL = 99,
} PlutchikStatus;

/**
 * Rendering options, initialized to the library defaults.
 */
typedef struct PlutchikOptions PlutchikOptions;

/**
 * A validated set of scores.
 */
typedef struct PlutchikScores PlutchikScores;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a JSON score document. On success `*out` owns a new handle.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum PlutchikStatus plutchik_scores_from_json(const char *json, struct PlutchikScores **out);

/**
 * Reads a JSON score document from a file.
 *
 * # Safety
 * `path` must be a nul-terminated string and `out` a valid pointer.
 */
enum PlutchikStatus plutchik_scores_load(const char *path, struct PlutchikScores **out);

/**
 * Averages a JSON-lines or JSON-array corpus. With a non-null `group_by`,
 * only records whose field equals `group` are averaged.
 *
 * # Safety
 * String arguments must be nul-terminated or null where allowed; `out` must
 * be valid.
 */
enum PlutchikStatus plutchik_corpus_mean(const char *corpus,
                                         const char *group_by,
                                         const char *group,
                                         struct PlutchikScores **out);

/**
 * # Safety
 * `scores` must come from this library or be null.
 */
void plutchik_scores_free(struct PlutchikScores *scores);

/**
 * Kind name (`basic_scalar`, `dyad_primary`, ...), or null for a null
 * handle. The string is static.
 *
 * # Safety
 * `scores` must be a live handle or null.
 */
const char *plutchik_scores_kind(const struct PlutchikScores *scores);

/**
 * Number of slots (8, or 4 for opposite dyads); 0 for a null handle.
 *
 * # Safety
 * `scores` must be a live handle or null.
 */
size_t plutchik_scores_len(const struct PlutchikScores *scores);

/**
 * Score of one emotion or dyad (the sum for intensity triples).
 *
 * # Safety
 * `scores` must be a live handle, `name` nul-terminated, `out` valid.
 */
enum PlutchikStatus plutchik_scores_total(const struct PlutchikScores *scores,
                                          const char *name,
                                          double *out);

struct PlutchikOptions *plutchik_options_new(void);

/**
 * # Safety
 * `options` must come from [`plutchik_options_new`] or be null.
 */
void plutchik_options_free(struct PlutchikOptions *options);

/**
 * # Safety
 * `options` must be a live handle.
 */
enum PlutchikStatus plutchik_options_set_show_coordinates(struct PlutchikOptions *options,
                                                          bool show);

/**
 * Petal length over width. Checked when rendering.
 *
 * # Safety
 * `options` must be a live handle.
 */
enum PlutchikStatus plutchik_options_set_ratio(struct PlutchikOptions *options, double ratio);

/**
 * Comma-separated emotions to keep colored; `all` restores the default.
 *
 * # Safety
 * `options` must be a live handle and `emotions` nul-terminated.
 */
enum PlutchikStatus plutchik_options_set_highlight(struct PlutchikOptions *options,
                                                   const char *emotions);

/**
 * Comma-separated emotions whose three intensity scores are printed;
 * `none` clears the set.
 *
 * # Safety
 * `options` must be a live handle and `emotions` nul-terminated.
 */
enum PlutchikStatus plutchik_options_set_intensity_labels(struct PlutchikOptions *options,
                                                          const char *emotions);

/**
 * # Safety
 * `options` must be a live handle.
 */
enum PlutchikStatus plutchik_options_set_font_size(struct PlutchikOptions *options, double points);

/**
 * # Safety
 * `options` must be a live handle and `family` nul-terminated.
 */
enum PlutchikStatus plutchik_options_set_font_family(struct PlutchikOptions *options,
                                                     const char *family);

/**
 * `light`, `normal` or `bold`.
 *
 * # Safety
 * `options` must be a live handle and `weight` nul-terminated.
 */
enum PlutchikStatus plutchik_options_set_font_weight(struct PlutchikOptions *options,
                                                     const char *weight);

/**
 * Title above the wheel; null removes it.
 *
 * # Safety
 * `options` must be a live handle; `title` nul-terminated or null.
 */
enum PlutchikStatus plutchik_options_set_title(struct PlutchikOptions *options, const char *title);

/**
 * Renders one wheel. `options` may be null for defaults. On success `*out`
 * owns the SVG text; free it with [`plutchik_string_free`].
 *
 * # Safety
 * `scores` must be a live handle, `options` live or null, `out` valid.
 */
enum PlutchikStatus plutchik_render_svg(const struct PlutchikScores *scores,
                                        const struct PlutchikOptions *options,
                                        char **out);

/**
 * Renders `count` wheels row-major into a `rows` x `cols` grid.
 *
 * # Safety
 * `scores` must point to `count` live handles; `options` live or null;
 * `out` valid.
 */
enum PlutchikStatus plutchik_grid_svg(const struct PlutchikScores *const *scores,
                                      size_t count,
                                      size_t rows,
                                      size_t cols,
                                      const struct PlutchikOptions *options,
                                      char **out);

/**
 * # Safety
 * `s` must be a string returned by this library, or null.
 */
void plutchik_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library on the same thread.
 */
const char *plutchik_last_error(void);

/**
 * Library version, a static string.
 */
const char *plutchik_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PLUTCHIK_H */
