#ifndef GARSIDE_H
#define GARSIDE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GarsideLatticeOp {
  GARSIDE_LATTICE_OP_GCD = 0,
  GARSIDE_LATTICE_OP_LCM = 1,
} GarsideLatticeOp;

typedef enum GarsideSide {
  GARSIDE_SIDE_LEFT = 0,
  GARSIDE_SIDE_RIGHT = 1,
} GarsideSide;

typedef enum GarsideStatus {
  GARSIDE_STATUS_OK = 0,
  // The question has a negative answer (not a ribbon, not a divisor).
  GARSIDE_STATUS_NEGATIVE = 1,
  // A null pointer or a string that is not UTF-8.
  GARSIDE_STATUS_INVALID_ARGUMENT = 2,
  // A word, atom or parabolic that does not parse in this system.
  GARSIDE_STATUS_PARSE = 3,
  // The system definition was rejected.
  GARSIDE_STATUS_INVALID_SYSTEM = 4,
  // An internal invariant failed or a panic was caught.
  GARSIDE_STATUS_INTERNAL = 5,
} GarsideStatus;

// Opaque system handle.
typedef struct GarsideHandle GarsideHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until
// the next call on the same thread.
const char *garside_last_error(void);

// Build a system from a JSON definition.
//
// # Safety
// `json` must be a valid C string and `out` a valid pointer.
enum GarsideStatus garside_system_from_json(const char *json, struct GarsideHandle **out);

// Load a bundled system by name (`b3`, `b4`, `rank1`, `square_central`,
// `delta_root`, `delta_root_corrupted`).
//
// # Safety
// `name` must be a valid C string and `out` a valid pointer.
enum GarsideStatus garside_system_bundled(const char *name, struct GarsideHandle **out);

// # Safety
// `h` must come from this library and not have been freed; null is a no-op.
void garside_system_free(struct GarsideHandle *h);

// # Safety
// `s` must come from this library and not have been freed; null is a no-op.
void garside_string_free(char *s);

// Number of atoms.
//
// # Safety
// `h` must be a live handle.
uintptr_t garside_system_rank(const struct GarsideHandle *h);

// Normal form of a positive word, as greedy letters joined by `" . "`.
//
// # Safety
// Pointers must be valid; `word` a C string.
enum GarsideStatus garside_normal_form(const struct GarsideHandle *h, const char *word, char **out);

// gcd or lcm of two positive words on the given side.
//
// # Safety
// Pointers must be valid; words C strings.
enum GarsideStatus garside_lattice(const struct GarsideHandle *h,
                                   enum GarsideLatticeOp op,
                                   enum GarsideSide s,
                                   const char *w1,
                                   const char *w2,
                                   char **out);

// Least quasi-central multiple of a non-empty positive word.
//
// # Safety
// Pointers must be valid; `word` a C string.
enum GarsideStatus garside_tau(const struct GarsideHandle *h, const char *word, char **out);

// Basis of the quasi-centralizer, one atom word per line.
//
// # Safety
// Pointers must be valid.
enum GarsideStatus garside_qz_basis(const struct GarsideHandle *h, char **out);

// Groupoid presentation in its JSON form.
//
// # Safety
// Pointers must be valid.
enum GarsideStatus garside_presentation_json(const struct GarsideHandle *h, char **out);

// Split a group word `g` as `a·r` with `a` in `A_X` and `r` a ν-ribbon.
// The parabolic is comma-separated atom names. Returns `NEGATIVE` when `g`
// does not conjugate `A_X` onto a standard parabolic; otherwise `out`
// receives `{"a": ..., "ribbon": ..., "source": [...], "target": [...]}`
// with group elements as word lists (`x^-1` for inverses, `DELTA`).
//
// # Safety
// Pointers must be valid; strings C strings.
enum GarsideStatus garside_conjugate(const struct GarsideHandle *h,
                                     const char *parabolic,
                                     const char *word,
                                     char **out);

// Check the presentation on all paths up to `level`; `passed` receives the
// verdict.
//
// # Safety
// Pointers must be valid.
enum GarsideStatus garside_verify_presentation(const struct GarsideHandle *h,
                                               uintptr_t level,
                                               bool *passed);

// Library version, a static string.
const char *garside_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GARSIDE_H */
