#ifndef PULTR_H
#define PULTR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PultrStatus {
  PULTR_STATUS_OK = 0,
  // A checked property does not hold.
  PULTR_STATUS_REFUTED = 1,
  // Size guard, search budget or enumeration cap.
  PULTR_STATUS_GUARD = 2,
  // Malformed input text, bad parameter, or violated precondition.
  PULTR_STATUS_INVALID = 3,
  PULTR_STATUS_NULL_POINTER = 4,
  // A string argument is not valid UTF-8.
  PULTR_STATUS_UTF8 = 5,
  // A result does not fit the output type.
  PULTR_STATUS_OVERFLOW = 6,
  // Internal panic; the handles passed in are still valid.
  PULTR_STATUS_PANIC = 7,
} PultrStatus;

// A digraph. Undirected graphs are symmetric digraphs.
typedef struct PultrGraph PultrGraph;

typedef struct PultrTemplate PultrTemplate;

// Resource limits. `max_size == 0` disables the size guard.
typedef struct PultrLimits {
  uint64_t node_budget;
  uint64_t max_size;
  size_t iso_cap;
} PultrLimits;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failing call on this thread, or null. The pointer is
// valid until the next failing call on this thread.
const char *pultr_last_error(void);

struct PultrLimits pultr_limits_default(void);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void pultr_string_free(char *s);

// Parses the edge-list format.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum PultrStatus pultr_graph_parse(const char *text, struct PultrGraph **out);

// Builds a standard family such as `cycle:5`, `complete:4` or
// `circular:7/3`.
//
// # Safety
// `spec` must be a nul-terminated string; `out` must be writable.
enum PultrStatus pultr_graph_family(const char *spec, struct PultrGraph **out);

// Edge-list text of `g`; free it with [`pultr_string_free`].
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum PultrStatus pultr_graph_serialize(const struct PultrGraph *g, char **out);

// DOT text of `g`; free it with [`pultr_string_free`].
//
// # Safety
// `g` must be a live handle; `out` must be writable.
enum PultrStatus pultr_graph_dot(const struct PultrGraph *g, char **out);

// Number of vertices, or 0 for null.
//
// # Safety
// `g` must be null or a live handle.
size_t pultr_graph_order(const struct PultrGraph *g);

// Number of arcs (a symmetric edge counts twice, a loop once), or 0 for
// null.
//
// # Safety
// `g` must be null or a live handle.
size_t pultr_graph_arc_count(const struct PultrGraph *g);

// # Safety
// `g` must be null or a live handle; it is invalid afterwards.
void pultr_graph_free(struct PultrGraph *g);

// A built-in template: `t<m>` for odd `m`, `lex-k2`, `tensor:cycle:<n>`,
// `arc`, `shift:<k>`, `iota:<m>`, `opath:<arrows>`.
//
// # Safety
// `name` must be a nul-terminated string; `out` must be writable.
enum PultrStatus pultr_template_builtin(const char *name, struct PultrTemplate **out);

// Parses the template file format.
//
// # Safety
// `text` must be a nul-terminated string; `out` must be writable.
enum PultrStatus pultr_template_parse(const char *text, struct PultrTemplate **out);

// # Safety
// `t` must be null or a live handle; it is invalid afterwards.
void pultr_template_free(struct PultrTemplate *t);

// `Λ_T(g)`. `limits` may be null for the defaults.
//
// # Safety
// Handles must be live; `limits` null or valid; `out` writable.
enum PultrStatus pultr_lambda(const struct PultrTemplate *t,
                              const struct PultrGraph *g,
                              const struct PultrLimits *limits,
                              struct PultrGraph **out);

// `Γ_T(k)`. `limits` may be null for the defaults.
//
// # Safety
// Handles must be live; `limits` null or valid; `out` writable.
enum PultrStatus pultr_gamma(const struct PultrTemplate *t,
                             const struct PultrGraph *k,
                             const struct PultrLimits *limits,
                             struct PultrGraph **out);

// `Ω_{T_m}(h)` for odd `m` and symmetric `h`.
//
// # Safety
// `h` must be live; `limits` null or valid; `out` writable.
enum PultrStatus pultr_omega(size_t m,
                             const struct PultrGraph *h,
                             const struct PultrLimits *limits,
                             struct PultrGraph **out);

// The arc graph `δ(h)`.
//
// # Safety
// `h` must be live; `limits` null or valid; `out` writable.
enum PultrStatus pultr_arc_graph(const struct PultrGraph *h,
                                 const struct PultrLimits *limits,
                                 struct PultrGraph **out);

// Writes whether `g -> h`. If `map` is non-null and a homomorphism exists,
// its images are written to `map[0..order(g)]`.
//
// # Safety
// Handles must be live; `limits` null or valid; `exists` writable; `map`
// null or writable for `order(g)` entries.
enum PultrStatus pultr_hom_exists(const struct PultrGraph *g,
                                  const struct PultrGraph *h,
                                  const struct PultrLimits *limits,
                                  bool *exists,
                                  size_t *map);

// Number of homomorphisms `g -> h`.
//
// # Safety
// Handles must be live; `limits` null or valid; `count` writable.
enum PultrStatus pultr_hom_count(const struct PultrGraph *g,
                                 const struct PultrGraph *h,
                                 const struct PultrLimits *limits,
                                 uint64_t *count);

// `χ(g)` of a symmetric loop-free graph.
//
// # Safety
// `g` must be live; `limits` null or valid; `chi` writable.
enum PultrStatus pultr_chromatic_number(const struct PultrGraph *g,
                                        const struct PultrLimits *limits,
                                        size_t *chi);

// `χ_c(g) = num/den` of a symmetric loop-free graph.
//
// # Safety
// `g` must be live; `limits` null or valid; `num` and `den` writable.
enum PultrStatus pultr_circular_chromatic_number(const struct PultrGraph *g,
                                                 const struct PultrLimits *limits,
                                                 uint32_t *num,
                                                 uint32_t *den);

// Runs a named suite (`adjunction`, `omega`, `duality`, `shift`, `yeh-zhu`,
// `ordering`, `powers-chi-c`). `nmax == 0` picks the suite's default.
// Returns `Ok` or `Refuted`; `cases` (may be null) receives the number of
// cases checked, and on refutation the counterexample is the last error.
//
// # Safety
// `name` must be a nul-terminated string; `limits` null or valid; `cases`
// null or writable.
enum PultrStatus pultr_verify_suite(const char *name,
                                    size_t nmax,
                                    const struct PultrLimits *limits,
                                    uint64_t *cases);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PULTR_H */
