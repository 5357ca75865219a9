/* C interface to the guspin core library.
 *
 * All entry points are thread-compatible (distinct sessions may be used from
 * distinct threads; a single session must not be shared without external
 * locking).  Strings returned through char** out parameters are heap
 * allocated and must be released with guspin_string_free.  On any status
 * other than GUSPIN_OK no output is written and guspin_last_error(session)
 * holds a message that stays valid until the next call on that session.
 */
#ifndef GUSPIN_H
#define GUSPIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct guspin_session guspin_session;

typedef enum guspin_status {
  GUSPIN_OK = 0,
  GUSPIN_ERR_INVALID_ARGUMENT = 1, /* null pointer or unknown suite/rep/fixture name */
  GUSPIN_ERR_DOMAIN = 2,           /* input rejected by a library contract (parse
                                      failure, value outside a domain) */
  GUSPIN_ERR_INTERNAL = 3          /* unexpected failure inside the library */
} guspin_status;

/* Library version as "major.minor.patch". Static storage; do not free. */
const char* guspin_version(void);

/* NULL only on allocation failure. */
guspin_session* guspin_session_new(void);
void guspin_session_free(guspin_session* s);

/* Message for the most recent failing call on this session ("" if none).
 * Owned by the session. */
const char* guspin_last_error(const guspin_session* s);

/* Set one option (e.g. "seed", "d", "weight", "bound", "p", "splitting",
 * "window", "grid", "T", "Z", "dett").  Unknown keys are stored and ignored
 * by operations that do not use them. */
guspin_status guspin_set_option(guspin_session* s, const char* key, const char* value);

/* Load options from flat "key = value" config text ('#' comments, blank
 * lines allowed).  Later guspin_set_option calls override loaded values. */
guspin_status guspin_load_config(guspin_session* s, const char* text);

/* Release a string returned through a char** out parameter. */
void guspin_string_free(char* str);

/* Reciprocal Euler factor for a named representation.
 * rep: "wedge2", "std", "gsp4-spin", "gsp4-std" (3 parameters) or "spin6"
 * (4 parameters at an inert place, 6 at a split place).
 * params: comma-separated rationals, e.g. "1,1/2,-3".
 * *out_coeffs: comma-separated coefficients, constant term first. */
guspin_status guspin_euler_factor(guspin_session* s, const char* rep, const char* params,
                                  char** out_coeffs);

/* Enumerate the index set for the series attached to T up to the height
 * bound.  Options used: d (1 or 3, default 1), T (four comma-separated
 * "a+b*w" entries, row major, default identity), bound (default 3).
 * *out_json: one JSON object {algebra, T, bound, key_order, count, entries}. */
guspin_status guspin_enumerate_reps(guspin_session* s, char** out_json);

/* Evaluate the truncated weight-r series at a point Z = X + iY.
 * Options used: d, T, weight (default 10), bound (default 10), Z (eight
 * comma-separated reals: row-major re,im pairs, default the base point iI).
 * *out_json: {value, tail_error, terms}. */
guspin_status guspin_eval_pt(guspin_session* s, char** out_json);

/* Run a named verification suite: "group", "modularity", "ait", "padic",
 * "arch-norm", "arch-fourier", "arch-gamma", "arch-assembly".
 * *out_jsonl: one JSON object per line, sorted by check name;
 * *all_pass: 1 if every check passed, else 0. */
guspin_status guspin_run_suite(guspin_session* s, const char* suite, char** out_jsonl,
                               int* all_pass);

/* Emit a named deterministic fixture: "reps-Qi-T=I-bound3",
 * "euler-wedge2-sample", "A-matrix".  *out_json: one JSON document. */
guspin_status guspin_emit_fixture(guspin_session* s, const char* name, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GUSPIN_H */
