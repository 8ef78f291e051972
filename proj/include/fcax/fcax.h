/* C interface to the fcax library: formal contexts, preference orders,
 * concept lattices, defeasible conditionals, and typicality reports.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Fallible calls return fcax_status; when an
 * fcax_error** is supplied and the call fails, it receives a heap error
 * that must be released with fcax_error_free. */
#ifndef FCAX_H
#define FCAX_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fcax_status {
    FCAX_OK = 0,
    FCAX_E_PARSE = 1,    /* malformed input text */
    FCAX_E_NAME = 2,     /* unknown object/attribute name */
    FCAX_E_CYCLE = 3,    /* preference pairs are not a strict order */
    FCAX_E_ARITY = 4,    /* postulate instantiation arity mismatch */
    FCAX_E_LIMIT = 5,    /* documented size bound exceeded */
    FCAX_E_ARG = 6,      /* invalid argument or flag combination */
    FCAX_E_ORACLE = 7,   /* oracle cross-check failed */
    FCAX_E_INTERNAL = 8  /* invariant violation; indicates a bug */
} fcax_status;

/* text_format for fcax_context_parse / fcax_context_serialize */
enum { FCAX_TEXT_AUTO = 0, FCAX_TEXT_CXT = 1, FCAX_TEXT_CSV = 2 };
/* report output formats */
enum { FCAX_FORMAT_TEXT = 0, FCAX_FORMAT_JSON = 1, FCAX_FORMAT_DOT = 2 };
/* klm-check modes */
enum { FCAX_KLM_AUTO = 0, FCAX_KLM_EXHAUSTIVE = 1, FCAX_KLM_SAMPLED = 2 };

typedef struct fcax_error fcax_error;
typedef struct fcax_context fcax_context;
typedef struct fcax_prefs fcax_prefs;

const char* fcax_version(void);

fcax_status fcax_error_status(const fcax_error* err);
const char* fcax_error_message(const fcax_error* err);
void fcax_error_free(fcax_error* err);

/* Frees strings returned through char** out parameters. */
void fcax_string_free(char* s);

fcax_status fcax_context_parse(const char* text, int text_format, fcax_context** out,
                               fcax_error** err);
void fcax_context_free(fcax_context* ctx);
int fcax_context_object_count(const fcax_context* ctx);
int fcax_context_attribute_count(const fcax_context* ctx);
/* NULL when the index is out of range. */
const char* fcax_context_object_name(const fcax_context* ctx, int g);
const char* fcax_context_attribute_name(const fcax_context* ctx, int m);
/* 1/0, or -1 when an index is out of range. */
int fcax_context_incident(const fcax_context* ctx, int g, int m);
/* text_format must be FCAX_TEXT_CXT or FCAX_TEXT_CSV. */
fcax_status fcax_context_serialize(const fcax_context* ctx, int text_format, char** out,
                                   fcax_error** err);

/* Preference file: `NAME < NAME` lines, `#` comments, blank lines ignored.
 * The left name is the more preferred (more typical) object. */
fcax_status fcax_prefs_parse(const fcax_context* ctx, const char* text, fcax_prefs** out,
                             fcax_error** err);
void fcax_prefs_free(fcax_prefs* prefs);
/* Number of strict pairs after transitive closure. */
int fcax_prefs_pair_count(const fcax_prefs* prefs);
/* 1 iff object g strictly precedes object h; -1 on range error. */
int fcax_prefs_precedes(const fcax_prefs* prefs, int g, int h);

/* Query grammar: `a,b -> c`, `a -> !c`, `a ~> c`, `a ~> !c`. Defeasible
 * (~>) queries require prefs. out_holds receives 1/0. */
fcax_status fcax_eval_query(const fcax_context* ctx, const fcax_prefs* prefs, const char* query,
                            int* out_holds, fcax_error** err);

/* Report builders. Output strings are owned by the caller (fcax_string_free).
 * prefs may be NULL where noted. With oracle != 0, results are cross-checked
 * against brute-force routes and FCAX_E_ORACLE is returned on mismatch. */

/* DOT marks the typical concepts grey when prefs is given. */
fcax_status fcax_report_lattice(const fcax_context* ctx, const fcax_prefs* prefs, int format,
                                int oracle, char** out, fcax_error** err);
/* names: comma-separated list; from_objects selects object derivation.
 * prefs (optional) adds the minimised derivation to attribute queries. */
fcax_status fcax_report_derive(const fcax_context* ctx, const fcax_prefs* prefs,
                               const char* names, int from_objects, int format, int oracle,
                               char** out, fcax_error** err);
fcax_status fcax_report_query(const fcax_context* ctx, const fcax_prefs* prefs,
                              const char* query, int format, int oracle, char** out,
                              int* out_holds, fcax_error** err);
/* attributes may be NULL for the full typical-set report. */
fcax_status fcax_report_typical(const fcax_context* ctx, const fcax_prefs* prefs,
                                const char* attributes, int format, int oracle, char** out,
                                fcax_error** err);
fcax_status fcax_report_semilattice(const fcax_context* ctx, const fcax_prefs* prefs, int format,
                                    int oracle, char** out, fcax_error** err);
fcax_status fcax_report_validate_order(const fcax_context* ctx, const fcax_prefs* prefs,
                                       int format, int oracle, char** out, int* out_valid,
                                       fcax_error** err);
/* exhaustive_bound <= 0 selects the default (6 attributes). */
fcax_status fcax_report_klm(const fcax_context* ctx, const fcax_prefs* prefs, int mode,
                            long long samples, unsigned long long seed, int lle_syntactic,
                            int exhaustive_bound, int format, int oracle, char** out, int* out_ok,
                            fcax_error** err);

#ifdef __cplusplus
}
#endif

#endif /* FCAX_H */
