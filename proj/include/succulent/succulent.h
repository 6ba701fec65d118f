/* succulent — minimum-cut structure analysis, C API.
 *
 * The library reads a graph with designated ends (in the .grf text format),
 * computes the complete structure of the minimum vertex cuts separating the
 * ends — equivalence classes, crossing structure, rings, the assembled
 * succulent with its end map and cut map — and the cactus reductions for
 * minimum edge cuts.
 *
 * All functions are thread-compatible (no shared mutable state except the
 * per-thread last-error buffer).  Strings returned through `char**` and
 * results returned through `suc_result**` are owned by the caller and must
 * be released with suc_string_free / suc_result_free.
 */

#ifndef SUCCULENT_H
#define SUCCULENT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum suc_status {
  SUC_OK = 0,
  SUC_ERR_PARSE = 2,    /* malformed input or invalid analysis graph  */
  SUC_ERR_BUDGET = 3,   /* enumeration budget exceeded                */
  SUC_ERR_VERIFY = 4,   /* a structural check failed                  */
  SUC_ERR_USAGE = 5,    /* bad arguments                              */
  SUC_ERR_INTERNAL = 6  /* invariant violated inside the library      */
} suc_status;

/* Opaque analysis result. */
typedef struct suc_result suc_result;

/* ABI version of this header; bumped on incompatible changes. */
int32_t suc_abi_version(void);

/* Thread-local message for the most recent failing call.  The returned
 * pointer is valid until the next failing call on the same thread; do not
 * free it. */
const char* suc_last_error(void);

/* Full vertex pipeline: minimum cuts, classes, crossing structure, rings,
 * structure tree, succulent, end map and cut map, with every internal
 * consistency check enabled.
 *
 * options_json may be NULL or a JSON object: {"budget": N} caps the cut
 * enumeration (default 5000000). */
suc_status suc_analyze(const char* grf_text, const char* options_json, suc_result** out);

/* Edge-cut pipeline producing a cactus.  mode is "end" (minimum edge cuts
 * separating the declared ends) or "finite" (all global minimum edge cuts;
 * any declared ends are ignored). */
suc_status suc_cactus(const char* grf_text, const char* mode, const char* options_json,
                      suc_result** out);

/* Like suc_analyze, but additionally runs the independent brute-force oracle
 * and the full lemma suite, failing with SUC_ERR_VERIFY on any mismatch. */
suc_status suc_verify(const char* grf_text, const char* options_json, suc_result** out);

/* Deterministic random instance in .grf form.  profile: "blob-ring",
 * "blob-tree", "hybrid", "erdos-blobs", or "mixed". */
suc_status suc_generate(uint64_t seed, const char* profile, char** grf_out);

/* Canonical JSON report for a result (deterministic, "format": 1). */
suc_status suc_result_json(const suc_result* result, char** json_out);

/* DOT rendering.  variant 0 = the full structure; variant 1 = the collapsed
 * variant (vertex results) — for cactus results both variants coincide. */
suc_status suc_result_dot(const suc_result* result, int32_t variant, char** dot_out);

void suc_result_free(suc_result* result);
void suc_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUCCULENT_H */
