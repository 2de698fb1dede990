#ifndef SPARSEKIT_H
#define SPARSEKIT_H

/*
 * C interface to the sparsekit library: instance I/O, hypergraph and NAE-SAT
 * sparsification, reductions, cross-compositions, exact oracles, seeded
 * generators and the verification harness.
 *
 * Conventions:
 *   - Every fallible call returns an sk_status; on failure sk_last_error()
 *     holds a message for the calling thread until its next failing call.
 *   - Strings returned through char** are owned by the caller and released
 *     with sk_string_free(). Optional outputs may be passed as NULL.
 *   - Instances are opaque and immutable; release them with sk_instance_free().
 *   - Instance text is any format the library reads: DIMACS cnf, "p hyp",
 *     "p edge", "p arc", or JSON for structured instances.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SK_API __declspec(dllexport)
#else
#define SK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sk_status {
  SK_OK = 0,
  SK_ERR_ARGUMENT = 1,  /* null pointer, unknown name or bad parameter */
  SK_ERR_PARSE = 2,     /* malformed input text */
  SK_ERR_INSTANCE = 3,  /* instance of the wrong kind or violating its invariants */
  SK_ERR_IO = 4,        /* file could not be read or written */
  SK_ERR_INTERNAL = 5   /* unexpected failure inside the library */
} sk_status;

typedef enum sk_verdict {
  SK_VERDICT_YES = 0,
  SK_VERDICT_NO = 1,
  SK_VERDICT_TIMEOUT = 2,
  SK_VERDICT_REFUSED = 3
} sk_verdict;

typedef struct sk_instance sk_instance;

typedef struct sk_limits {
  uint64_t node_budget; /* search nodes per oracle call */
  double seconds;       /* wall-clock limit per oracle call */
  int variable_cap;     /* SAT/NAE variables or 2-coloring vertices */
  int budget_cap;       /* largest dominating-set budget searched */
} sk_limits;

SK_API const char* sk_version(void);
SK_API const char* sk_status_name(sk_status status);
SK_API const char* sk_last_error(void);
SK_API void sk_string_free(char* s);

/* ---- instances --------------------------------------------------------- */

SK_API sk_status sk_instance_parse(const char* text, sk_instance** out);
SK_API sk_status sk_instance_load(const char* path, sk_instance** out);
SK_API sk_status sk_instance_serialize(const sk_instance* inst, char** out);
SK_API sk_status sk_instance_save(const sk_instance* inst, const char* path);
SK_API void sk_instance_free(sk_instance* inst);

/* "cnf", "hypergraph", "graph", "digraph", "tsd", "bipartite-ham",
 * "eq-col-rbds" or "list-coloring"; NULL for a NULL instance. */
SK_API const char* sk_instance_kind(const sk_instance* inst);

/* Budget attached to the instance (dominating-set compositions), or -1. */
SK_API int64_t sk_instance_budget(const sk_instance* inst);

/* One-line size summary, e.g. "hypergraph: n=4, edges: r=2:4 (bound 4); total 4 (bound 8)". */
SK_API sk_status sk_instance_stats(const sk_instance* inst, char** out);

/* ---- transformations --------------------------------------------------- */

/* Sparsifies a hypergraph (2-coloring) or a CNF formula (NAE-SAT). exact != 0
 * selects exact rational elimination; otherwise elimination modulo a random
 * 62-bit prime drawn from seed. The report is KernelReport JSON. */
SK_API sk_status sk_sparsify(const sk_instance* in, int exact, uint64_t seed, sk_instance** out,
                             char** report_json);

/* name: "cnf-nae", "nae-hyp", "nae-tsd" or "karp". */
SK_API sk_status sk_reduce(const char* name, const sk_instance* in, sk_instance** out,
                           char** trace_json);

/* target: "4col" (tsd inputs), "hamcycle" (bipartite-ham inputs), "domset" or
 * "conn-domset" (eq-col-rbds inputs). Dominating-set outputs carry their
 * budget. Inputs are padded to a power of 4 by repeating the first one. */
SK_API sk_status sk_compose(const char* target, const sk_instance* const* inputs, size_t count,
                            sk_instance** out, char** trace_json);

/* ---- oracles ----------------------------------------------------------- */

SK_API void sk_limits_default(sk_limits* limits);

/* problem: "sat", "nae", "2col", "4col", "hc", "dhc", "ds", "cds", "tsd",
 * "hampath", "colrbds" or "listcol". budget < 0 uses the instance budget
 * (ds and cds only). limits may be NULL for the defaults. The certificate is
 * set only for YES; info_json holds the verdict, node count and any detail. */
SK_API sk_status sk_solve(const char* problem, const sk_instance* inst, int64_t budget,
                          const sk_limits* limits, sk_verdict* verdict, char** certificate_json,
                          char** info_json);

/* *valid is 1 when the certificate solves the instance, else 0. */
SK_API sk_status sk_check(const char* problem, const sk_instance* inst, int64_t budget,
                          const char* certificate_json, int* valid);

/* ---- generators and harness -------------------------------------------- */

/* kind and parameters (JSON object, NULL for defaults):
 *   cnf            n, count, minSize, maxSize
 *   hypergraph     n, count, minSize, maxSize
 *   digraph        n, p, plant
 *   tsd            m (|X|), n (triangles), p, plant
 *   bipartite-ham  m (|A|), n (|B| = m + 1), p, plant
 *   eq-col-rbds    k, classSize, n (|B|), p, plant
 * plant is "yes", "no" or "none". */
SK_API sk_status sk_generate(const char* kind, const char* params_json, uint64_t seed,
                             sk_instance** out);

/* Runs the verification harness. config_json keys: transformation, trials,
 * seed, trialSeed, yesBias, exact, partitions, params {n, m, d, k, t, count,
 * p}, limits {nodeBudget, seconds, variableCap, budgetCap}. exit_code gets 0
 * (all agree), 1 (disagreement or failed check) or 3 (oracle timeout or
 * refusal). */
SK_API sk_status sk_verify(const char* config_json, char** report_json, int* exit_code);

/* Names of the harness transformations, one per line. */
SK_API sk_status sk_transformations(char** out);

#ifdef __cplusplus
}
#endif

#endif
