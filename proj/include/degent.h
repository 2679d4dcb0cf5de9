/* C interface to the degree-based entropy library.
 *
 * Graphs are opaque handles. Structured results come back as JSON
 * documents in heap strings; release them with degent_string_free.
 * Every call returns DEGENT_OK or an error code; the message for the
 * most recent failure on the calling thread is available via
 * degent_last_error.
 */
#ifndef DEGENT_H
#define DEGENT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct degent_graph degent_graph;

typedef enum {
    DEGENT_OK = 0,
    DEGENT_ERR_INVALID_ARGUMENT = 1,
    DEGENT_ERR_PARSE = 2,
    DEGENT_ERR_INTERNAL = 3,
} degent_status;

/* Message for the last failing call on this thread ("" if none). */
const char* degent_last_error(void);

void degent_string_free(char* s);
void degent_graph_free(degent_graph* g);

/* Edge-list text: '#' comments, "n m" header, then m lines "u v", 1-based. */
degent_status degent_graph_parse(const char* text, degent_graph** out);

/* Family spec: "complete:K", "complete_bipartite:S,T", "star:N", "empty:N",
 * "kkt:K,T" (K_k plus a vertex joined to t of its vertices),
 * "b:N,M,B" (the bipartite B(n,m,b) construction).
 * pad adds that many isolated vertices. */
degent_status degent_graph_build(const char* family_spec, int pad, degent_graph** out);

degent_status degent_graph_complement(const degent_graph* g, degent_graph** out);
degent_status degent_graph_union(const degent_graph* g, const degent_graph* h,
                                 degent_graph** out);

/* Canonical edge-list text (bit-exact emission). */
degent_status degent_graph_emit(const degent_graph* g, char** out_text);

/* {"two_m":..,"h_d":..,"i_d":..,"exact_key":".."} */
degent_status degent_graph_entropy(const degent_graph* g, char** out_json);

/* kind is "threshold" or "difference"; {"kind":..,"verdict":..,"witness":[..]} */
degent_status degent_recognize(const degent_graph* g, const char* kind, char** out_json);

/* Closed-form minimum entropy with extremal graphs; bipartite is 0 or 1. */
degent_status degent_min_entropy(int n, long m, int bipartite, char** out_json);

/* theorem: "1", "2", "le1", "le7", "le8", "cor2". mode: "graphs" (default
 * when NULL; exhaustive over edge subsets, isomorphism-level checks) or
 * "sequences" (degree-sequence oracle only; theorems 1 and 2). threads <= 0
 * means all cores. Sets *out_failures to the failure count. */
degent_status degent_verify(const char* theorem, int max_n, const char* mode, int threads,
                            char** out_json, long* out_failures);

/* Minimum-entropy bipartite table for 2 <= n <= n_max. */
degent_status degent_table1(int n_max, char** out_json);

/* Entropy of B(n,m,b) across all valid b, with exact-key argmin. */
degent_status degent_explore_b(int n, long m, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DEGENT_H */
