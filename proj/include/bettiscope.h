/* bettiscope: Betti numbers of bounded-degree simplicial complexes, exactly
 * on desk-scale inputs and by local spectral sampling on large ones.
 *
 * C interface of the shared library. All objects are opaque handles owned by
 * the library; every function returns a status code and reports details via
 * bs_last_error() (thread local). Strings returned through char** are
 * malloc'd by the library and must be released with bs_string_free().
 */
#ifndef BETTISCOPE_H
#define BETTISCOPE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef BS_API
#if defined(_WIN32)
#define BS_API __declspec(dllexport)
#else
#define BS_API __attribute__((visibility("default")))
#endif
#endif

typedef struct bs_complex bs_complex;
typedef struct bs_corpus bs_corpus;

typedef enum bs_status {
    BS_OK = 0,
    BS_ERR_INVALID_ARGUMENT = 1,
    BS_ERR_PARSE = 2,
    BS_ERR_DEGREE_EXCEEDED = 3,
    BS_ERR_DUPLICATE_SIMPLEX = 4,
    BS_ERR_UNKNOWN_VERTEX = 5,
    BS_ERR_UNKNOWN_SIMPLEX = 6,
    BS_ERR_EMPTY = 7,
    BS_ERR_TOO_LARGE = 8,
    BS_ERR_RADIUS_MISMATCH = 9,
    BS_ERR_NO_MATCH = 10,
    BS_ERR_IO = 11,
    BS_ERR_INTERNAL = 12
} bs_status;

BS_API const char* bs_version(void);
/* Message for the last failing call on this thread; empty when none. */
BS_API const char* bs_last_error(void);
BS_API void bs_string_free(char* s);

/* ---- complexes ------------------------------------------------------- */

BS_API void bs_complex_free(bs_complex* c);

/* "cplx v1" text: first line `dim <d>`, then `s v0 v1 ...` per maximal
 * simplex, `#` comments. */
BS_API bs_status bs_complex_parse(const char* text, bs_complex** out);
BS_API bs_status bs_complex_read_file(const char* path, bs_complex** out);
BS_API bs_status bs_complex_to_text(const bs_complex* c, char** out);
BS_API bs_status bs_complex_write_file(const bs_complex* c, const char* path);

/* Build from tuple_count tuples; tuple_sizes[i] vertices each, flattened in
 * flat_vertices. Face closure and validation applied. */
BS_API bs_status bs_complex_build(const int64_t* flat_vertices, const int32_t* tuple_sizes,
                                  int32_t tuple_count, int32_t degree_bound, bs_complex** out);

/* kind: "torus" (n = grid side), "sphere" (n = k), "cycle", "path",
 * "flag" (n vertices, seeded), "triangles" / "solid-triangles" (copies
 * disjoint hollow/solid triangles). copies replicates the result disjointly.
 * degree_bound 0 picks the kind's natural bound. */
BS_API bs_status bs_generate(const char* kind, int32_t n, int32_t copies, int32_t degree_bound,
                             uint64_t seed, bs_complex** out);

BS_API int32_t bs_complex_dimension(const bs_complex* c); /* -1 when empty */
BS_API int32_t bs_complex_degree_bound(const bs_complex* c);
BS_API int64_t bs_complex_simplex_count(const bs_complex* c, int32_t dim);
BS_API bs_status bs_complex_digest(const bs_complex* c, char** hex_out);

/* Copy with simplex orderings permuted by a seeded random vertex ranking;
 * the simplex sets themselves are unchanged. */
BS_API bs_status bs_orient_random(const bs_complex* c, uint64_t seed, bs_complex** out);

/* ---- exact homology and spectra --------------------------------------- */

/* Writes b^0..b^dim into out (capacity cap); *out_len = dim+1. */
BS_API bs_status bs_betti_exact(const bs_complex* c, int64_t* out, int32_t cap,
                                int32_t* out_len);

/* JSON: eigenvalues with the exact kernel multiplicity, norm bound, log
 * determinant, pseudo-determinant (decimal string), Betti cross-check. */
BS_API bs_status bs_spectrum_json(const bs_complex* c, int32_t dim, int64_t size_cap,
                                  char** json_out);

/* Coordinate-triplet text of Delta^dim: header "% rows cols nnz". */
BS_API bs_status bs_laplacian_triplets(const bs_complex* c, int32_t dim, char** text_out);

/* Runs the structural invariant suite; JSON with one entry per property and
 * an "all_pass" flag. pdet_size_cap bounds the matrices given to the exact
 * pseudo-determinant (0 = default 300). */
BS_API bs_status bs_verify_json(const bs_complex* c, int64_t pdet_size_cap, char** json_out);

/* ---- local sampling ---------------------------------------------------- */

/* samples = 0: exact profile over all roots; else uniform with replacement.
 * JSON map code-hex -> count with (radius, root_dim, mode, total) header. */
BS_API bs_status bs_profile_json(const bs_complex* c, int32_t radius, int32_t root_dim,
                                 int64_t samples, uint64_t seed, int32_t threads,
                                 char** json_out);

/* Truncated sampling pseudo-metric over radii 1..r_max plus the truncation
 * bound on the discarded tail. */
BS_API bs_status bs_sampling_distance(const bs_complex* a, const bs_complex* b, int32_t r_max,
                                      int32_t threads, double* value, double* truncation);

/* N = ceil((200/rho^2) ln(2 * class_bound / eps)). */
BS_API bs_status bs_sample_size(double rho, double eps, int64_t class_bound, int64_t* out);

/* ---- corpus tester ------------------------------------------------------ */

BS_API bs_status bs_corpus_create(int32_t radius, double rho, bs_corpus** out);
/* Members are profiled (exactly) and their Betti numbers precomputed. */
BS_API bs_status bs_corpus_add(bs_corpus* corpus, const bs_complex* member, int32_t threads);
BS_API int32_t bs_corpus_size(const bs_corpus* corpus);
BS_API void bs_corpus_free(bs_corpus* corpus);

/* Returns BS_ERR_NO_MATCH when no entry is within rho/5 of the sampled
 * statistics. JSON: estimate, matched_index, samples_used, matched entry
 * betti/vertices. */
BS_API bs_status bs_test_betti_json(const bs_complex* input, const bs_corpus* corpus,
                                    int32_t dim, double eps, uint64_t seed, char** json_out);

/* ---- spectral estimator ------------------------------------------------- */

/* moments = 0 and samples = -1 derive the budget from eps; samples = 0 forces
 * exact-moment mode; cut = 0 picks the spectral cut automatically. JSON
 * carries the full summary (moments, cdf grid) and the estimate. */
BS_API bs_status bs_estimate_json(const bs_complex* c, int32_t dim, double eps, uint64_t seed,
                                  int32_t moments, int64_t samples, double cut, int32_t threads,
                                  char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BETTISCOPE_H */
