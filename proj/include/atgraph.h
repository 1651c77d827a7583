/*
 * Copyright 2026 The atgraph authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libatgraph: construction and certification of the
 * arc-transitive diameter-2 graph families H(2,q) and Gamma(d,q), plus
 * exact-arithmetic degree-diameter bound tables.
 *
 * Conventions:
 *   - every fallible function returns an atg_status (ATG_OK on success);
 *   - graphs are opaque handles freed with atg_graph_free;
 *   - returned strings are NUL-terminated, owned by the caller, and freed
 *     with atg_string_free.
 */

#ifndef ATGRAPH_H
#define ATGRAPH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ATG_API __declspec(dllexport)
#else
#define ATG_API __attribute__((visibility("default")))
#endif

typedef enum atg_status {
  ATG_OK = 0,
  ATG_NOT_A_PRIME_POWER = 1,
  ATG_DIMENSION_TOO_SMALL = 2,
  ATG_PARAMETER_TOO_SMALL = 3,
  ATG_DIVISION_BY_ZERO = 4,
  ATG_INDEX_OUT_OF_RANGE = 5,
  ATG_SELF_LOOP = 6,
  ATG_DISCONNECTED = 7,
  ATG_IDENTICAL_LINES = 8,
  ATG_NON_INVERTIBLE = 9,
  ATG_SHAPE_MISMATCH = 10,
  ATG_NOT_AN_AUTOMORPHISM = 11,
  ATG_BUDGET_EXCEEDED = 12,
  ATG_EPS_OUT_OF_RANGE = 13,
  ATG_INEXACT_DIVISION = 14,
  ATG_PRECISION_EXHAUSTED = 15,
  ATG_BAD_ARGUMENT = 16,
  ATG_PARSE_ERROR = 17,
  ATG_IO_ERROR = 18,
  ATG_INTERNAL_ERROR = 99
} atg_status;

typedef enum atg_variant {
  ATG_VARIANT_DEGREE_CONSISTENT = 0,
  ATG_VARIANT_AS_STATED = 1
} atg_variant;

typedef enum atg_cert_mode {
  ATG_MODE_ORBIT = 0,
  ATG_MODE_BRUTE = 1,
  ATG_MODE_BOTH = 2
} atg_cert_mode;

typedef enum atg_table_format {
  ATG_FORMAT_CSV = 0,
  ATG_FORMAT_MD = 1
} atg_table_format;

/* Opaque graph handle (a graph plus the family parameters it came from). */
typedef struct atg_graph atg_graph;

ATG_API const char* atg_version(void);
ATG_API const char* atg_status_name(int status);
ATG_API void atg_string_free(char* s);

/* --- construction ------------------------------------------------------ */

/* Hamming graph H(2,q) for any integer q >= 2. */
ATG_API int atg_hamming2(int64_t q, atg_graph** out);

/* Projective flag graph on PG(d-1,q); d >= 3, q a prime power. */
ATG_API int atg_flag_graph(int64_t d, int64_t q, int variant, atg_graph** out);

/* Parse the edge-list text format produced by atg_graph_edge_list_text. */
ATG_API int atg_graph_parse_edge_list(const char* text, atg_graph** out);

ATG_API void atg_graph_free(atg_graph* g);

/* --- queries ------------------------------------------------------------ */

ATG_API int64_t atg_graph_order(const atg_graph* g);
ATG_API int64_t atg_graph_edge_count(const atg_graph* g);

/* Diameter; fails with ATG_DISCONNECTED rather than returning a sentinel. */
ATG_API int atg_graph_diameter(const atg_graph* g, int64_t* out);

/* Girth; *out = 0 when the graph is acyclic. */
ATG_API int atg_graph_girth(const atg_graph* g, int64_t* out);

ATG_API int atg_graph_regularity(const atg_graph* g, int* is_regular,
                                 int64_t* degree);

/* Label of one vertex, or NULL when the graph carries no labels.
 * The pointer stays owned by the graph handle. */
ATG_API const char* atg_graph_vertex_label(const atg_graph* g, int64_t v);

/* --- serialization ------------------------------------------------------ */

ATG_API int atg_graph_edge_list_text(const atg_graph* g, char** out);
ATG_API int atg_graph_json(const atg_graph* g, char** out);

/* --- certification ------------------------------------------------------ */

/*
 * Produce a JSON certificate (order, degree, diameter, girth, predicted
 * parameters, transitivity evidence). mode selects orbit closure under the
 * family's generator set, the brute-force automorphism oracle, or both;
 * budget caps the oracle's vertex count; with_timing controls the
 * timing_ms field (suppress it for byte-reproducible output).
 * *all_ok is set to 1 when every family-claimed property verified.
 */
ATG_API int atg_certify_hamming(int64_t q, int mode, int64_t budget,
                                int with_timing, char** json_out, int* all_ok);
/* use_frobenius additionally closes orbits under the coordinatewise p-th
 * power when GF(q) is a proper extension field (0 = linear action only). */
ATG_API int atg_certify_flag(int64_t d, int64_t q, int variant, int mode,
                             int64_t budget, int with_timing,
                             int use_frobenius, char** json_out, int* all_ok);
/* Re-certify a serialized graph against the construction in its header. */
ATG_API int atg_certify_edge_list(const char* text, int mode, int64_t budget,
                                  int with_timing, char** json_out,
                                  int* all_ok);

/* --- bound tables ------------------------------------------------------- */

/* One row per degree in [delta_min, delta_max]; columns delta, moore,
 * moore_refined, brown, mms, ans, ss, hamming (blank when inapplicable;
 * exact fractions as "a/b"; enclosures as "lo..hi"). */
ATG_API int atg_bounds_table(int64_t delta_min, int64_t delta_max, int format,
                             char** out);

/* Flag-family scan at eps = eps_num/eps_den (0 < eps <= 1): rows for odd
 * d >= max(3, 3/eps) up to d_max and odd prime powers q <= q_max. */
ATG_API int atg_scan_table(int64_t eps_num, int64_t eps_den, int64_t d_max,
                           int64_t q_max, int format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ATGRAPH_H */
