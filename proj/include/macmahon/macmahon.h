#ifndef MACMAHON_H
#define MACMAHON_H

/* C interface to the macmahon library. All objects are opaque handles owned
 * by the caller and released with the matching *_free function. Strings
 * returned through char** are released with mm_string_free. Every fallible
 * call returns an mm_status; on failure the out-parameter is left untouched
 * and mm_last_error() describes the problem (per thread). */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MM_API __declspec(dllexport)
#elif defined(__GNUC__)
#define MM_API __attribute__((visibility("default")))
#else
#define MM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mm_status {
  MM_OK = 0,
  MM_ERR_VERIFY = 1, /* a verification or report found a failure */
  MM_ERR_PARSE = 2,
  MM_ERR_CAP = 3, /* an enumeration cap was exceeded */
  MM_ERR_INAPPLICABLE = 4,
  MM_ERR_INVALID_ARGUMENT = 5,
  MM_ERR_DOMAIN = 6, /* e.g. a forest-only operation applied to a non-forest */
  MM_ERR_OVERFLOW = 7,
  MM_ERR_INTERNAL = 8
} mm_status;

typedef struct mm_graph mm_graph;
typedef struct mm_element mm_element; /* element of Mac^m in the power-sum basis */
typedef struct mm_tensor mm_tensor;
typedef struct mm_poly mm_poly; /* Laurent polynomial with named variables */
typedef struct mm_beta mm_beta; /* beta table of a forest */

typedef struct mm_limits {
  size_t max_edges;
  size_t max_vertices;
  uint64_t max_colorings;
} mm_limits;

typedef enum mm_keep { MM_KEEP_CARDINALITY = 0, MM_KEEP_WEIGHT = 1 } mm_keep;
typedef enum mm_gdp_kind { MM_GDP_WEIGHTED = 0, MM_GDP_PLAIN = 1 } mm_gdp_kind;

#define MM_MAX_WEIGHT_DIM 16

typedef struct mm_stats {
  int64_t vertices;
  int64_t edges;
  int64_t components;
  size_t weight_dim;
  int64_t weight[MM_MAX_WEIGHT_DIM];
} mm_stats;

typedef enum mm_verify_mode { MM_VERIFY_EXHAUSTIVE = 0, MM_VERIFY_RANDOM = 1 } mm_verify_mode;

typedef struct mm_verify_options {
  mm_verify_mode mode;
  size_t n_max;
  int64_t weight_max;
  size_t r;
  uint64_t seed;
  size_t trials;
  mm_limits limits;
  int corrupt_beta; /* negative control: perturb one beta coefficient */
} mm_verify_options;

MM_API const char* mm_last_error(void);
MM_API const char* mm_status_name(mm_status status);
MM_API void mm_string_free(char* s);
MM_API mm_limits mm_default_limits(void);
MM_API mm_verify_options mm_default_verify_options(void);

/* graphs */
MM_API mm_status mm_graph_parse(const char* text, mm_graph** out);
MM_API mm_status mm_graph_load(const char* path, mm_graph** out);
MM_API mm_status mm_graph_random_forest(size_t n, int64_t max_weight, size_t r, uint64_t seed, mm_graph** out);
MM_API mm_status mm_graph_serialize(const mm_graph* g, char** out);
MM_API size_t mm_graph_vertex_count(const mm_graph* g);
MM_API size_t mm_graph_edge_count(const mm_graph* g);
MM_API size_t mm_graph_weight_dim(const mm_graph* g);
MM_API void mm_graph_free(mm_graph* g);

/* invariants; limits may be NULL for the defaults */
MM_API mm_status mm_cmf(const mm_graph* g, const mm_limits* limits, mm_element** out);
MM_API mm_status mm_egdp(const mm_graph* g, const mm_limits* limits, mm_poly** out);
MM_API mm_status mm_beta_table(const mm_graph* g, const mm_limits* limits, mm_beta** out);
MM_API mm_status mm_coloring_oracle(const mm_graph* g, unsigned k, const mm_limits* limits, mm_poly** out);

/* MacMahon elements */
MM_API mm_status mm_element_serialize(const mm_element* e, char** out);
MM_API size_t mm_element_width(const mm_element* e);
MM_API mm_status mm_element_equal(const mm_element* a, const mm_element* b, int* out);
MM_API mm_status mm_element_truncate(const mm_element* e, int k, mm_poly** out);
/* MM_KEEP_WEIGHT on an element of width other than 2 is MM_ERR_INAPPLICABLE. */
MM_API mm_status mm_element_specialize(const mm_element* e, mm_keep keep, mm_element** out);
MM_API mm_status mm_element_antipode(const mm_element* e, mm_element** out);
MM_API mm_status mm_element_coproduct(const mm_element* e, mm_tensor** out);
MM_API mm_status mm_element_phi(const mm_element* e, mm_poly** out);
MM_API mm_status mm_element_gamma(const mm_element* e, mm_poly** out);
MM_API mm_status mm_element_recover_stats(const mm_element* e, mm_stats* out);
MM_API mm_status mm_element_recover_egdp(const mm_element* e, mm_poly** out);
MM_API void mm_element_free(mm_element* e);

MM_API mm_status mm_tensor_serialize(const mm_tensor* t, char** out);
MM_API void mm_tensor_free(mm_tensor* t);

/* polynomials */
MM_API mm_status mm_poly_serialize(const mm_poly* p, char** out);
MM_API mm_status mm_poly_specialize_gdp(const mm_poly* egdp, mm_gdp_kind kind, mm_poly** out);
/* Coefficient of prod names[i]^exponents[i]; unnamed variables have exponent 0. */
MM_API mm_status mm_poly_coefficient(const mm_poly* p, const char* const* names, const int64_t* exponents,
                                     size_t count, int64_t* out);
MM_API mm_status mm_poly_equal(const mm_poly* a, const mm_poly* b, int* out);
MM_API void mm_poly_free(mm_poly* p);

/* beta tables */
MM_API mm_status mm_beta_serialize(const mm_beta* b, char** out);
MM_API mm_status mm_beta_recover_egdp(const mm_beta* b, int64_t n, int64_t w, int64_t e, mm_poly** out);
MM_API void mm_beta_free(mm_beta* b);

/* reports: the text is produced even when the status is MM_ERR_VERIFY */
MM_API mm_status mm_verify(const mm_verify_options* options, char** report);
MM_API mm_status mm_counterexample(char** report);
/* family is "star" or "path" */
MM_API mm_status mm_bases_check(const char* family, int64_t n_max, int64_t w_max, const mm_limits* limits,
                                char** report);
MM_API mm_status mm_basis_matrix(const char* family, int64_t n, int64_t w, const mm_limits* limits, char** out);

#ifdef __cplusplus
}
#endif

#endif
