/*
 * potnil C API.
 *
 * Every object is an opaque handle created by a potnil_* constructor and
 * released by the matching *_free function. Functions that can fail return a
 * potnil_status; on failure potnil_last_error() describes the most recent
 * error on the calling thread. Strings returned through char** out-parameters
 * are owned by the caller and released with potnil_string_free().
 */
#ifndef POTNIL_H
#define POTNIL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(POTNIL_BUILDING_LIBRARY)
#    define POTNIL_API __declspec(dllexport)
#  else
#    define POTNIL_API __declspec(dllimport)
#  endif
#else
#  define POTNIL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum potnil_status {
    POTNIL_OK = 0,
    POTNIL_ERR_INVALID_ARGUMENT = 1,
    POTNIL_ERR_SPEC_MISMATCH = 2,
    POTNIL_ERR_ZERO_INVERSE = 3,
    POTNIL_ERR_DIVISION_BY_ZERO_POLY = 4,
    POTNIL_ERR_NOT_MONIC = 5,
    POTNIL_ERR_DIMENSION_MISMATCH = 6,
    POTNIL_ERR_SINGULAR = 7,
    POTNIL_ERR_PREFIX_TOO_LONG = 8,
    POTNIL_ERR_BAD_PREFIX_LENGTH = 9,
    POTNIL_ERR_NONZERO_TRACE = 10,
    POTNIL_ERR_CRITERION_FAILED = 11,
    POTNIL_ERR_BLOCK_CRITERION_FAILED = 12,
    POTNIL_ERR_BUDGET_EXCEEDED = 13,
    POTNIL_ERR_NOT_FOUND = 14,
    POTNIL_ERR_PARSE = 15,
    POTNIL_ERR_INTERNAL = 16
} potnil_status;

typedef struct potnil_field potnil_field;
typedef struct potnil_matrix potnil_matrix;
typedef struct potnil_decomposition potnil_decomposition;
typedef struct potnil_similarity potnil_similarity;
typedef struct potnil_rcf potnil_rcf;
typedef struct potnil_enum_report potnil_enum_report;
typedef struct potnil_prescribed_report potnil_prescribed_report;

typedef struct potnil_certificate {
    size_t potent_count;
    size_t potents_passed;
    int nilpotent;
    int sum;
    size_t nilpotency_index; /* smallest e >= 1 with N^e = 0, 0 if none */
    int verified;
} potnil_certificate;

typedef struct potnil_enumerate_options {
    uint64_t budget;  /* 0 selects the default of 2e7 candidate matrices */
    unsigned jobs;    /* 0 or 1: single-threaded */
    int with_oracle;
} potnil_enumerate_options;

typedef struct potnil_enum_counts {
    uint64_t total;
    uint64_t criterion;
    uint64_t constructive;
    int64_t oracle; /* -1 when the oracle was skipped */
    uint64_t mismatches;
} potnil_enum_counts;

typedef struct potnil_prescribed_options {
    uint64_t budget; /* 0 selects the default */
    unsigned jobs;
    double sample;   /* fraction in (0, 1]; 0 means exhaustive */
    uint64_t seed;
} potnil_prescribed_options;

typedef struct potnil_prescribed_counts {
    uint64_t instances;
    uint64_t searched;
    uint64_t found;
    uint64_t failures;
} potnil_prescribed_counts;

POTNIL_API const char* potnil_version(void);
POTNIL_API const char* potnil_last_error(void);
POTNIL_API const char* potnil_status_name(potnil_status status);
POTNIL_API void potnil_string_free(char* s);

/* Fields. modulus may be NULL (smallest irreducible); otherwise degree + 1
 * ascending coefficients, monic. */
POTNIL_API potnil_status potnil_field_create(uint64_t p, unsigned degree, const uint64_t* modulus,
                                             potnil_field** out);
POTNIL_API void potnil_field_free(potnil_field* field);
POTNIL_API uint64_t potnil_field_characteristic(const potnil_field* field);
POTNIL_API unsigned potnil_field_degree(const potnil_field* field);
POTNIL_API uint64_t potnil_field_order(const potnil_field* field);
POTNIL_API potnil_status potnil_field_header(const potnil_field* field, char** out);

/* Matrices. */
POTNIL_API potnil_status potnil_matrix_parse(const char* text, potnil_matrix** out);
/* One or more documents; release with potnil_matrix_array_free. */
POTNIL_API potnil_status potnil_matrix_parse_all(const char* text, potnil_matrix*** out, size_t* count);
POTNIL_API void potnil_matrix_array_free(potnil_matrix** matrices, size_t count);
/* Companion matrix of X^n + c_{n-1} X^{n-1} + ... + c_0 from comma-separated
 * element tokens "c0,c1,...". */
POTNIL_API potnil_status potnil_matrix_companion(const potnil_field* field, const char* coeffs_csv,
                                                 potnil_matrix** out);
POTNIL_API void potnil_matrix_free(potnil_matrix* m);
POTNIL_API size_t potnil_matrix_rows(const potnil_matrix* m);
POTNIL_API size_t potnil_matrix_cols(const potnil_matrix* m);
POTNIL_API potnil_status potnil_matrix_to_text(const potnil_matrix* m, char** out);
POTNIL_API potnil_status potnil_matrix_is_companion(const potnil_matrix* m, int* out);
POTNIL_API potnil_status potnil_matrix_trace(const potnil_matrix* m, char** out);
POTNIL_API potnil_status potnil_matrix_is_p_potent(const potnil_matrix* m, int* out);
POTNIL_API potnil_status potnil_matrix_is_nilpotent(const potnil_matrix* m, int* out);
POTNIL_API potnil_status potnil_matrix_charpoly(const potnil_matrix* m, char** out);
POTNIL_API potnil_status potnil_matrix_minpoly(const potnil_matrix* m, char** out);

/* Re-verifies sum(potents) + nilpotent == target with E^p = E and N nilpotent.
 * Returns POTNIL_OK whenever the check ran; inspect out->verified. */
POTNIL_API potnil_status potnil_check(const potnil_matrix* const* potents, size_t potent_count,
                                      const potnil_matrix* nilpotent, const potnil_matrix* target,
                                      potnil_certificate* out);

/* Trace criterion for a companion-shaped matrix. */
POTNIL_API potnil_status potnil_can_decompose(const potnil_matrix* companion, int* out);

/* m p-potents plus a nilpotent for a companion-shaped matrix.
 * POTNIL_ERR_CRITERION_FAILED when the trace is not an integer multiple of unity. */
POTNIL_API potnil_status potnil_decompose_companion(const potnil_matrix* companion, size_t m,
                                                    potnil_decomposition** out);
/* Whole-matrix pipeline through the Frobenius form.
 * POTNIL_ERR_BLOCK_CRITERION_FAILED when a block trace leaves the prime
 * subfield; existence for the input is then undecided. block_index may be NULL. */
POTNIL_API potnil_status potnil_decompose_matrix(const potnil_matrix* a, size_t m, potnil_decomposition** out,
                                                 size_t* block_index);
/* Brute-force oracle. *out is NULL when no decomposition exists. */
POTNIL_API potnil_status potnil_brute_force(const potnil_matrix* a, uint64_t budget, unsigned jobs,
                                            potnil_decomposition** out);

POTNIL_API void potnil_decomposition_free(potnil_decomposition* d);
POTNIL_API size_t potnil_decomposition_potent_count(const potnil_decomposition* d);
POTNIL_API potnil_status potnil_decomposition_potent(const potnil_decomposition* d, size_t index,
                                                     potnil_matrix** out);
POTNIL_API potnil_status potnil_decomposition_nilpotent(const potnil_decomposition* d, potnil_matrix** out);
POTNIL_API void potnil_decomposition_certificate(const potnil_decomposition* d, potnil_certificate* out);
POTNIL_API potnil_status potnil_decomposition_certificate_text(const potnil_decomposition* d, char** out);

/* Similarity of a companion matrix to companion + diag(prefix). A prefix of
 * length n uses the two-stage uniform shift; shorter prefixes the direct
 * change of basis. Result satisfies C = P D P^-1. */
POTNIL_API potnil_status potnil_similar(const potnil_matrix* companion, const char* prefix_csv,
                                        potnil_similarity** out);
POTNIL_API void potnil_similarity_free(potnil_similarity* s);
POTNIL_API potnil_status potnil_similarity_modified(const potnil_similarity* s, potnil_matrix** out);
POTNIL_API potnil_status potnil_similarity_p(const potnil_similarity* s, potnil_matrix** out);
POTNIL_API potnil_status potnil_similarity_p_inv(const potnil_similarity* s, potnil_matrix** out);

/* Frobenius normal form. */
POTNIL_API potnil_status potnil_rcf_compute(const potnil_matrix* a, potnil_rcf** out);
POTNIL_API void potnil_rcf_free(potnil_rcf* r);
POTNIL_API size_t potnil_rcf_factor_count(const potnil_rcf* r);
POTNIL_API potnil_status potnil_rcf_factor(const potnil_rcf* r, size_t index, char** out);
POTNIL_API potnil_status potnil_rcf_block_diagonal(const potnil_rcf* r, potnil_matrix** out);
POTNIL_API potnil_status potnil_rcf_witness(const potnil_rcf* r, potnil_matrix** p, potnil_matrix** p_inv);

/* Exhaustive trace-criterion check over all companion matrices of size n. */
POTNIL_API potnil_status potnil_enumerate(const potnil_field* field, size_t n, const potnil_enumerate_options* options,
                                          potnil_enum_report** out);
POTNIL_API void potnil_enum_report_free(potnil_enum_report* r);
POTNIL_API void potnil_enum_report_counts(const potnil_enum_report* r, potnil_enum_counts* out);
POTNIL_API potnil_status potnil_enum_report_summary(const potnil_enum_report* r, char** out);
POTNIL_API potnil_status potnil_enum_report_csv(const potnil_enum_report* r, char** out);

/* Prescribed characteristic polynomial sweep over a prime field. */
POTNIL_API potnil_status potnil_prescribed(uint64_t p, size_t n, const potnil_prescribed_options* options,
                                           potnil_prescribed_report** out);
POTNIL_API void potnil_prescribed_report_free(potnil_prescribed_report* r);
POTNIL_API void potnil_prescribed_report_counts(const potnil_prescribed_report* r, potnil_prescribed_counts* out);
POTNIL_API potnil_status potnil_prescribed_report_summary(const potnil_prescribed_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* POTNIL_H */
