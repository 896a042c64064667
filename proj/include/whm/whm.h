/* C interface to the weighted-Hamming-metric library.
 *
 * Objects are opaque handles released with their matching *_free call.
 * Every function returns a whm_status; on failure whm_last_error() describes
 * the problem for the calling thread. Strings returned through char** are
 * owned by the caller and released with whm_string_free. Field elements are
 * integers in [0, q^m) (little-endian base-q digits of the coefficients). */
#ifndef WHM_WHM_H
#define WHM_WHM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WHM_API __declspec(dllexport)
#else
#define WHM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum whm_status {
  WHM_OK = 0,
  WHM_ERR_PARAM = 2,      /* invalid parameters or malformed input */
  WHM_ERR_EXHAUSTION = 3, /* an enumeration limit was exceeded */
  WHM_ERR_INTERNAL = 4    /* internal defect */
} whm_status;

typedef struct whm_space whm_space;
typedef struct whm_code whm_code;
typedef struct whm_gcc_builder whm_gcc_builder;
typedef struct whm_gcc whm_gcc;

WHM_API const char* whm_last_error(void);
WHM_API void whm_string_free(char* s);

/* ---- weighted space ---- */
WHM_API whm_status whm_space_create(uint32_t q, const int* blocks, const int* lambda, size_t count, whm_space** out);
WHM_API void whm_space_free(whm_space* space);
WHM_API int whm_space_length(const whm_space* space);

/* Profiles of the ball B(t) (diff = 0) or of its difference set (diff = 1),
 * one comma-separated profile per line. */
WHM_API whm_status whm_enumerate_profiles(const whm_space* space, long t, int diff, char** out);

/* Bound table for t_min..t_max. format: "csv" or "json". */
WHM_API whm_status whm_bounds(const whm_space* space, long t_min, long t_max, const char* format, int with_optimum,
                              char** out);

/* ---- linear codes ---- */
/* family: repetition, parity, full, hamming, rs. degree > 1 selects F_{q^degree}.
 * k = 0 picks the family's natural dimension. */
WHM_API whm_status whm_code_family(const char* family, uint32_t q, uint32_t degree, size_t n, size_t k, whm_code** out);
/* Matrix text: header "q n k" or "q m n k", then k rows of n elements. */
WHM_API whm_status whm_code_parse(const char* text, whm_code** out);
WHM_API void whm_code_free(whm_code* code);
WHM_API size_t whm_code_length(const whm_code* code);
WHM_API size_t whm_code_dimension(const whm_code* code);
/* Extension degree m of the code's field F_{q^m} (1 for prime fields). */
WHM_API uint32_t whm_code_degree(const whm_code* code);
WHM_API whm_status whm_code_format(const whm_code* code, char** out);

/* Exact d, t, the implied bracket and the bounds at t, as JSON. limits of 0
 * keep the defaults. with_lp = 0 skips the linear program. */
WHM_API whm_status whm_analyze(const whm_code* code, const whm_space* space, uint64_t codeword_limit,
                               uint64_t ambient_limit, int with_lp, char** out);

/* ---- generalized concatenated codes ---- */
WHM_API whm_status whm_gcc_builder_create(const whm_space* space, size_t levels, whm_gcc_builder** out);
WHM_API void whm_gcc_builder_free(whm_gcc_builder* builder);
/* Chain for one block (0-based): `levels` codes, largest first. */
WHM_API whm_status whm_gcc_builder_set_chain(whm_gcc_builder* builder, size_t block, const whm_code* const* codes,
                                             size_t count);
/* Outer code of one level (0-based), symbol sizes following from the chains. */
WHM_API whm_status whm_gcc_builder_set_outer_full(whm_gcc_builder* builder, size_t level);
/* Explicit outer code over F_q whose length is the level's total symbol size. */
WHM_API whm_status whm_gcc_builder_set_outer_code(whm_gcc_builder* builder, size_t level, const whm_code* code);
/* Polyalphabetic code from a mother code over F_{q^mu} of length `blocks`. */
WHM_API whm_status whm_gcc_builder_set_outer_mother(whm_gcc_builder* builder, size_t level, const whm_code* mother);
/* Polyalphabetic code from a named mother family (repetition, parity, rs) whose
 * field degree mu follows from the level's symbol sizes. k = 0 picks the
 * family's natural dimension; rs needs k. */
WHM_API whm_status whm_gcc_builder_set_outer_family(whm_gcc_builder* builder, size_t level, const char* family,
                                                    size_t k);
/* use_declared = 1 takes mother-code distances instead of exhaustive ones. */
WHM_API whm_status whm_gcc_build(const whm_gcc_builder* builder, int use_declared, whm_gcc** out);
WHM_API void whm_gcc_free(whm_gcc* gcc);

WHM_API size_t whm_gcc_length(const whm_gcc* gcc);
WHM_API size_t whm_gcc_dimension(const whm_gcc* gcc);
WHM_API long whm_gcc_designed_distance(const whm_gcc* gcc);
WHM_API long whm_gcc_capability_bound(const whm_gcc* gcc);
WHM_API whm_status whm_gcc_summary(const whm_gcc* gcc, char** out);
/* Generator matrix of the concatenated code as a linear code. */
WHM_API whm_status whm_gcc_generator(const whm_gcc* gcc, whm_code** out);
/* message of length k, codeword buffer of length N. */
WHM_API whm_status whm_gcc_encode(const whm_gcc* gcc, const uint32_t* message, uint32_t* codeword);
/* Multistage decoding report as JSON; *ok receives 1 when no outer decode failed. */
WHM_API whm_status whm_gcc_decode(const whm_gcc* gcc, const uint32_t* received, size_t length, int* ok, char** out);
/* Decodes c + e for every wt(e) <= t (sampled codewords above 2^10). JSON
 * report; *failures receives the failure count. */
WHM_API whm_status whm_gcc_check(const whm_gcc* gcc, long t, uint64_t seed, uint64_t codeword_limit,
                                 uint64_t ambient_limit, uint64_t* failures, char** out);

/* ---- search ---- */
/* inner: comma-separated families; outer: comma-separated among full, parity,
 * repetition, rs. Writes the "t,k" frontier, a blank line, the "d,k" frontier. */
WHM_API whm_status whm_search(const whm_space* space, const char* inner, const char* outer, size_t max_levels,
                              int with_recipe, char** out);

#ifdef __cplusplus
}
#endif

#endif
