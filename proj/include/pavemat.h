/* pavemat - paving-matroid construction and verification engine.
 *
 * C API over the core library: opaque handles, status codes, text records.
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with pm_string_free. On failure the thread-local message from
 * pm_last_error describes what went wrong.
 */

#ifndef PAVEMAT_H
#define PAVEMAT_H

#if defined(_WIN32)
#define PAVEMAT_API __declspec(dllexport)
#else
#define PAVEMAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pm_matroid pm_matroid; /* immutable, exchange-validated matroid */
typedef struct pm_seed pm_seed;       /* a family of subsets with ground size and rank */

typedef enum pm_status {
    PM_OK = 0,
    PM_ERR_NULL = 1,        /* required argument was NULL */
    PM_ERR_DOMAIN = 2,      /* precondition or invariant violation */
    PM_ERR_NOT_MATROID = 3, /* basis family fails the exchange axiom */
    PM_ERR_PARSE = 4,       /* malformed record text */
    PM_ERR_CAP = 5,         /* enumeration cap exceeded */
    PM_ERR_INTERNAL = 6
} pm_status;

typedef enum pm_class {
    PM_CLASS_PAVING = 0,
    PM_CLASS_SPARSE_PAVING = 1,
    PM_CLASS_ALL = 2
} pm_class;

typedef enum pm_mode {
    PM_MODE_LABELED = 0,
    PM_MODE_ISO = 1 /* one representative per isomorphism class */
} pm_mode;

typedef enum pm_simplicity {
    PM_SIMPLE_NONE = 0,
    PM_SIMPLE_PAPER = 1,   /* no loops */
    PM_SIMPLE_STANDARD = 2 /* no loops, no parallel pairs */
} pm_simplicity;

PAVEMAT_API const char* pm_version(void);
PAVEMAT_API const char* pm_status_name(pm_status status);

/* Message of the most recent failing call on this thread. */
PAVEMAT_API const char* pm_last_error(void);

PAVEMAT_API void pm_string_free(char* text);

/* ---- seeds: families of subsets over {1..n} with a target rank ---- */

PAVEMAT_API pm_status pm_seed_create(int n, int r, pm_seed** out);
/* elements: 1-based labels; duplicates within the family are ignored */
PAVEMAT_API pm_status pm_seed_add_set(pm_seed* seed, const int* elements, int count);
PAVEMAT_API pm_status pm_seed_parse(const char* text, pm_seed** out);
PAVEMAT_API pm_status pm_seed_format(const pm_seed* seed, char** out_text);
/* PM_OK when the hyperplane-seed invariants hold (sizes in [r, n-1],
 * pairwise intersections <= r-2); PM_ERR_DOMAIN with a report otherwise. */
PAVEMAT_API pm_status pm_seed_validate(const pm_seed* seed);
PAVEMAT_API int pm_seed_n(const pm_seed* seed);
PAVEMAT_API int pm_seed_rank(const pm_seed* seed);
PAVEMAT_API int pm_seed_set_count(const pm_seed* seed);
PAVEMAT_API void pm_seed_free(pm_seed* seed);

/* ---- construction ---- */

/* Paving matroid whose large hyperplanes are exactly the seed family. */
PAVEMAT_API pm_status pm_construct_paving(const pm_seed* seed, pm_matroid** out);

/* Sparse-paving matroid whose r-circuits are the seed family; every member
 * must have size exactly r. */
PAVEMAT_API pm_status pm_construct_sparse(const pm_seed* seed, pm_matroid** out);

/* Randomized greedy seed search; bound < 0 selects the default budget of
 * 50*C(n,r). Deterministic for a fixed rng_seed. complete != 0 runs the
 * deterministic completion pass, making the family maximal. */
PAVEMAT_API pm_status pm_greedy_seed(int n, int r, long long bound,
                                     unsigned long long rng_seed, int complete,
                                     pm_seed** out);

/* ---- matroids ---- */

/* Parses a matroid record and validates it through the exchange oracle. */
PAVEMAT_API pm_status pm_matroid_parse(const char* text, pm_matroid** out);
PAVEMAT_API pm_status pm_matroid_format(const pm_matroid* m, int with_derived,
                                        char** out_text);
PAVEMAT_API int pm_matroid_n(const pm_matroid* m);
PAVEMAT_API int pm_matroid_rank(const pm_matroid* m);
PAVEMAT_API long long pm_matroid_basis_count(const pm_matroid* m);
PAVEMAT_API int pm_matroid_is_paving(const pm_matroid* m);
PAVEMAT_API int pm_matroid_is_sparse_paving(const pm_matroid* m);
PAVEMAT_API pm_status pm_matroid_dual(const pm_matroid* m, pm_matroid** out);
/* Seed extraction: the hyperplanes of size >= rank. Paving matroids of
 * rank >= 2 only. */
PAVEMAT_API pm_status pm_matroid_seed(const pm_matroid* m, pm_seed** out);
PAVEMAT_API void pm_matroid_free(pm_matroid* m);

/* One-shot verification of a matroid record: parses the text, runs the
 * exchange oracle and produces the full structure report. *out_is_matroid
 * is 1 when the family is a matroid. A failed oracle still returns PM_OK;
 * only malformed text gives PM_ERR_PARSE. */
PAVEMAT_API pm_status pm_verify_text(const char* record_text, char** out_report,
                                     int* out_is_matroid);

/* ---- enumeration and counting ---- */

/* Return 0 to continue, nonzero to stop early (the run still ends PM_OK).
 * The handle is borrowed; copy what you need inside the callback. */
typedef int (*pm_matroid_visitor)(const pm_matroid* m, void* user);

/* Streams every matroid of the class in deterministic order. Labeled mode
 * streams each labeled matroid once; iso mode streams one canonical
 * representative per isomorphism class. Honors MATROID_MAX_WORKERS. */
PAVEMAT_API pm_status pm_enumerate(int n, int r, pm_class cls, pm_mode mode,
                                   pm_matroid_visitor visit, void* user);

PAVEMAT_API pm_status pm_count(int n, int r, pm_class cls, pm_mode mode,
                               unsigned long long* out_count);

/* Aligned plain-text count table (header plus one row) for the query. */
PAVEMAT_API pm_status pm_count_table(int n, int r, pm_class cls, pm_mode mode,
                                     char** out_table);

/* Numeric check of |M_{n,r}| <= prod_{t=r..n-1} |Sp_{n,t}|: both sides are
 * computed exhaustively and reported; *out_holds is 1 when the inequality
 * holds. The left side counts matroids under the given simplicity
 * convention. */
PAVEMAT_API pm_status pm_check_bound(int n, int r, pm_simplicity convention,
                                     char** out_report, int* out_holds);

#ifdef __cplusplus
}
#endif

#endif /* PAVEMAT_H */
