#ifndef CONEKIT_CONEKIT_H
#define CONEKIT_CONEKIT_H

/*
 * conekit: momentum-profile Kähler metrics on P(F + C) over products of
 * Kähler-Einstein Fano manifolds. Smooth extremal profiles, cscK profiles
 * with a cone angle 2πβ along the ∞-section, and the log Futaki invariant of
 * the fibrewise C*-action.
 *
 * Conventions of this C interface:
 *   - every object is an opaque handle released by its *_destroy function;
 *   - exact quantities cross the boundary as decimal rational strings "p/q";
 *   - strings returned as `const char*` are owned by the handle they came
 *     from and stay valid until that handle is destroyed;
 *   - functions returning conekit_status leave a human-readable detail in
 *     conekit_last_error() (per thread) when they fail;
 *   - handles are immutable after creation, except conekit_base while
 *     factors are being added, and may be shared across threads.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CONEKIT_BUILDING_LIBRARY)
#    define CONEKIT_API __declspec(dllexport)
#  else
#    define CONEKIT_API __declspec(dllimport)
#  endif
#else
#  define CONEKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum conekit_status {
    CONEKIT_OK = 0,
    CONEKIT_ERR_INVALID_ARGUMENT = 1,
    CONEKIT_ERR_PARSE = 2,
    CONEKIT_ERR_DEGENERATE_INTERVAL = 3,
    CONEKIT_ERR_POSITIVITY_FAILURE = 4,
    CONEKIT_ERR_INTERNAL_INCONSISTENCY = 5,
    CONEKIT_ERR_POLE_AT_TAU = 6,
    CONEKIT_ERR_INVALID_INTERVAL = 7,
    CONEKIT_ERR_ZERO_POLYNOMIAL = 8,
    CONEKIT_ERR_OVERFLOW = 9,
    CONEKIT_ERR_NON_POSITIVE_PROFILE = 10,
    CONEKIT_ERR_DEGENERATE_DENOMINATOR = 11,
    CONEKIT_ERR_PRECONDITION = 12,
    CONEKIT_ERR_BUFFER_TOO_SMALL = 13,
    CONEKIT_ERR_UNKNOWN = 99
} conekit_status;

typedef enum conekit_poly {
    CONEKIT_POLY_Q = 0,   /* volume ratio Q(τ) */
    CONEKIT_POLY_RQ = 1   /* R(τ)Q(τ) */
} conekit_poly;

typedef enum conekit_moment {
    CONEKIT_MOMENT_A = 0,        /* ∫ Q */
    CONEKIT_MOMENT_B = 1,        /* ∫ τQ */
    CONEKIT_MOMENT_C = 2,        /* ∫ τ²Q */
    CONEKIT_MOMENT_INT_RQ = 3,   /* ∫ RQ */
    CONEKIT_MOMENT_INT_XRQ = 4,  /* ∫ τRQ */
    CONEKIT_MOMENT_HALF_WIDTH = 5, /* b */
    CONEKIT_MOMENT_Q_MINUS = 6,  /* Q(-b) */
    CONEKIT_MOMENT_Q_PLUS = 7    /* Q(b) */
} conekit_moment;

typedef enum conekit_profile {
    CONEKIT_PROFILE_EXTREMAL = 0,
    CONEKIT_PROFILE_CONICAL = 1
} conekit_profile;

typedef enum conekit_quantity {
    CONEKIT_SIGMA0_EXTREMAL = 0,  /* σ₀ */
    CONEKIT_LAMBDA = 1,           /* λ */
    CONEKIT_SIGMA0_CSCK = 2,      /* σ'₀ */
    CONEKIT_BETA = 3,             /* closed-form cone angle */
    CONEKIT_BETA_FROM_SLOPE = 4,  /* -φ'(b)/2 from the boundary derivative */
    CONEKIT_BETA_FUTAKI = 5,      /* zero of the log Futaki invariant */
    CONEKIT_TAU_BAR = 6,          /* B/A */
    /* Futaki values. Rational form: per unit Vol(M), and for the classical
     * invariant also per 2π. Double form: the full invariant. */
    CONEKIT_FUT_CLASSICAL = 7,
    CONEKIT_FUT_LOG = 8           /* log Futaki at the constructed β */
} conekit_quantity;

typedef struct conekit_base conekit_base;
typedef struct conekit_problem conekit_problem;
typedef struct conekit_solution conekit_solution;
typedef struct conekit_verify_report conekit_verify_report;

CONEKIT_API const char* conekit_version(void);
CONEKIT_API const char* conekit_status_name(conekit_status status);
CONEKIT_API const char* conekit_last_error(void);

/* lo + k (hi - lo)/(n - 1) as a canonical rational string (lo when n == 1). */
CONEKIT_API conekit_status conekit_grid_point(const char* lo, const char* hi, int k, int n, char* buf,
                                              size_t capacity);

/* ---- base manifold: list of (dim, Einstein constant, bundle exponent) ---- */

CONEKIT_API conekit_status conekit_base_create(conekit_base** out);
CONEKIT_API void conekit_base_destroy(conekit_base* base);
CONEKIT_API conekit_status conekit_base_add_factor(conekit_base* base, int dim, const char* einstein,
                                                   const char* exponent);
CONEKIT_API size_t conekit_base_factor_count(const conekit_base* base);
/* Supremum of admissible b; *out is NULL when every exponent is zero. */
CONEKIT_API conekit_status conekit_base_max_b(const conekit_base* base, const char** out);
CONEKIT_API conekit_status conekit_base_poly(const conekit_base* base, conekit_poly which, const char** out);
/* Cone angle from floating-point quadrature, for a double b. */
CONEKIT_API conekit_status conekit_beta_float(const conekit_base* base, double b, double* beta);

/* ---- problem: base + momentum interval [-b, b] ---- */

/* a may be NULL (defaults to "1"); vol_M must be positive. */
CONEKIT_API conekit_status conekit_problem_create(const conekit_base* base, const char* b, double vol_M,
                                                  const char* a, conekit_problem** out);
CONEKIT_API void conekit_problem_destroy(conekit_problem* problem);
CONEKIT_API const char* conekit_problem_moment(const conekit_problem* problem, conekit_moment which);
/* The same moment rounded to the nearest double. */
CONEKIT_API double conekit_problem_moment_value(const conekit_problem* problem, conekit_moment which);
CONEKIT_API const char* conekit_problem_poly(const conekit_problem* problem, conekit_poly which);
CONEKIT_API int conekit_problem_poly_degree(const conekit_problem* problem, conekit_poly which);
/* Coefficient k (ascending) as a rational string; "0" beyond the degree. */
CONEKIT_API const char* conekit_problem_poly_coeff(const conekit_problem* problem, conekit_poly which, int k);
/* Exact R(τ) written into buf. */
CONEKIT_API conekit_status conekit_problem_eval_R(const conekit_problem* problem, const char* tau, char* buf,
                                                  size_t capacity);
/* 2π Vol(M) ∫ f Q for f given by ascending rational coefficients. */
CONEKIT_API conekit_status conekit_problem_volume_functional(const conekit_problem* problem,
                                                             const char* const* f_coeffs, size_t count,
                                                             double* out);
/* Largest relative deviation between exact and quadrature moments. */
CONEKIT_API conekit_status conekit_problem_cross_validate(const conekit_problem* problem, double* max_rel_error,
                                                          const char** worst_moment);

/* ---- solution: extremal + conical profiles and Futaki data ---- */

CONEKIT_API conekit_status conekit_solve(const conekit_problem* problem, conekit_solution** out);
CONEKIT_API void conekit_solution_destroy(conekit_solution* solution);
CONEKIT_API const char* conekit_solution_quantity(const conekit_solution* solution, conekit_quantity which);
CONEKIT_API double conekit_solution_value(const conekit_solution* solution, conekit_quantity which);
/* (φQ)(τ) in readable form. */
CONEKIT_API const char* conekit_solution_profile(const conekit_solution* solution, conekit_profile which);
CONEKIT_API const char* conekit_solution_profile_coeff(const conekit_solution* solution, conekit_profile which,
                                                       int k);
CONEKIT_API int conekit_solution_profile_degree(const conekit_solution* solution, conekit_profile which);
/* 1 when the cone angle of the construction equals the zero of log Futaki. */
CONEKIT_API int conekit_solution_identity_ok(const conekit_solution* solution);
/* 1 when the profile has no interior root and is positive at τ = 0. */
CONEKIT_API int conekit_solution_positivity(const conekit_solution* solution, conekit_profile which,
                                            size_t* interior_roots);
/* Exact scalar curvature of the chosen profile at τ, into buf. */
CONEKIT_API conekit_status conekit_solution_scalar_curvature(const conekit_solution* solution,
                                                             conekit_profile which, const char* tau, char* buf,
                                                             size_t capacity);
/* Uniform grid on [-b, b]; each array holds grid_size doubles. */
CONEKIT_API conekit_status conekit_solution_sample(const conekit_solution* solution, conekit_profile which,
                                                   int grid_size, double* tau, double* phi, double* scalar);
/* Log Futaki invariant at an arbitrary β; *vanishes is set from the exact value. */
CONEKIT_API conekit_status conekit_solution_log_futaki(const conekit_solution* solution, const char* beta,
                                                       double* value, int* vanishes);
/* Slope of t against -ln(b - τ) near τ = b for the conical profile. */
CONEKIT_API conekit_status conekit_solution_fit_exponent(const conekit_solution* solution, double cutoff,
                                                         int steps, double* slope, double* relative_error);

/* ---- randomized invariant suite ---- */

CONEKIT_API conekit_status conekit_verify_random(uint64_t seed, int cases, conekit_verify_report** out);
/* Same checks for one problem. */
CONEKIT_API conekit_status conekit_verify_problem(const conekit_problem* problem, conekit_verify_report** out);
CONEKIT_API void conekit_verify_destroy(conekit_verify_report* report);
CONEKIT_API int conekit_verify_passed(const conekit_verify_report* report);
CONEKIT_API int conekit_verify_cases(const conekit_verify_report* report);
CONEKIT_API int conekit_verify_checks(const conekit_verify_report* report);
CONEKIT_API size_t conekit_verify_failure_count(const conekit_verify_report* report);
CONEKIT_API const char* conekit_verify_failure(const conekit_verify_report* report, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* CONEKIT_CONEKIT_H */
