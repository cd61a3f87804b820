/* squeezeqaoa: collective-spin QAOA simulator, squeezing metrology, and the
 * squeezing-based hardware benchmark, behind a plain C interface.
 *
 * Conventions:
 *   - States live in the permutation-symmetric subspace of n qubits (spin
 *     l = n/2) with n+1 complex amplitudes indexed by m = <Lz> + n/2.
 *   - Cost Hamiltonian H_C = Lz^2 - (n^2/4) I; mixer H_M = -2 Lx. One QAOA
 *     layer is exp(-i beta H_M) exp(-i gamma H_C).
 *   - All functions returning int yield SQZ_OK (0) on success or an error
 *     code; sqz_last_error_message() describes the most recent failure in
 *     the calling thread.
 *   - Handles are created by sqz_* constructors and released with the
 *     matching *_free; strings returned through char** are released with
 *     sqz_string_free.
 */
#ifndef SQUEEZEQAOA_H
#define SQUEEZEQAOA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SQZ_API __declspec(dllexport)
#else
#define SQZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum sqz_status {
  SQZ_OK = 0,
  SQZ_ERROR_INVALID_ARGUMENT = 1,
  SQZ_ERROR_NULL_POINTER = 2,
  SQZ_ERROR_SIZE_MISMATCH = 3,
  SQZ_ERROR_INTERNAL = 4
};

typedef struct sqz_state sqz_state;
typedef struct sqz_trace sqz_trace;

SQZ_API const char* sqz_version(void);
SQZ_API const char* sqz_last_error_message(void);
SQZ_API void sqz_string_free(char* text);

/* ---- states ---- */

SQZ_API int sqz_state_coherent(int n, sqz_state** out);
SQZ_API int sqz_state_dicke(int n, int k, sqz_state** out);
SQZ_API int sqz_state_maxcut_target(int n, sqz_state** out);
SQZ_API int sqz_state_clone(const sqz_state* state, sqz_state** out);
SQZ_API void sqz_state_free(sqz_state* state);

SQZ_API int sqz_state_qubits(const sqz_state* state, int* n);
/* re/im must hold n+1 doubles each. */
SQZ_API int sqz_state_amplitudes(const sqz_state* state, double* re, double* im, int capacity);
/* out must hold n+1 doubles. */
SQZ_API int sqz_state_pm_distribution(const sqz_state* state, double* out, int capacity);
SQZ_API int sqz_state_energy(const sqz_state* state, double* out);
/* out[9]: mean x,y,z; second moments x,y,z; variances x,y,z. */
SQZ_API int sqz_state_moments(const sqz_state* state, double out[9]);
SQZ_API int sqz_state_overlap(const sqz_state* a, const sqz_state* b, double* out);

/* in-place evolution */
SQZ_API int sqz_state_apply_cost_phase(sqz_state* state, double gamma);
SQZ_API int sqz_state_apply_mixer(sqz_state* state, double beta);

/* |+>^n followed by depth layers of (cost gamma_k, mixer beta_k). */
SQZ_API int sqz_state_qaoa_trial(int n, const double* gammas, const double* betas, int depth,
                                 sqz_state** out);

/* ---- metrology ---- */

/* 10 log10(var_z / (n/4)); var_z = 0 gives -HUGE_VAL. */
SQZ_API int sqz_squeezing_db(double var_z, int n, double* out);
/* axis is 'x', 'y' or 'z'. */
SQZ_API int sqz_state_qfi(const sqz_state* state, char axis, double* out);
SQZ_API int sqz_state_witness_e1(const sqz_state* state, int* entangled, double* margin);
SQZ_API int sqz_qfi_entanglement_depth(double fq, int n, int* depth);
SQZ_API int sqz_gaussian_depth_estimate(double squeezing_db, int n, int* depth);
/* Flat JSON object (snake_case keys) with every metrology quantity. */
SQZ_API int sqz_state_report_json(const sqz_state* state, char** json);

/* ---- Wigner quasi-probability ---- */

/* theta/theta_weight hold n_theta doubles, phi holds n_phi, values holds
 * n_theta*n_phi (row-major theta x phi). Resolution >= 8 per axis. */
SQZ_API int sqz_state_wigner(const sqz_state* state, int n_theta, int n_phi, double* theta,
                             double* theta_weight, double* phi, double* values);

/* ---- variational engine ---- */

/* Exact <H_C> of the trial state when shots <= 0, otherwise the mean over
 * `shots` seeded multinomial draws. */
SQZ_API int sqz_energy_objective(int n, const double* gammas, const double* betas, int depth,
                                 long shots, uint64_t seed, double* out);

typedef struct sqz_spsa_options {
  int max_iterations;        /* default 500 */
  int calibration_iterations; /* default 25 */
  long shots;                /* <= 0: exact objective */
  uint64_t seed;
  double gain_a_exponent;    /* default 0.602 */
  double gain_c_exponent;    /* default 0.101 */
  double initial_perturbation; /* default 0.1 */
} sqz_spsa_options;

SQZ_API void sqz_spsa_options_init(sqz_spsa_options* options);

/* Multistart SPSA over the energy objective; restarts >= 1. */
SQZ_API int sqz_optimize(int n, int depth, int restarts, const sqz_spsa_options* options,
                         sqz_trace** out);
SQZ_API void sqz_trace_free(sqz_trace* trace);

SQZ_API int sqz_trace_best_energy(const sqz_trace* trace, double* out);
/* gammas/betas must hold depth doubles each. */
SQZ_API int sqz_trace_best_params(const sqz_trace* trace, double* gammas, double* betas,
                                  int depth);
/* Objective evaluations recorded in the winning restart's trace. */
SQZ_API int sqz_trace_evaluations(const sqz_trace* trace, long* out);
SQZ_API int sqz_trace_iterations(const sqz_trace* trace, int* out);
SQZ_API int sqz_trace_iterate_value(const sqz_trace* trace, int iteration, double* out);

/* Depth-one energy grid over half-open ranges; energies holds
 * gamma_steps*beta_steps doubles (row-major gamma x beta). Any output
 * pointer other than energies may be NULL to skip it. */
SQZ_API int sqz_landscape(int n, double gamma_lo, double gamma_hi, int gamma_steps,
                          double beta_lo, double beta_hi, int beta_steps, double* energies,
                          double* min_energy, double* argmin_gamma, double* argmin_beta,
                          double* dicke_overlap);

/* Squeezing after the gamma schedule plus one mixer beta, on the inclusive
 * grid of `steps` points; betas_out/squeezing_out hold steps doubles. */
SQZ_API int sqz_beta_sweep(int n, const double* gammas, int n_gammas, double beta_lo,
                           double beta_hi, int steps, double* betas_out, double* squeezing_out);

/* ---- benchmark ---- */

SQZ_API int sqz_cut_size(int m, int n, long long* out);
SQZ_API int sqz_m_bounds(int n, double alpha, double* m_minus, double* m_plus);
SQZ_API int sqz_p_alpha_empirical(const double* pm, int n, double alpha, double* out);
SQZ_API int sqz_p_alpha_gaussian(int n, double squeezing_db, double alpha, double* out);
/* Gaussian-model P_alpha on an n x squeezing grid: p_alpha holds
 * n_count*s_count doubles (row-major n x squeezing); disc_flags (n_count
 * ints, may be NULL) marks n values where the window jumps. */
SQZ_API int sqz_benchmark_grid(const int* n_values, int n_count, const double* squeezing_values,
                               int s_count, double alpha, double* p_alpha, int* disc_flags);
/* out holds up to capacity ints; count reports how many exist. */
SQZ_API int sqz_discontinuities(double alpha, int n_max, int* out, int capacity, int* count);
SQZ_API int sqz_qaoa_line_cnot(int n, long long* out);
SQZ_API int sqz_qv_cnot_bound(int n, long long* out);
/* out_of_range (may be NULL) is set to 1 when the value falls outside [0,1]. */
SQZ_API int sqz_improvement_delta(double e_initial, double e_achieved, double e_target,
                                  double* value, int* out_of_range);

#ifdef __cplusplus
}
#endif

#endif /* SQUEEZEQAOA_H */
