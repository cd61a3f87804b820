#include "squeezeqaoa.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "core/benchmark.hpp"
#include "core/metrology.hpp"
#include "core/qaoa.hpp"
#include "core/spsa.hpp"
#include "core/symmetric_state.hpp"
#include "core/wigner.hpp"

struct sqz_state {
  sqz::SymmetricState impl;
};

struct sqz_trace {
  sqz::OptimizationTrace impl;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* message) {
  g_last_error = message;
  return code;
}

// Runs the body, translating exceptions into error codes.
template <typename Fn>
int guarded(Fn&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return fail(SQZ_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SQZ_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SQZ_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(SQZ_ERROR_INTERNAL, "unknown error");
  }
}

int require(const void* pointer, const char* name) {
  if (pointer != nullptr) return SQZ_OK;
  return fail(SQZ_ERROR_NULL_POINTER, (std::string(name) + " must not be NULL").c_str());
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* sqz_version(void) { return "1.0.0"; }

const char* sqz_last_error_message(void) { return g_last_error.c_str(); }

void sqz_string_free(char* text) { std::free(text); }

int sqz_state_coherent(int n, sqz_state** out) {
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = new sqz_state{sqz::coherent_plus_state(n)};
    return SQZ_OK;
  });
}

int sqz_state_dicke(int n, int k, sqz_state** out) {
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = new sqz_state{sqz::dicke_state(n, k)};
    return SQZ_OK;
  });
}

int sqz_state_maxcut_target(int n, sqz_state** out) {
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = new sqz_state{sqz::maxcut_target_state(n)};
    return SQZ_OK;
  });
}

int sqz_state_clone(const sqz_state* state, sqz_state** out) {
  if (int rc = require(state, "state")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = new sqz_state{state->impl};
    return SQZ_OK;
  });
}

void sqz_state_free(sqz_state* state) { delete state; }

int sqz_state_qubits(const sqz_state* state, int* n) {
  if (int rc = require(state, "state")) return rc;
  if (int rc = require(n, "n")) return rc;
  *n = state->impl.n;
  return SQZ_OK;
}

int sqz_state_amplitudes(const sqz_state* state, double* re, double* im, int capacity) {
  if (int rc = require(state, "state")) return rc;
  if (int rc = require(re, "re")) return rc;
  if (int rc = require(im, "im")) return rc;
  if (capacity < state->impl.n + 1)
    return fail(SQZ_ERROR_SIZE_MISMATCH, "amplitude buffer needs n+1 entries");
  for (int m = 0; m <= state->impl.n; ++m) {
    re[m] = state->impl.amps[m].real();
    im[m] = state->impl.amps[m].imag();
  }
  return SQZ_OK;
}

int sqz_state_pm_distribution(const sqz_state* state, double* out, int capacity) {
  if (int rc = require(state, "state")) return rc;
  if (int rc = require(out, "out")) return rc;
  if (capacity < state->impl.n + 1)
    return fail(SQZ_ERROR_SIZE_MISMATCH, "distribution buffer needs n+1 entries");
  return guarded([&] {
    const auto pm = sqz::pm_distribution(state->impl);
    for (std::size_t m = 0; m < pm.size(); ++m) out[m] = pm[m];
    return SQZ_OK;
  });
}

int sqz_state_energy(const sqz_state* state, double* out) {
  if (int rc = require(state, "state")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = sqz::energy_expectation(state->impl);
    return SQZ_OK;
  });
}

int sqz_state_moments(const sqz_state* state, double out[9]) {
  if (int rc = require(state, "state")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    const auto mo = sqz::collective_moments(state->impl);
    out[0] = mo.mean_x;
    out[1] = mo.mean_y;
    out[2] = mo.mean_z;
    out[3] = mo.second_x;
    out[4] = mo.second_y;
    out[5] = mo.second_z;
    out[6] = mo.var_x;
    out[7] = mo.var_y;
    out[8] = mo.var_z;
    return SQZ_OK;
  });
}

int sqz_state_overlap(const sqz_state* a, const sqz_state* b, double* out) {
  if (int rc = require(a, "a")) return rc;
  if (int rc = require(b, "b")) return rc;
  if (int rc = require(out, "out")) return rc;
  if (a->impl.n != b->impl.n)
    return fail(SQZ_ERROR_SIZE_MISMATCH, "states act on different qubit counts");
  return guarded([&] {
    *out = sqz::state_overlap(a->impl, b->impl);
    return SQZ_OK;
  });
}

int sqz_state_apply_cost_phase(sqz_state* state, double gamma) {
  if (int rc = require(state, "state")) return rc;
  return guarded([&] {
    state->impl = sqz::apply_cost_phase(state->impl, gamma);
    return SQZ_OK;
  });
}

int sqz_state_apply_mixer(sqz_state* state, double beta) {
  if (int rc = require(state, "state")) return rc;
  return guarded([&] {
    state->impl = sqz::apply_mixer_rotation(state->impl, beta);
    return SQZ_OK;
  });
}

int sqz_state_qaoa_trial(int n, const double* gammas, const double* betas, int depth,
                         sqz_state** out) {
  if (int rc = require(out, "out")) return rc;
  if (depth < 0) return fail(SQZ_ERROR_INVALID_ARGUMENT, "depth must be >= 0");
  if (depth > 0) {
    if (int rc = require(gammas, "gammas")) return rc;
    if (int rc = require(betas, "betas")) return rc;
  }
  return guarded([&] {
    sqz::QaoaParams params;
    params.gammas.assign(gammas, gammas + depth);
    params.betas.assign(betas, betas + depth);
    *out = new sqz_state{depth == 0 ? sqz::coherent_plus_state(n)
                                    : sqz::trial_state(n, params)};
    return SQZ_OK;
  });
}

int sqz_squeezing_db(double var_z, int n, double* out) {
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    const double value = sqz::squeezing_db(var_z, n);
    *out = std::isinf(value) ? -HUGE_VAL : value;
    return SQZ_OK;
  });
}

int sqz_state_qfi(const sqz_state* state, char axis, double* out) {
  if (int rc = require(state, "state")) return rc;
  if (int rc = require(out, "out")) return rc;
  sqz::Axis a;
  switch (axis) {
    case 'x': a = sqz::Axis::x; break;
    case 'y': a = sqz::Axis::y; break;
    case 'z': a = sqz::Axis::z; break;
    default: return fail(SQZ_ERROR_INVALID_ARGUMENT, "axis must be 'x', 'y' or 'z'");
  }
  return guarded([&] {
    *out = sqz::qfi_pure(state->impl, a);
    return SQZ_OK;
  });
}

int sqz_state_witness_e1(const sqz_state* state, int* entangled, double* margin) {
  if (int rc = require(state, "state")) return rc;
  if (int rc = require(entangled, "entangled")) return rc;
  if (int rc = require(margin, "margin")) return rc;
  return guarded([&] {
    const auto e1 = sqz::witness_e1(state->impl);
    *entangled = e1.entangled ? 1 : 0;
    *margin = e1.margin;
    return SQZ_OK;
  });
}

int sqz_qfi_entanglement_depth(double fq, int n, int* depth) {
  if (int rc = require(depth, "depth")) return rc;
  return guarded([&] {
    *depth = sqz::qfi_entanglement_depth(fq, n);
    return SQZ_OK;
  });
}

int sqz_gaussian_depth_estimate(double squeezing_db, int n, int* depth) {
  if (int rc = require(depth, "depth")) return rc;
  return guarded([&] {
    *depth = sqz::gaussian_depth_estimate(squeezing_db, n);
    return SQZ_OK;
  });
}

int sqz_state_report_json(const sqz_state* state, char** json) {
  if (int rc = require(state, "state")) return rc;
  if (int rc = require(json, "json")) return rc;
  return guarded([&]() -> int {
    const std::string text = sqz::report_to_json(sqz::metrology_report(state->impl));
    *json = copy_string(text);
    if (*json == nullptr) return fail(SQZ_ERROR_INTERNAL, "out of memory");
    return SQZ_OK;
  });
}

int sqz_state_wigner(const sqz_state* state, int n_theta, int n_phi, double* theta,
                     double* theta_weight, double* phi, double* values) {
  if (int rc = require(state, "state")) return rc;
  if (int rc = require(theta, "theta")) return rc;
  if (int rc = require(theta_weight, "theta_weight")) return rc;
  if (int rc = require(phi, "phi")) return rc;
  if (int rc = require(values, "values")) return rc;
  return guarded([&] {
    const auto grid = sqz::spin_wigner(state->impl, n_theta, n_phi);
    for (int i = 0; i < n_theta; ++i) {
      theta[i] = grid.theta[i];
      theta_weight[i] = grid.theta_weight[i];
    }
    for (int j = 0; j < n_phi; ++j) phi[j] = grid.phi[j];
    for (std::size_t k = 0; k < grid.values.size(); ++k) values[k] = grid.values[k];
    return SQZ_OK;
  });
}

int sqz_energy_objective(int n, const double* gammas, const double* betas, int depth, long shots,
                         uint64_t seed, double* out) {
  if (int rc = require(gammas, "gammas")) return rc;
  if (int rc = require(betas, "betas")) return rc;
  if (int rc = require(out, "out")) return rc;
  if (depth < 1) return fail(SQZ_ERROR_INVALID_ARGUMENT, "depth must be >= 1");
  return guarded([&] {
    sqz::QaoaParams params;
    params.gammas.assign(gammas, gammas + depth);
    params.betas.assign(betas, betas + depth);
    *out = sqz::energy_objective(n, params,
                                 shots > 0 ? std::optional<long>(shots) : std::nullopt, seed);
    return SQZ_OK;
  });
}

void sqz_spsa_options_init(sqz_spsa_options* options) {
  if (options == nullptr) return;
  options->max_iterations = 500;
  options->calibration_iterations = 25;
  options->shots = 0;
  options->seed = 0;
  options->gain_a_exponent = 0.602;
  options->gain_c_exponent = 0.101;
  options->initial_perturbation = 0.1;
}

int sqz_optimize(int n, int depth, int restarts, const sqz_spsa_options* options,
                 sqz_trace** out) {
  if (int rc = require(options, "options")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    sqz::SpsaConfig config;
    config.max_iterations = options->max_iterations;
    config.calibration_iterations = options->calibration_iterations;
    if (options->shots > 0) config.shots = options->shots;
    config.seed = options->seed;
    config.gain_a_exponent = options->gain_a_exponent;
    config.gain_c_exponent = options->gain_c_exponent;
    config.initial_perturbation = options->initial_perturbation;
    *out = new sqz_trace{sqz::multistart_optimize(n, depth, restarts, config)};
    return SQZ_OK;
  });
}

void sqz_trace_free(sqz_trace* trace) { delete trace; }

int sqz_trace_best_energy(const sqz_trace* trace, double* out) {
  if (int rc = require(trace, "trace")) return rc;
  if (int rc = require(out, "out")) return rc;
  *out = trace->impl.best_value;
  return SQZ_OK;
}

int sqz_trace_best_params(const sqz_trace* trace, double* gammas, double* betas, int depth) {
  if (int rc = require(trace, "trace")) return rc;
  if (int rc = require(gammas, "gammas")) return rc;
  if (int rc = require(betas, "betas")) return rc;
  if (depth != trace->impl.depth)
    return fail(SQZ_ERROR_SIZE_MISMATCH, "depth does not match the trace");
  return guarded([&] {
    const auto params = trace->impl.best_qaoa_params();
    for (int k = 0; k < depth; ++k) {
      gammas[k] = params.gammas[k];
      betas[k] = params.betas[k];
    }
    return SQZ_OK;
  });
}

int sqz_trace_evaluations(const sqz_trace* trace, long* out) {
  if (int rc = require(trace, "trace")) return rc;
  if (int rc = require(out, "out")) return rc;
  *out = trace->impl.evaluation_count;
  return SQZ_OK;
}

int sqz_trace_iterations(const sqz_trace* trace, int* out) {
  if (int rc = require(trace, "trace")) return rc;
  if (int rc = require(out, "out")) return rc;
  *out = int(trace->impl.iterate_values.size());
  return SQZ_OK;
}

int sqz_trace_iterate_value(const sqz_trace* trace, int iteration, double* out) {
  if (int rc = require(trace, "trace")) return rc;
  if (int rc = require(out, "out")) return rc;
  if (iteration < 0 || std::size_t(iteration) >= trace->impl.iterate_values.size())
    return fail(SQZ_ERROR_INVALID_ARGUMENT, "iteration out of range");
  *out = trace->impl.iterate_values[iteration];
  return SQZ_OK;
}

int sqz_landscape(int n, double gamma_lo, double gamma_hi, int gamma_steps, double beta_lo,
                  double beta_hi, int beta_steps, double* energies, double* min_energy,
                  double* argmin_gamma, double* argmin_beta, double* dicke_overlap) {
  if (int rc = require(energies, "energies")) return rc;
  return guarded([&] {
    const auto result =
        sqz::landscape_scan(n, gamma_lo, gamma_hi, gamma_steps, beta_lo, beta_hi, beta_steps);
    for (std::size_t k = 0; k < result.energies.size(); ++k) energies[k] = result.energies[k];
    if (min_energy != nullptr) *min_energy = result.min_energy;
    if (argmin_gamma != nullptr) *argmin_gamma = result.argmin_gamma;
    if (argmin_beta != nullptr) *argmin_beta = result.argmin_beta;
    if (dicke_overlap != nullptr) *dicke_overlap = result.dicke_overlap;
    return SQZ_OK;
  });
}

int sqz_beta_sweep(int n, const double* gammas, int n_gammas, double beta_lo, double beta_hi,
                   int steps, double* betas_out, double* squeezing_out) {
  if (int rc = require(gammas, "gammas")) return rc;
  if (int rc = require(betas_out, "betas_out")) return rc;
  if (int rc = require(squeezing_out, "squeezing_out")) return rc;
  return guarded([&] {
    const auto table =
        sqz::beta_sweep(n, std::vector<double>(gammas, gammas + n_gammas), beta_lo, beta_hi,
                        steps);
    for (std::size_t j = 0; j < table.size(); ++j) {
      betas_out[j] = table[j].beta;
      squeezing_out[j] = std::isinf(table[j].squeezing_db) ? -HUGE_VAL : table[j].squeezing_db;
    }
    return SQZ_OK;
  });
}

int sqz_cut_size(int m, int n, long long* out) {
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = sqz::cut_size(m, n);
    return SQZ_OK;
  });
}

int sqz_m_bounds(int n, double alpha, double* m_minus, double* m_plus) {
  if (int rc = require(m_minus, "m_minus")) return rc;
  if (int rc = require(m_plus, "m_plus")) return rc;
  return guarded([&] {
    const auto window = sqz::m_bounds(n, alpha);
    *m_minus = window.m_minus;
    *m_plus = window.m_plus;
    return SQZ_OK;
  });
}

int sqz_p_alpha_empirical(const double* pm, int n, double alpha, double* out) {
  if (int rc = require(pm, "pm")) return rc;
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = sqz::p_alpha_empirical(std::vector<double>(pm, pm + n + 1), n, alpha);
    return SQZ_OK;
  });
}

int sqz_p_alpha_gaussian(int n, double squeezing_db, double alpha, double* out) {
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = sqz::p_alpha_gaussian(n, squeezing_db, alpha);
    return SQZ_OK;
  });
}

int sqz_benchmark_grid(const int* n_values, int n_count, const double* squeezing_values,
                       int s_count, double alpha, double* p_alpha, int* disc_flags) {
  if (int rc = require(n_values, "n_values")) return rc;
  if (int rc = require(squeezing_values, "squeezing_values")) return rc;
  if (int rc = require(p_alpha, "p_alpha")) return rc;
  if (n_count < 1 || s_count < 1) return fail(SQZ_ERROR_INVALID_ARGUMENT, "empty grid ranges");
  return guarded([&] {
    const auto grid = sqz::benchmark_grid(std::vector<int>(n_values, n_values + n_count),
                                          std::vector<double>(squeezing_values,
                                                              squeezing_values + s_count),
                                          alpha);
    for (int i = 0; i < n_count; ++i) {
      if (disc_flags != nullptr)
        disc_flags[i] = grid[std::size_t(i) * s_count].is_discontinuity ? 1 : 0;
      for (int j = 0; j < s_count; ++j)
        p_alpha[std::size_t(i) * s_count + j] = grid[std::size_t(i) * s_count + j].p_alpha;
    }
    return SQZ_OK;
  });
}

int sqz_discontinuities(double alpha, int n_max, int* out, int capacity, int* count) {
  if (int rc = require(out, "out")) return rc;
  if (int rc = require(count, "count")) return rc;
  return guarded([&] {
    const auto record = sqz::discontinuities(alpha, n_max);
    *count = int(record.n_values.size());
    for (int i = 0; i < *count && i < capacity; ++i) out[i] = record.n_values[i];
    return SQZ_OK;
  });
}

int sqz_qaoa_line_cnot(int n, long long* out) {
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = sqz::qaoa_line_cnot(n);
    return SQZ_OK;
  });
}

int sqz_qv_cnot_bound(int n, long long* out) {
  if (int rc = require(out, "out")) return rc;
  return guarded([&] {
    *out = sqz::qv_cnot_bound(n);
    return SQZ_OK;
  });
}

int sqz_improvement_delta(double e_initial, double e_achieved, double e_target, double* value,
                          int* out_of_range) {
  if (int rc = require(value, "value")) return rc;
  return guarded([&] {
    const auto delta = sqz::improvement_delta(e_initial, e_achieved, e_target);
    *value = delta.value;
    if (out_of_range != nullptr) *out_of_range = delta.in_range ? 0 : 1;
    return SQZ_OK;
  });
}

}  // extern "C"
