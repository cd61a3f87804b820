#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "core/qaoa_params.hpp"

namespace sqz {

// Self-calibrating SPSA: the first calibration_iterations +/- probes set the
// step-size scale so that the first accepted step moves each parameter by
// about 0.1 rad.
struct SpsaConfig {
  int max_iterations = 500;
  int calibration_iterations = 25;
  std::optional<long> shots;  // objective is exact when absent
  std::uint64_t seed = 0;
  double gain_a_exponent = 0.602;
  double gain_c_exponent = 0.101;
  double initial_perturbation = 0.1;
};

void validate(const SpsaConfig& config);

struct OptimizationTrace {
  // theta_k trajectory with its objective value, one entry per iteration
  std::vector<std::vector<double>> iterate_params;
  std::vector<double> iterate_values;
  // every objective evaluation in call order (calibration, +/- probes,
  // iterates); best_value is the minimum of this log
  std::vector<double> evaluation_values;
  std::vector<double> best_params;
  double best_value = 0.0;
  long evaluation_count = 0;
  double step_scale = 0.0;  // calibrated a
  int depth = 0;            // QAOA layout: (gammas..., betas...) when depth > 0

  QaoaParams best_qaoa_params() const;
};

/// SPSA over an arbitrary objective; used directly by the sanity oracles.
OptimizationTrace spsa_minimize_function(
    const std::function<double(const std::vector<double>&, long eval_index)>& objective,
    const std::vector<double>& initial, const SpsaConfig& config);

/// SPSA over the QAOA energy objective at depth p.
OptimizationTrace spsa_minimize(int n, int p, const SpsaConfig& config,
                                const QaoaParams& initial);

/// Best trace over seeded random restarts, gamma in [0, 2pi), beta in
/// [0, pi). Deterministic given config.seed; earlier restart wins ties.
OptimizationTrace multistart_optimize(int n, int p, int restarts, const SpsaConfig& config);

}  // namespace sqz
