#include "core/spsa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/qaoa.hpp"
#include "core/rng.hpp"

namespace sqz {

namespace {

constexpr double kTargetFirstStep = 0.1;  // rad per parameter
constexpr double kTwoPi = 6.283185307179586476925;
constexpr double kPi = 3.141592653589793238463;

}  // namespace

void validate(const SpsaConfig& config) {
  if (config.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (config.calibration_iterations < 1 ||
      config.calibration_iterations >= config.max_iterations)
    throw std::invalid_argument("calibration_iterations must be in [1, max_iterations)");
  if (config.shots && *config.shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (config.initial_perturbation <= 0.0)
    throw std::invalid_argument("initial_perturbation must be positive");
}

QaoaParams OptimizationTrace::best_qaoa_params() const {
  if (depth <= 0 || best_params.size() != std::size_t(2 * depth))
    throw std::logic_error("trace does not hold a QAOA parameter layout");
  QaoaParams params;
  params.gammas.assign(best_params.begin(), best_params.begin() + depth);
  params.betas.assign(best_params.begin() + depth, best_params.end());
  return params;
}

OptimizationTrace spsa_minimize_function(
    const std::function<double(const std::vector<double>&, long eval_index)>& objective,
    const std::vector<double>& initial, const SpsaConfig& config) {
  validate(config);
  if (initial.empty()) throw std::invalid_argument("empty parameter vector");

  const std::size_t dim = initial.size();
  CounterRng perturb(config.seed, /*stream=*/1);

  OptimizationTrace trace;
  trace.iterate_params.reserve(config.max_iterations);
  trace.iterate_values.reserve(config.max_iterations);
  trace.best_value = std::numeric_limits<double>::infinity();

  auto evaluate = [&](const std::vector<double>& params) {
    const double value = objective(params, trace.evaluation_count);
    ++trace.evaluation_count;
    trace.evaluation_values.push_back(value);
    if (value < trace.best_value) {
      trace.best_value = value;
      trace.best_params = params;
    }
    return value;
  };

  std::vector<double> theta = initial;
  const double c0 = config.initial_perturbation;
  const double big_a = 0.1 * config.max_iterations;

  // Calibration: average |f(theta+c0 d) - f(theta-c0 d)| / (2 c0) over
  // Rademacher directions d, then choose a so the first update moves each
  // parameter by kTargetFirstStep.
  double gradient_scale = 0.0;
  for (int probe = 0; probe < config.calibration_iterations; ++probe) {
    std::vector<double> plus = theta, minus = theta;
    for (std::size_t i = 0; i < dim; ++i) {
      const double d = perturb.next_rademacher();
      plus[i] += c0 * d;
      minus[i] -= c0 * d;
    }
    gradient_scale += std::abs(evaluate(plus) - evaluate(minus)) / (2.0 * c0);
  }
  gradient_scale /= config.calibration_iterations;
  trace.step_scale = gradient_scale > 1e-30
                         ? kTargetFirstStep * std::pow(big_a + 1.0, config.gain_a_exponent) /
                               gradient_scale
                         : kTargetFirstStep;

  for (int k = 0; k < config.max_iterations; ++k) {
    const double ak = trace.step_scale / std::pow(k + 1.0 + big_a, config.gain_a_exponent);
    const double ck = c0 / std::pow(k + 1.0, config.gain_c_exponent);
    std::vector<double> direction(dim);
    std::vector<double> plus = theta, minus = theta;
    for (std::size_t i = 0; i < dim; ++i) {
      direction[i] = perturb.next_rademacher();
      plus[i] += ck * direction[i];
      minus[i] -= ck * direction[i];
    }
    const double estimate = (evaluate(plus) - evaluate(minus)) / (2.0 * ck);
    for (std::size_t i = 0; i < dim; ++i) theta[i] -= ak * estimate / direction[i];
    trace.iterate_values.push_back(evaluate(theta));
    trace.iterate_params.push_back(theta);
  }
  return trace;
}

OptimizationTrace spsa_minimize(int n, int p, const SpsaConfig& config,
                                const QaoaParams& initial) {
  validate(initial);
  if (initial.depth() != p) throw std::invalid_argument("initial schedule depth mismatch");

  std::vector<double> flat(initial.gammas);
  flat.insert(flat.end(), initial.betas.begin(), initial.betas.end());

  auto objective = [n, p, &config](const std::vector<double>& params, long eval_index) {
    QaoaParams q;
    q.gammas.assign(params.begin(), params.begin() + p);
    q.betas.assign(params.begin() + p, params.end());
    // shot mode draws a fresh deterministic stream per evaluation
    return energy_objective(n, q, config.shots,
                            CounterRng(config.seed, /*stream=*/2).at(std::uint64_t(eval_index)));
  };
  OptimizationTrace trace = spsa_minimize_function(objective, flat, config);
  trace.depth = p;
  return trace;
}

OptimizationTrace multistart_optimize(int n, int p, int restarts, const SpsaConfig& config) {
  validate(config);
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");

  OptimizationTrace best;
  best.best_value = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    CounterRng init(config.seed, /*stream=*/100 + std::uint64_t(r));
    QaoaParams start;
    for (int k = 0; k < p; ++k) start.gammas.push_back(init.next_uniform(0.0, kTwoPi));
    for (int k = 0; k < p; ++k) start.betas.push_back(init.next_uniform(0.0, kPi));
    SpsaConfig run_config = config;
    run_config.seed = CounterRng(config.seed, /*stream=*/200).at(std::uint64_t(r));
    OptimizationTrace trace = spsa_minimize(n, p, run_config, start);
    if (trace.best_value < best.best_value) best = std::move(trace);
  }
  return best;
}

}  // namespace sqz
