#include "core/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/metrology.hpp"
#include "core/rng.hpp"

namespace sqz {

SymmetricState trial_state(int n, const QaoaParams& params) {
  if (n < 2) throw std::invalid_argument("trial_state: n must be >= 2");
  validate(params);
  SymmetricState state = coherent_plus_state(n);
  for (int k = 0; k < params.depth(); ++k) {
    state = apply_cost_phase(state, params.gammas[k]);
    state = apply_mixer_rotation(state, params.betas[k]);
  }
  return state;
}

double energy_objective(int n, const QaoaParams& params, std::optional<long> shots,
                        std::uint64_t seed) {
  const SymmetricState state = trial_state(n, params);
  if (!shots) return energy_expectation(state);

  if (*shots < 1) throw std::invalid_argument("energy_objective: shots must be >= 1");
  const std::vector<double> pm = pm_distribution(state);
  std::vector<double> cdf(pm.size());
  double acc = 0.0;
  for (std::size_t m = 0; m < pm.size(); ++m) {
    acc += pm[m];
    cdf[m] = acc;
  }
  cdf.back() = 1.0;

  CounterRng rng(seed);
  double total = 0.0;
  for (long i = 0; i < *shots; ++i) {
    const double u = rng.uniform_at(std::uint64_t(i));
    const int m = int(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    total -= double(m) * double(n - m);
  }
  return total / double(*shots);
}

LandscapeResult landscape_scan(int n, double gamma_lo, double gamma_hi, int gamma_steps,
                               double beta_lo, double beta_hi, int beta_steps) {
  if (gamma_steps < 2 || beta_steps < 2)
    throw std::invalid_argument("landscape_scan: resolution must be >= 2 per axis");

  LandscapeResult result;
  result.n = n;
  result.gammas.resize(gamma_steps);
  result.betas.resize(beta_steps);
  for (int i = 0; i < gamma_steps; ++i)
    result.gammas[i] = gamma_lo + (gamma_hi - gamma_lo) * i / gamma_steps;
  for (int j = 0; j < beta_steps; ++j)
    result.betas[j] = beta_lo + (beta_hi - beta_lo) * j / beta_steps;
  result.energies.resize(std::size_t(gamma_steps) * beta_steps);

  double best = std::numeric_limits<double>::infinity();
  int best_i = 0, best_j = 0;
  for (int i = 0; i < gamma_steps; ++i) {
    // one cost phase per gamma row, then mixers per beta
    const SymmetricState after_cost =
        apply_cost_phase(coherent_plus_state(n), result.gammas[i]);
    for (int j = 0; j < beta_steps; ++j) {
      const SymmetricState state = apply_mixer_rotation(after_cost, result.betas[j]);
      const double e = energy_expectation(state);
      result.energies[std::size_t(i) * beta_steps + j] = e;
      if (e < best) {  // strict: earliest (smallest gamma, then beta) wins ties
        best = e;
        best_i = i;
        best_j = j;
      }
    }
  }
  result.min_energy = best;
  result.argmin_gamma = result.gammas[best_i];
  result.argmin_beta = result.betas[best_j];
  const SymmetricState argmin_state = trial_state(
      n, QaoaParams{{result.argmin_gamma}, {result.argmin_beta}});
  result.dicke_overlap = state_overlap(argmin_state, maxcut_target_state(n));
  return result;
}

std::vector<SweepPoint> beta_sweep(int n, const std::vector<double>& gammas, double beta_lo,
                                   double beta_hi, int steps) {
  if (steps < 2) throw std::invalid_argument("beta_sweep: steps must be >= 2");
  if (gammas.empty()) throw std::invalid_argument("beta_sweep: gamma schedule is empty");

  SymmetricState after_cost = coherent_plus_state(n);
  for (double gamma : gammas) after_cost = apply_cost_phase(after_cost, gamma);

  std::vector<SweepPoint> table(steps);
  for (int j = 0; j < steps; ++j) {
    const double beta = beta_lo + (beta_hi - beta_lo) * j / (steps - 1);
    const SymmetricState state = apply_mixer_rotation(after_cost, beta);
    const double var_z = std::max(collective_moments(state).var_z, 0.0);
    table[j] = {beta, squeezing_db(var_z, n)};
  }
  return table;
}

}  // namespace sqz
