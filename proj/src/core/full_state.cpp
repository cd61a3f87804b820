#include "core/full_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "core/rng.hpp"
#include "core/tolerances.hpp"

namespace sqz {

namespace {

const std::complex<double> kI(0.0, 1.0);

double ln_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void check_cap(int n) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
  if (n > kFullStateQubitCap)
    throw std::invalid_argument("full statevector capped at " +
                                std::to_string(kFullStateQubitCap) + " qubits, got " +
                                std::to_string(n));
}

}  // namespace

FullState uniform_superposition(int n) {
  check_cap(n);
  const std::size_t dim = std::size_t(1) << n;
  FullState state{n, std::vector<std::complex<double>>(dim, 1.0 / std::sqrt(double(dim)))};
  return state;
}

FullState apply_cost_phase_full(const FullState& state, const IsingModel& model, double gamma) {
  validate(state);
  if (model.n != state.n) throw std::invalid_argument("model/state qubit count mismatch");
  FullState out = state;
  for (std::size_t idx = 0; idx < out.amps.size(); ++idx)
    out.amps[idx] *= std::exp(-kI * (gamma * ising_energy(model, idx)));
  return out;
}

FullState apply_mixer_rotation_full(const FullState& state, double beta) {
  validate(state);
  // exp(+i beta X) = [[cos b, i sin b], [i sin b, cos b]] on each qubit
  const std::complex<double> c = std::cos(beta);
  const std::complex<double> s = kI * std::sin(beta);
  FullState out = state;
  for (int q = 0; q < state.n; ++q) {
    const std::size_t bit = std::size_t(1) << q;
    for (std::size_t idx = 0; idx < out.amps.size(); ++idx) {
      if (idx & bit) continue;
      const auto a0 = out.amps[idx];
      const auto a1 = out.amps[idx | bit];
      out.amps[idx] = c * a0 + s * a1;
      out.amps[idx | bit] = s * a0 + c * a1;
    }
  }
  return out;
}

FullState evolve_qaoa_full(const IsingModel& model, const QaoaParams& params) {
  validate(params);
  check_cap(model.n);
  FullState state = uniform_superposition(model.n);
  for (int k = 0; k < params.depth(); ++k) {
    state = apply_cost_phase_full(state, model, params.gammas[k]);
    state = apply_mixer_rotation_full(state, params.betas[k]);
  }
  return state;
}

SymmetricProjection project_symmetric(const FullState& state) {
  validate(state);
  const int n = state.n;
  SymmetricProjection proj;
  proj.components.n = n;
  proj.components.amps.assign(n + 1, 0.0);
  for (std::size_t idx = 0; idx < state.amps.size(); ++idx) {
    const int m = n - std::popcount(idx);  // qubits in |0>
    proj.components.amps[m] += state.amps[idx];
  }
  double captured = 0.0;
  for (int m = 0; m <= n; ++m) {
    proj.components.amps[m] /= std::exp(0.5 * ln_choose(n, m));
    captured += std::norm(proj.components.amps[m]);
  }
  proj.residual = 1.0 - captured;
  return proj;
}

std::vector<std::uint64_t> sample_bitstrings(const FullState& state, long shots,
                                             std::uint64_t seed) {
  validate(state);
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  std::vector<double> cdf(state.amps.size());
  double acc = 0.0;
  for (std::size_t idx = 0; idx < state.amps.size(); ++idx) {
    acc += std::norm(state.amps[idx]);
    cdf[idx] = acc;
  }
  cdf.back() = 1.0;

  CounterRng rng(seed);
  std::vector<std::uint64_t> draws(shots);
  for (long i = 0; i < shots; ++i) {
    const double u = rng.uniform_at(std::uint64_t(i));
    draws[i] = std::uint64_t(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
  }
  return draws;
}

double state_norm(const FullState& state) {
  double total = 0.0;
  for (const auto& a : state.amps) total += std::norm(a);
  return std::sqrt(total);
}

void validate(const FullState& state) {
  check_cap(state.n);
  if (state.amps.size() != (std::size_t(1) << state.n))
    throw std::invalid_argument("amplitude vector must have 2^n entries");
  if (std::abs(state_norm(state) - 1.0) > kTol.norm)
    throw std::invalid_argument("state is not normalized");
}

}  // namespace sqz
