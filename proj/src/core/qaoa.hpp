#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/qaoa_params.hpp"
#include "core/symmetric_state.hpp"

namespace sqz {

inline constexpr long kDefaultShots = 32768;  // 2^15

/// |+>^n followed by p repetitions of cost phase then mixer rotation.
SymmetricState trial_state(int n, const QaoaParams& params);

/// <H_C> of the trial state. Exact when shots is absent; otherwise the mean
/// of -m(n-m) over `shots` multinomial draws from p_m (deterministic in
/// seed, draw i depending only on (seed, i)).
double energy_objective(int n, const QaoaParams& params,
                        std::optional<long> shots = std::nullopt, std::uint64_t seed = 0);

// Depth-one energy grid. Points are gamma_i = lo + i (hi - lo)/steps
// (half-open ranges); energies are row-major gamma x beta. Ties in the
// minimum break toward the smallest (gamma, beta) lexicographically.
struct LandscapeResult {
  int n = 0;
  std::vector<double> gammas;
  std::vector<double> betas;
  std::vector<double> energies;
  double min_energy = 0.0;
  double argmin_gamma = 0.0;
  double argmin_beta = 0.0;
  double dicke_overlap = 0.0;  // |<target|psi(argmin)>|^2
};

LandscapeResult landscape_scan(int n, double gamma_lo, double gamma_hi, int gamma_steps,
                               double beta_lo, double beta_hi, int beta_steps);

struct SweepPoint {
  double beta = 0.0;
  double squeezing_db = 0.0;
};

/// Squeezing of (cost phases for every gamma in the schedule) followed by a
/// single mixer rotation beta, tabulated on the inclusive grid
/// beta_j = lo + j (hi - lo)/(steps - 1).
std::vector<SweepPoint> beta_sweep(int n, const std::vector<double>& gammas, double beta_lo,
                                   double beta_hi, int steps);

}  // namespace sqz
