#pragma once

#include <stdexcept>
#include <vector>

namespace sqz {

// Depth-p variational schedule (gamma_1..gamma_p, beta_1..beta_p).
struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  int depth() const { return int(gammas.size()); }
};

inline void validate(const QaoaParams& params) {
  if (params.gammas.empty()) throw std::invalid_argument("schedule depth must be >= 1");
  if (params.gammas.size() != params.betas.size())
    throw std::invalid_argument("gamma and beta schedules must have equal length");
}

}  // namespace sqz
