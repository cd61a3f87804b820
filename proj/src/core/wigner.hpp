#pragma once

#include <string>
#include <vector>

#include "core/symmetric_state.hpp"

namespace sqz {

// Spherical Wigner quasi-probability of a spin-l state on a quadrature grid:
// Gauss-Legendre nodes in cos(theta), uniform midpoint nodes in phi. With the
// kernel convention used here the maximally mixed state is uniform and
// (2l+1)/(4pi) * integral of W over the sphere = 1.
struct WignerGrid {
  int n = 0;                         // qubit count, spin l = n/2
  std::vector<double> theta;         // polar nodes, ascending
  std::vector<double> theta_weight;  // Gauss-Legendre weights in cos(theta)
  std::vector<double> phi;           // azimuthal nodes
  std::vector<double> values;        // row-major theta x phi
};

/// Multipole (spherical-harmonic) expansion of |psi><psi| up to rank 2l,
/// evaluated on an n_theta x n_phi grid. Resolution >= 8 per axis.
WignerGrid spin_wigner(const SymmetricState& state, int n_theta, int n_phi);

/// Quadrature value of (2l+1)/(4pi) * integral W dOmega; exactly 1 when the
/// grid resolves rank 2l (n_theta >= l+1 GL nodes, n_phi >= 4l+1).
double wigner_normalization(const WignerGrid& grid);

/// CSV with header theta,phi,value.
std::string wigner_to_csv(const WignerGrid& grid);

}  // namespace sqz
