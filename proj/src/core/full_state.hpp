#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "core/graph.hpp"
#include "core/qaoa_params.hpp"
#include "core/symmetric_state.hpp"

namespace sqz {

// Brute-force 2^n statevector. Bit b of the amplitude index is qubit b.
// Oracle role only; capped so runs stay sub-second.
struct FullState {
  int n = 0;
  std::vector<std::complex<double>> amps;  // length 2^n
};

inline constexpr int kFullStateQubitCap = 16;

struct SymmetricProjection {
  // components[m] = <D^n_m|psi> where D^n_m has m qubits in |0>. Norm of the
  // component vector is 1 - residual, so it is a valid SymmetricState only
  // when the residual vanishes.
  SymmetricState components;
  double residual = 0.0;
};

/// Uniform superposition (the Hadamard layer on |0...0>), built analytically.
FullState uniform_superposition(int n);

FullState apply_cost_phase_full(const FullState& state, const IsingModel& model, double gamma);

/// Product of single-qubit exp(+i beta X) rotations, i.e. exp(-i beta H_M)
/// with H_M = -sum_i X_i = -2 Lx.
FullState apply_mixer_rotation_full(const FullState& state, double beta);

/// p layers of exp(-i beta_k H_M) exp(-i gamma_k H_C) on the uniform
/// superposition.
FullState evolve_qaoa_full(const IsingModel& model, const QaoaParams& params);

/// Hamming-weight grouping with 1/sqrt(C(n,m)) normalization.
SymmetricProjection project_symmetric(const FullState& state);

/// shots i.i.d. draws from |amps|^2 via inverse CDF; deterministic given the
/// seed, and draw i depends only on (seed, i).
std::vector<std::uint64_t> sample_bitstrings(const FullState& state, long shots,
                                             std::uint64_t seed);

double state_norm(const FullState& state);
void validate(const FullState& state);

}  // namespace sqz
