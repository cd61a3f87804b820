#pragma once

#include <complex>
#include <vector>

namespace sqz {

// Pure state of n qubits restricted to the permutation-symmetric subspace,
// i.e. a single spin of length l = n/2. Index m in {0..n} labels the Lz
// eigenvalue through m = <Lz> + n/2 and counts the qubits in |0>.
struct SymmetricState {
  int n = 0;
  std::vector<std::complex<double>> amps;  // length n + 1
};

struct CollectiveMoments {
  double mean_x = 0, mean_y = 0, mean_z = 0;
  double second_x = 0, second_y = 0, second_z = 0;  // <La^2>
  double var_x = 0, var_y = 0, var_z = 0;
};

// Exact symmetric ops use dense (n+1)-dimensional linear algebra; practical
// soft cap around n = 4096.

/// |+>^n, the coherent spin state along +x: amps[m] = sqrt(C(n,m)/2^n).
SymmetricState coherent_plus_state(int n);

/// Dicke state with k qubits in |0>: unit amplitude at m = k.
SymmetricState dicke_state(int n, int k);

/// Maximum-cut manifold of the complete unweighted graph: D^n_{n/2} for even
/// n, (D^n_{floor(n/2)} + D^n_{ceil(n/2)})/sqrt(2) for odd n. Requires n >= 2.
SymmetricState maxcut_target_state(int n);

/// exp(-i gamma H_C) with H_C = Lz^2 - (n^2/4) I. Diagonal in m, so every
/// |amps[m]| is unchanged.
SymmetricState apply_cost_phase(const SymmetricState& state, double gamma);

/// exp(-i beta H_M) with H_M = -2 Lx, i.e. the rotation exp(+2i beta Lx),
/// applied through a cached eigendecomposition of the tridiagonal Lx matrix.
SymmetricState apply_mixer_rotation(const SymmetricState& state, double beta);

/// p_m = |amps[m]|^2.
std::vector<double> pm_distribution(const SymmetricState& state);

/// First and second moments of Lx, Ly, Lz from the ladder-operator matrix
/// elements.
CollectiveMoments collective_moments(const SymmetricState& state);

/// <H_C> = <Lz^2> - n^2/4 = -sum_m p_m m(n-m); always in [-floor(n^2/4), 0].
double energy_expectation(const SymmetricState& state);

/// |<a|b>|^2.
double state_overlap(const SymmetricState& a, const SymmetricState& b);

double state_norm(const SymmetricState& state);

/// Throws std::invalid_argument unless the state has n >= 1, n+1 amplitudes
/// and unit norm within kTol.norm.
void validate(const SymmetricState& state);

/// Returns `state` multiplied by the global phase that makes it agree with
/// `reference` at reference's largest-magnitude amplitude. Physical
/// observables are phase-free; equality assertions compare aligned states.
SymmetricState align_global_phase(const SymmetricState& state, const SymmetricState& reference);

}  // namespace sqz
