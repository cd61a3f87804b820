#pragma once

#include <string>

#include "core/symmetric_state.hpp"

namespace sqz {

enum class Axis { x, y, z };

// Everything a state is judged by: squeezing, z-moments, quantum Fisher
// information, the entanglement witnesses, and the overlap with the
// maximum-cut target state. e2_depth is witnessed (pure-state QFI bound);
// e3_depth_estimate is the Gaussian estimate from squeezing alone.
struct MetrologyReport {
  int n = 0;
  double squeezing_db = 0.0;  // -inf when var_z == 0 ("neg_inf" in JSON)
  double var_z = 0.0;
  double exp_z = 0.0;
  double exp_z2 = 0.0;
  double qfi_x = 0.0;
  double qfi_y = 0.0;
  bool e1_entangled = false;
  double e1_margin = 0.0;  // n/4 - <Lz^2>
  int e2_depth = 1;
  int e3_depth_estimate = 1;
  double dicke_overlap = 0.0;
};

/// S[dB] = 10 log10(var_z / (n/4)); negative means number squeezed below
/// shot noise. var_z = 0 maps to -infinity; var_z < 0 is rejected.
double squeezing_db(double var_z, int n);

/// Pure-state quantum Fisher information F_Q = 4 Var(L_axis).
double qfi_pure(const SymmetricState& state, Axis axis);

struct E1Result {
  bool entangled = false;
  double margin = 0.0;
};

/// Separability bound on second moments: entangled iff <Lz^2> < n/4.
/// Meaningful near <Lz> = 0; the mean is available from collective_moments.
E1Result witness_e1(const SymmetricState& state);

/// Largest d = k+1 such that fq > s k^2 + r^2 with s = floor(n/k) and
/// r = n - s k; 1 when no bound is violated.
int qfi_entanglement_depth(double fq, int n);

/// Gaussian-state estimate: F_Q ~= n 10^(-S/10), then the depth bound above.
/// Requires finite S.
int gaussian_depth_estimate(double squeezing_db_value, int n);

MetrologyReport metrology_report(const SymmetricState& state);

/// Flat JSON object with snake_case keys; round-trips losslessly.
std::string report_to_json(const MetrologyReport& report);
MetrologyReport report_from_json(const std::string& json_text);

}  // namespace sqz
