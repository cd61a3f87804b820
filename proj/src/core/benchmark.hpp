#pragma once

#include <vector>

namespace sqz {

/// Cut size reached from level m on the complete unweighted graph:
/// c(m) = m(n-m), maximum floor(n^2/4) at the most balanced m.
long long cut_size(int m, int n);

// Window of m levels whose cuts reach fraction alpha of c_max = n^2/4:
// m_-(alpha) <= m <= m_+(alpha) with m_+- = n/2 (1 +- sqrt(1-alpha)).
// boundary_exact marks the measure-zero case where a bound is an integer and
// c(m) = alpha c_max holds with equality at the edge.
struct MWindow {
  double m_minus = 0.0;
  double m_plus = 0.0;
  int lo = 0;  // ceil(m_minus)
  int hi = 0;  // floor(m_plus)
  bool boundary_exact = false;
};

MWindow m_bounds(int n, double alpha);

/// P_alpha = sum of p_m over the integer window. p_m must be a distribution
/// over m = 0..n, normalized within kTol.distribution.
double p_alpha_empirical(const std::vector<double>& pm, int n, double alpha);

/// Discretization of the Gaussian N(n/2, sigma) with S = 10 log10(4 sigma^2 / n):
/// unit-width bins centered on the integers, renormalized over {0..n}.
std::vector<double> gaussian_pm(int n, double squeezing_db);

/// P_alpha of the discretized Gaussian model.
double p_alpha_gaussian(int n, double squeezing_db, double alpha);

struct BenchmarkPoint {
  int n = 0;
  double squeezing_db = 0.0;
  double alpha = 0.0;
  double p_alpha = 0.0;
  bool is_discontinuity = false;
  bool boundary_exact = false;
};

std::vector<BenchmarkPoint> benchmark_grid(const std::vector<int>& n_values,
                                           const std::vector<double>& squeezing_values,
                                           double alpha);

struct DiscontinuityRecord {
  double alpha = 0.0;
  std::vector<int> n_values;  // strictly increasing even n
};

/// Even n <= n_max where floor((n/2) sqrt(1-alpha)) increments vs n-2, i.e.
/// where the included-m window abruptly widens.
DiscontinuityRecord discontinuities(double alpha, int n_max);

/// CNOTs of one complete-graph QAOA cost layer transpiled to a line:
/// (3/2) n (n-1) - n + 1.
long long qaoa_line_cnot(int n);

/// Upper bound on CNOTs of a Quantum Volume circuit on a line:
/// 3 n floor(n/2) + 3 (n-1) floor(n/2).
long long qv_cnot_bound(int n);

// (e_initial - e_achieved) / (e_initial - e_target). Values outside [0, 1]
// are returned as-is with in_range = false; they signal a broken run.
struct DeltaResult {
  double value = 0.0;
  bool in_range = true;
};

DeltaResult improvement_delta(double e_initial, double e_achieved, double e_target);

}  // namespace sqz
