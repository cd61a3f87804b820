#include "core/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "core/tolerances.hpp"

namespace sqz {

namespace {

void check_alpha_open(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1)");
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

long long cut_size(int m, int n) {
  if (n < 1) throw std::invalid_argument("cut_size: n must be >= 1");
  if (m < 0 || m > n) throw std::invalid_argument("cut_size: m out of range");
  return static_cast<long long>(m) * (n - m);
}

MWindow m_bounds(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("m_bounds: n must be >= 1");
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("m_bounds: alpha must lie in (0, 1]");
  const double root = std::sqrt(1.0 - alpha);
  MWindow window;
  window.m_minus = 0.5 * n * (1.0 - root);
  window.m_plus = 0.5 * n * (1.0 + root);
  // A bound that is an integer in exact arithmetic (c(m) = alpha c_max holds
  // with equality) can land a rounding error away from it; snap so the
  // inclusive window keeps the equality level, and flag the case.
  constexpr double snap = 1e-9;
  const double lo_rounded = std::round(window.m_minus);
  const double hi_rounded = std::round(window.m_plus);
  const bool lo_integer = std::abs(window.m_minus - lo_rounded) < snap;
  const bool hi_integer = std::abs(window.m_plus - hi_rounded) < snap;
  window.lo = lo_integer ? int(lo_rounded) : int(std::ceil(window.m_minus));
  window.hi = hi_integer ? int(hi_rounded) : int(std::floor(window.m_plus));
  window.boundary_exact = lo_integer || hi_integer;
  return window;
}

double p_alpha_empirical(const std::vector<double>& pm, int n, double alpha) {
  if (int(pm.size()) != n + 1)
    throw std::invalid_argument("p_alpha_empirical: p_m must have n+1 entries");
  double total = 0.0;
  for (double p : pm) {
    if (p < -kTol.distribution) throw std::invalid_argument("p_alpha_empirical: negative p_m");
    total += p;
  }
  if (std::abs(total - 1.0) > kTol.distribution)
    throw std::invalid_argument("p_alpha_empirical: p_m is not normalized (sum " +
                                std::to_string(total) + ")");
  const MWindow window = m_bounds(n, alpha);
  double prob = 0.0;
  for (int m = std::max(0, window.lo); m <= std::min(n, window.hi); ++m) prob += pm[m];
  return prob;
}

std::vector<double> gaussian_pm(int n, double squeezing_db) {
  if (n < 1) throw std::invalid_argument("gaussian_pm: n must be >= 1");
  if (!std::isfinite(squeezing_db))
    throw std::invalid_argument("gaussian_pm: squeezing must be finite");
  const double sigma = std::sqrt(0.25 * n * std::pow(10.0, squeezing_db / 10.0));
  const double center = 0.5 * n;
  std::vector<double> pm(n + 1);
  double total = 0.0;
  for (int m = 0; m <= n; ++m) {
    pm[m] = normal_cdf((m + 0.5 - center) / sigma) - normal_cdf((m - 0.5 - center) / sigma);
    total += pm[m];
  }
  for (double& p : pm) p /= total;
  return pm;
}

double p_alpha_gaussian(int n, double squeezing_db, double alpha) {
  check_alpha_open(alpha);
  return p_alpha_empirical(gaussian_pm(n, squeezing_db), n, alpha);
}

std::vector<BenchmarkPoint> benchmark_grid(const std::vector<int>& n_values,
                                           const std::vector<double>& squeezing_values,
                                           double alpha) {
  if (n_values.empty() || squeezing_values.empty())
    throw std::invalid_argument("benchmark_grid: empty ranges");
  check_alpha_open(alpha);
  const int n_max = *std::max_element(n_values.begin(), n_values.end());
  const DiscontinuityRecord record = discontinuities(alpha, std::max(n_max, 4));
  const std::set<int> jumps(record.n_values.begin(), record.n_values.end());

  std::vector<BenchmarkPoint> grid;
  grid.reserve(n_values.size() * squeezing_values.size());
  for (int n : n_values) {
    const MWindow window = m_bounds(n, alpha);
    for (double s : squeezing_values) {
      BenchmarkPoint point;
      point.n = n;
      point.squeezing_db = s;
      point.alpha = alpha;
      point.p_alpha = p_alpha_gaussian(n, s, alpha);
      point.is_discontinuity = jumps.count(n) > 0;
      point.boundary_exact = window.boundary_exact;
      grid.push_back(point);
    }
  }
  return grid;
}

DiscontinuityRecord discontinuities(double alpha, int n_max) {
  check_alpha_open(alpha);
  if (n_max < 4) throw std::invalid_argument("discontinuities: n_max must be >= 4");
  const double root = std::sqrt(1.0 - alpha);
  DiscontinuityRecord record;
  record.alpha = alpha;
  auto level = [root](int n) { return int(std::floor(0.5 * n * root)); };
  for (int n = 4; n <= n_max; n += 2)
    if (level(n) > level(n - 2)) record.n_values.push_back(n);
  return record;
}

long long qaoa_line_cnot(int n) {
  if (n < 2) throw std::invalid_argument("qaoa_line_cnot: n must be >= 2");
  const long long nn = n;
  return 3 * nn * (nn - 1) / 2 - nn + 1;
}

long long qv_cnot_bound(int n) {
  if (n < 2) throw std::invalid_argument("qv_cnot_bound: n must be >= 2");
  const long long nn = n;
  return 3 * nn * (nn / 2) + 3 * (nn - 1) * (nn / 2);
}

DeltaResult improvement_delta(double e_initial, double e_achieved, double e_target) {
  if (!(e_target < e_initial))
    throw std::invalid_argument("improvement_delta: target must lie below the initial energy");
  DeltaResult delta;
  delta.value = (e_initial - e_achieved) / (e_initial - e_target);
  delta.in_range = delta.value >= 0.0 && delta.value <= 1.0;
  return delta;
}

}  // namespace sqz
