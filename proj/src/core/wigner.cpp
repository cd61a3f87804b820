#include "core/wigner.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace sqz {

namespace {

constexpr double kPi = 3.141592653589793238463;

double ln_factorial(int k) { return std::lgamma(k + 1.0); }

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> with doubled arguments so
// half-integer spins stay exact. Racah's closed form with log-factorials.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M) {
  if (two_m1 + two_m2 != two_M) return 0.0;
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 || std::abs(two_M) > two_J)
    return 0.0;
  if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2) return 0.0;
  // every factorial argument below must be a non-negative integer
  if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0 || (two_J + two_M) % 2 != 0)
    return 0.0;
  if ((two_j1 + two_j2 + two_J) % 2 != 0) return 0.0;

  const int j1pj2mJ = (two_j1 + two_j2 - two_J) / 2;
  const int j1mj2pJ = (two_j1 - two_j2 + two_J) / 2;
  const int mj1pj2pJ = (-two_j1 + two_j2 + two_J) / 2;
  const int j1pj2pJp1 = (two_j1 + two_j2 + two_J) / 2 + 1;
  const int j1pm1 = (two_j1 + two_m1) / 2;
  const int j1mm1 = (two_j1 - two_m1) / 2;
  const int j2pm2 = (two_j2 + two_m2) / 2;
  const int j2mm2 = (two_j2 - two_m2) / 2;
  const int JpM = (two_J + two_M) / 2;
  const int JmM = (two_J - two_M) / 2;

  const double ln_prefactor =
      0.5 * (std::log(two_J + 1.0) + ln_factorial(j1pj2mJ) + ln_factorial(j1mj2pJ) +
             ln_factorial(mj1pj2pJ) - ln_factorial(j1pj2pJp1) + ln_factorial(j1pm1) +
             ln_factorial(j1mm1) + ln_factorial(j2pm2) + ln_factorial(j2mm2) +
             ln_factorial(JpM) + ln_factorial(JmM));

  // sum over k with all six factorial arguments non-negative
  const int Jmj2pm1 = (two_J - two_j2 + two_m1) / 2;
  const int Jmj1mm2 = (two_J - two_j1 - two_m2) / 2;
  const int k_lo = std::max(0, std::max(-Jmj2pm1, -Jmj1mm2));
  const int k_hi = std::min(j1pj2mJ, std::min(j1mm1, j2pm2));

  double sum = 0.0;
  for (int k = k_lo; k <= k_hi; ++k) {
    const double ln_denom = ln_factorial(k) + ln_factorial(j1pj2mJ - k) +
                            ln_factorial(j1mm1 - k) + ln_factorial(j2pm2 - k) +
                            ln_factorial(Jmj2pm1 + k) + ln_factorial(Jmj1mm2 + k);
    const double term = std::exp(ln_prefactor - ln_denom);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

struct GaussLegendre {
  std::vector<double> nodes;    // in (-1, 1), descending
  std::vector<double> weights;  // sum to 2
};

GaussLegendre gauss_legendre(int q) {
  GaussLegendre rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  for (int i = 0; i < (q + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= q; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.nodes[q - 1 - i] = -x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[q - 1 - i] = rule.weights[i];
  }
  if (q % 2 == 1) rule.nodes[q / 2] = 0.0;
  return rule;
}

// Orthonormal associated Legendre functions with Condon-Shortley phase:
// Y_KQ = plm[K][Q] * exp(i Q phi). Table for K = 0..k_max, Q = 0..K at one x.
std::vector<std::vector<double>> normalized_legendre_table(int k_max, double x) {
  std::vector<std::vector<double>> plm(k_max + 1);
  for (int k = 0; k <= k_max; ++k) plm[k].assign(k + 1, 0.0);
  const double sx = std::sqrt(std::max(0.0, 1.0 - x * x));
  plm[0][0] = std::sqrt(1.0 / (4.0 * kPi));
  for (int q = 1; q <= k_max; ++q)
    plm[q][q] = -std::sqrt((2.0 * q + 1.0) / (2.0 * q)) * sx * plm[q - 1][q - 1];
  for (int q = 0; q < k_max; ++q) plm[q + 1][q] = std::sqrt(2.0 * q + 3.0) * x * plm[q][q];
  for (int q = 0; q <= k_max; ++q) {
    for (int k = q + 2; k <= k_max; ++k) {
      const double a = std::sqrt((4.0 * k * k - 1.0) / (double(k) * k - double(q) * q));
      const double b =
          std::sqrt((double(k - 1) * (k - 1) - double(q) * q) / (4.0 * double(k - 1) * (k - 1) - 1.0));
      plm[k][q] = a * (x * plm[k - 1][q] - b * plm[k - 2][q]);
    }
  }
  return plm;
}

}  // namespace

WignerGrid spin_wigner(const SymmetricState& state, int n_theta, int n_phi) {
  validate(state);
  if (n_theta < 8 || n_phi < 8)
    throw std::invalid_argument("spin_wigner: resolution must be >= 8 per axis");

  const int n = state.n;
  const int k_max = n;  // rank 2l
  const double scale = std::sqrt(4.0 * kPi / (n + 1.0));

  // rho_KQ = sum_m t^KQ_m conj(a_m) a_{m+Q},
  // t^KQ_m = sqrt((2K+1)/(2l+1)) <l m-l; K Q | l m-l+Q>
  // (this ordering makes T_10 proportional to +Lz, so the north pole is the
  // maximum of the |0> Wigner function)
  std::vector<std::vector<std::complex<double>>> rho(k_max + 1);
  for (int K = 0; K <= k_max; ++K) {
    rho[K].assign(K + 1, 0.0);
    const double norm = std::sqrt((2.0 * K + 1.0) / (n + 1.0));
    for (int Q = 0; Q <= K; ++Q) {
      std::complex<double> acc = 0.0;
      for (int m = 0; m + Q <= n; ++m) {
        const int two_m_low = 2 * m - n;  // doubled Lz label of |m>
        const double cg =
            clebsch_gordan(n, two_m_low, 2 * K, 2 * Q, n, two_m_low + 2 * Q);
        if (cg != 0.0) acc += norm * cg * std::conj(state.amps[m]) * state.amps[m + Q];
      }
      rho[K][Q] = acc;
    }
  }

  WignerGrid grid;
  grid.n = n;
  grid.theta.resize(n_theta);
  grid.theta_weight.resize(n_theta);
  grid.phi.resize(n_phi);
  grid.values.assign(std::size_t(n_theta) * n_phi, 0.0);

  const GaussLegendre rule = gauss_legendre(n_theta);
  for (int i = 0; i < n_theta; ++i) {
    // nodes descend in x, so theta ascends
    grid.theta[i] = std::acos(rule.nodes[i]);
    grid.theta_weight[i] = rule.weights[i];
  }
  for (int j = 0; j < n_phi; ++j) grid.phi[j] = 2.0 * kPi * (j + 0.5) / n_phi;

  for (int i = 0; i < n_theta; ++i) {
    const auto plm = normalized_legendre_table(k_max, rule.nodes[i]);
    // collapse K first: c_Q = sum_K rho_KQ plm[K][Q]
    std::vector<std::complex<double>> c(k_max + 1, 0.0);
    for (int K = 0; K <= k_max; ++K)
      for (int Q = 0; Q <= K; ++Q) c[Q] += rho[K][Q] * plm[K][Q];
    for (int j = 0; j < n_phi; ++j) {
      double w = c[0].real();
      for (int Q = 1; Q <= k_max; ++Q) {
        const std::complex<double> phase(std::cos(Q * grid.phi[j]), std::sin(Q * grid.phi[j]));
        w += 2.0 * (c[Q] * phase).real();
      }
      grid.values[std::size_t(i) * n_phi + j] = scale * w;
    }
  }
  return grid;
}

double wigner_normalization(const WignerGrid& grid) {
  const int n_theta = int(grid.theta.size());
  const int n_phi = int(grid.phi.size());
  const double dphi = 2.0 * kPi / n_phi;
  double integral = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_phi; ++j) row += grid.values[std::size_t(i) * n_phi + j];
    integral += grid.theta_weight[i] * row * dphi;
  }
  return (grid.n + 1.0) / (4.0 * kPi) * integral;
}

std::string wigner_to_csv(const WignerGrid& grid) {
  std::string out = "theta,phi,value\n";
  char line[128];
  const int n_phi = int(grid.phi.size());
  for (std::size_t i = 0; i < grid.theta.size(); ++i) {
    for (int j = 0; j < n_phi; ++j) {
      std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g\n", grid.theta[i], grid.phi[j],
                    grid.values[i * n_phi + j]);
      out += line;
    }
  }
  return out;
}

}  // namespace sqz
