#include "core/symmetric_state.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "core/tolerances.hpp"

namespace sqz {

namespace {

const std::complex<double> kI(0.0, 1.0);

double ln_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Raising coefficient: L+|m> = r(m)|m+1> with r(m) = sqrt((n-m)(m+1)).
double ladder(int n, int m) { return std::sqrt(double(n - m) * double(m + 1)); }

// Eigendecomposition of the real symmetric tridiagonal Lx matrix for one n.
// Columns of vectors are eigenvectors; computed once and shared read-only.
struct LxBasis {
  std::vector<double> eigenvalues;  // n + 1
  std::vector<double> vectors;      // row-major (n+1) x (n+1), vectors[r*(n+1)+c]
};

std::shared_ptr<const LxBasis> lx_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const LxBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n + 1);
  Eigen::VectorXd sub(n);
  for (int m = 0; m < n; ++m) sub[m] = 0.5 * ladder(n, m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Lx eigendecomposition failed for n=" + std::to_string(n));

  auto basis = std::make_shared<LxBasis>();
  basis->eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n + 1);
  basis->vectors.resize(std::size_t(n + 1) * (n + 1));
  for (int r = 0; r <= n; ++r)
    for (int c = 0; c <= n; ++c)
      basis->vectors[std::size_t(r) * (n + 1) + c] = solver.eigenvectors()(r, c);
  cache[n] = basis;
  return basis;
}

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1, got " + std::to_string(n));
}

}  // namespace

SymmetricState coherent_plus_state(int n) {
  check_n(n);
  SymmetricState state{n, std::vector<std::complex<double>>(n + 1)};
  const double ln2n = n * std::log(2.0);
  for (int m = 0; m <= n; ++m) state.amps[m] = std::exp(0.5 * (ln_choose(n, m) - ln2n));
  return state;
}

SymmetricState dicke_state(int n, int k) {
  check_n(n);
  if (k < 0 || k > n)
    throw std::invalid_argument("Dicke index out of range: k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
  SymmetricState state{n, std::vector<std::complex<double>>(n + 1)};
  state.amps[k] = 1.0;
  return state;
}

SymmetricState maxcut_target_state(int n) {
  if (n < 2) throw std::invalid_argument("maxcut target needs n >= 2");
  if (n % 2 == 0) return dicke_state(n, n / 2);
  SymmetricState state{n, std::vector<std::complex<double>>(n + 1)};
  const double r = 1.0 / std::sqrt(2.0);
  state.amps[n / 2] = r;
  state.amps[n / 2 + 1] = r;
  return state;
}

SymmetricState apply_cost_phase(const SymmetricState& state, double gamma) {
  validate(state);
  SymmetricState out = state;
  for (int m = 0; m <= state.n; ++m) {
    // eigenvalue of H_C at m: (m - n/2)^2 - n^2/4 = -m(n-m)
    const double e = -double(m) * double(state.n - m);
    out.amps[m] *= std::exp(-kI * (gamma * e));
  }
  return out;
}

SymmetricState apply_mixer_rotation(const SymmetricState& state, double beta) {
  validate(state);
  const int dim = state.n + 1;
  auto basis = lx_basis(state.n);
  std::vector<std::complex<double>> in_eigen(dim, 0.0);
  // V^T amps
  for (int c = 0; c < dim; ++c) {
    std::complex<double> acc = 0.0;
    for (int r = 0; r < dim; ++r)
      acc += basis->vectors[std::size_t(r) * dim + c] * state.amps[r];
    in_eigen[c] = acc * std::exp(2.0 * kI * (beta * basis->eigenvalues[c]));
  }
  SymmetricState out{state.n, std::vector<std::complex<double>>(dim)};
  for (int r = 0; r < dim; ++r) {
    std::complex<double> acc = 0.0;
    for (int c = 0; c < dim; ++c) acc += basis->vectors[std::size_t(r) * dim + c] * in_eigen[c];
    out.amps[r] = acc;
  }
  return out;
}

std::vector<double> pm_distribution(const SymmetricState& state) {
  validate(state);
  std::vector<double> pm(state.n + 1);
  for (int m = 0; m <= state.n; ++m) pm[m] = std::norm(state.amps[m]);
  return pm;
}

CollectiveMoments collective_moments(const SymmetricState& state) {
  validate(state);
  const int n = state.n;
  const double l = 0.5 * n;

  double mean_z = 0.0, second_z = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double p = std::norm(state.amps[m]);
    const double mz = m - l;
    mean_z += p * mz;
    second_z += p * mz * mz;
  }

  // <L+> and <L+^2> carry the full transverse information:
  //   <Lx> = Re<L+>, <Ly> = Im<L+>,
  //   <Lx^2> = (l(l+1) - <Lz^2>)/2 + Re<L+^2>/2,
  //   <Ly^2> = (l(l+1) - <Lz^2>)/2 - Re<L+^2>/2.
  std::complex<double> up1 = 0.0, up2 = 0.0;
  for (int m = 0; m < n; ++m)
    up1 += std::conj(state.amps[m + 1]) * state.amps[m] * ladder(n, m);
  for (int m = 0; m + 1 < n; ++m)
    up2 += std::conj(state.amps[m + 2]) * state.amps[m] * ladder(n, m) * ladder(n, m + 1);

  CollectiveMoments mo;
  mo.mean_x = up1.real();
  mo.mean_y = up1.imag();
  mo.mean_z = mean_z;
  const double casimir = l * (l + 1.0);
  mo.second_x = 0.5 * (casimir - second_z) + 0.5 * up2.real();
  mo.second_y = 0.5 * (casimir - second_z) - 0.5 * up2.real();
  mo.second_z = second_z;
  mo.var_x = mo.second_x - mo.mean_x * mo.mean_x;
  mo.var_y = mo.second_y - mo.mean_y * mo.mean_y;
  mo.var_z = mo.second_z - mo.mean_z * mo.mean_z;
  return mo;
}

double energy_expectation(const SymmetricState& state) {
  validate(state);
  double energy = 0.0;
  for (int m = 0; m <= state.n; ++m)
    energy -= std::norm(state.amps[m]) * double(m) * double(state.n - m);
  return energy;
}

double state_overlap(const SymmetricState& a, const SymmetricState& b) {
  if (a.n != b.n)
    throw std::invalid_argument("state_overlap: size mismatch (" + std::to_string(a.n) + " vs " +
                                std::to_string(b.n) + ")");
  std::complex<double> inner = 0.0;
  for (int m = 0; m <= a.n; ++m) inner += std::conj(a.amps[m]) * b.amps[m];
  return std::norm(inner);
}

double state_norm(const SymmetricState& state) {
  double total = 0.0;
  for (const auto& a : state.amps) total += std::norm(a);
  return std::sqrt(total);
}

void validate(const SymmetricState& state) {
  check_n(state.n);
  if (state.amps.size() != std::size_t(state.n) + 1)
    throw std::invalid_argument("amplitude vector must have n+1 entries");
  if (std::abs(state_norm(state) - 1.0) > kTol.norm)
    throw std::invalid_argument("state is not normalized");
}

SymmetricState align_global_phase(const SymmetricState& state, const SymmetricState& reference) {
  if (state.n != reference.n) throw std::invalid_argument("align_global_phase: size mismatch");
  int pivot = 0;
  for (int m = 1; m <= reference.n; ++m)
    if (std::abs(reference.amps[m]) > std::abs(reference.amps[pivot])) pivot = m;
  const std::complex<double> num = reference.amps[pivot] * std::conj(state.amps[pivot]);
  const double mag = std::abs(num);
  if (mag == 0.0) return state;  // no overlap at the pivot; nothing to align
  const std::complex<double> phase = num / mag;
  SymmetricState out = state;
  for (auto& a : out.amps) a *= phase;
  return out;
}

}  // namespace sqz
