// Acceptance gate: one check per release criterion, one PASS/FAIL line each.
// Exit code is the number of failed criteria.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "core/benchmark.hpp"
#include "core/full_state.hpp"
#include "core/graph.hpp"
#include "core/metrology.hpp"
#include "core/qaoa.hpp"
#include "core/spsa.hpp"
#include "core/symmetric_state.hpp"
#include "json.hpp"
#include "support/invariants.hpp"
#include "support/schema_check.hpp"

using namespace sqz;

namespace {

constexpr double kPi = 3.141592653589793238463;
constexpr double kTwoPi = 6.283185307179586476925;

int g_failures = 0;

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void expect(bool ok, const std::string& detail) {
    ok_ = ok_ && ok;
    if (!text_.empty()) text_ += "; ";
    text_ += detail + (ok ? "" : " <-- FAIL");
  }

  void expect_near(const std::string& label, double got, double want, double tolerance) {
    std::ostringstream out;
    out.precision(6);
    out << label << "=" << got << " (want " << want << " +- " << tolerance << ")";
    expect(std::abs(got - want) <= tolerance, out.str());
  }

  void expect_le(const std::string& label, double got, double bound) {
    std::ostringstream out;
    out.precision(6);
    out << label << "=" << got << " (want <= " << bound << ")";
    expect(got <= bound, out.str());
  }

  void expect_eq(const std::string& label, long got, long want) {
    std::ostringstream out;
    out << label << "=" << got << " (want " << want << ")";
    expect(got == want, out.str());
  }

  ~Criterion() {
    std::printf("[%2d] %s  %s: %s\n", id_, ok_ ? "PASS" : "FAIL", title_.c_str(),
                text_.c_str());
    std::fflush(stdout);
    if (!ok_) ++g_failures;
  }

 private:
  int id_;
  std::string title_;
  bool ok_ = true;
  std::string text_;
};

const QaoaParams kPipelineParams{{0.199, 0.306, 4.592}, {0.127, 0.087, 1.518}};

// local refinement of the depth-one energy optimum from the grid argmin
struct DepthOneOptimum {
  double gamma = 0.0, beta = 0.0, energy = 0.0;
};

double depth_one_energy(int n, double gamma, double beta) {
  return energy_expectation(trial_state(n, QaoaParams{{gamma}, {beta}}));
}

DepthOneOptimum refine_depth_one(int n) {
  const LandscapeResult scan = landscape_scan(n, 0.0, kTwoPi, 400, 0.0, kPi, 400);
  DepthOneOptimum best{scan.argmin_gamma, scan.argmin_beta, scan.min_energy};
  double step = kTwoPi / 400.0;
  for (int round = 0; round < 70 && step > 1e-13; ++round) {
    DepthOneOptimum local = best;
    for (int di = -3; di <= 3; ++di)
      for (int dj = -3; dj <= 3; ++dj) {
        const double gamma = best.gamma + di * step / 3.0;
        const double beta = best.beta + dj * step / 3.0;
        const double energy = depth_one_energy(n, gamma, beta);
        if (energy < local.energy) local = {gamma, beta, energy};
      }
    best = local;
    step /= 2.2;
  }
  return best;
}

double max_amp_diff(const SymmetricState& a, const SymmetricState& b) {
  double worst = 0.0;
  for (int m = 0; m <= a.n; ++m) worst = std::max(worst, std::abs(a.amps[m] - b.amps[m]));
  return worst;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(SQZ_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  std::array<char, 8192> buffer;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void criterion_1_pipeline() {
  Criterion crit(1, "three-layer pipeline metrology");
  const SymmetricState state = trial_state(12, kPipelineParams);
  const MetrologyReport report = metrology_report(state);
  crit.expect_near("S_dB", report.squeezing_db, -9.71, 0.05);
  crit.expect_near("exp_z2", report.exp_z2, 0.32, 0.01);
  crit.expect_near("F_Q[L_y]", report.qfi_y, 84.48, 0.2);
  crit.expect_eq("E2_depth", report.e2_depth, 9);
  crit.expect_eq("E3_estimate", report.e3_depth_estimate, 11);
  crit.expect_near("dicke_overlap", report.dicke_overlap, 0.96, 0.01);
}

void criterion_2_depth_one_ceiling() {
  Criterion crit(2, "depth-one ceiling and depth-three optimization");
  const LandscapeResult scan = landscape_scan(12, 0.0, kTwoPi, 400, 0.0, kPi, 400);
  crit.expect_near("landscape_min", scan.min_energy, -35.47, 0.01);
  crit.expect_near("overlap_at_argmin", scan.dicke_overlap, 0.9853, 0.002);

  SpsaConfig config;
  config.seed = 2026;
  const OptimizationTrace trace = multistart_optimize(12, 3, 20, config);
  crit.expect_le("depth3_best", trace.best_value, -35.5);
}

void criterion_3_delta_metric() {
  Criterion crit(3, "improvement metric arithmetic");
  const double depth_one = improvement_delta(-33.0, -35.47, -36.0).value;
  const double depth_three = improvement_delta(-33.0, -35.68, -36.0).value;
  crit.expect_near("delta_p1", depth_one, 2.47 / 3.0, 1e-12);
  crit.expect_near("delta_p3", depth_three, 2.68 / 3.0, 1e-12);
  crit.expect_near("advantage", depth_three - depth_one, 0.07, 0.005);
}

void criterion_4_beta_sweeps() {
  Criterion crit(4, "noiseless depth-one squeezing sweeps");
  const double targets[3] = {-5.14, -5.90, -6.56};
  const int sizes[3] = {4, 6, 8};
  for (int i = 0; i < 3; ++i) {
    const DepthOneOptimum optimum = refine_depth_one(sizes[i]);
    double best = 1e300;
    for (const SweepPoint& point : beta_sweep(sizes[i], {optimum.gamma}, 0.0, kPi, 4001))
      best = std::min(best, point.squeezing_db);
    crit.expect_near("min_S(n=" + std::to_string(sizes[i]) + ")", best, targets[i], 0.05);
  }
}

void criterion_5_gaussian_benchmark() {
  Criterion crit(5, "Gaussian benchmark percentages and discontinuities");
  crit.expect_near("P(4,-4.80)", p_alpha_gaussian(4, -4.80, 0.999), 0.615, 0.004);
  crit.expect_near("P(6,-4.18)", p_alpha_gaussian(6, -4.18, 0.999), 0.491, 0.004);
  crit.expect_near("P(8,-4.02)", p_alpha_gaussian(8, -4.02, 0.999), 0.426, 0.004);
  crit.expect_near("P(4,-5.96)", p_alpha_gaussian(4, -5.96, 0.999), 0.682, 0.004);
  const DiscontinuityRecord record = discontinuities(0.999, 256);
  crit.expect(record.n_values == std::vector<int>{64, 128, 190, 254},
              "n_dis={64,128,190,254}");
}

void criterion_6_cnot_formulas() {
  Criterion crit(6, "CNOT counting formulas");
  crit.expect_eq("qaoa_line_cnot(6)", qaoa_line_cnot(6), 40);
  crit.expect_eq("qaoa_line_cnot(8)", qaoa_line_cnot(8), 77);
}

void criterion_7_entanglement_witnesses() {
  Criterion crit(7, "entanglement witnesses at depth-one optima");
  const int expected_depth[3] = {4, 4, 5};
  const int sizes[3] = {4, 6, 8};
  for (int i = 0; i < 3; ++i) {
    const DepthOneOptimum optimum = refine_depth_one(sizes[i]);
    const SymmetricState state =
        trial_state(sizes[i], QaoaParams{{optimum.gamma}, {optimum.beta}});
    const int depth = qfi_entanglement_depth(qfi_pure(state, Axis::y), sizes[i]);
    crit.expect_eq("E2(n=" + std::to_string(sizes[i]) + ")", depth, expected_depth[i]);
  }
  crit.expect_eq("E3(-4.80,4)", gaussian_depth_estimate(-4.80, 4), 4);
  crit.expect_eq("E3(-4.18,6)", gaussian_depth_estimate(-4.18, 6), 3);
  crit.expect_eq("E3(-4.02,8)", gaussian_depth_estimate(-4.02, 8), 3);
}

void criterion_8_over_squeezing() {
  Criterion crit(8, "over-squeezing from a single long cost pulse");
  // S vanishes identically at beta = 0 and pi (identity rotations), so the
  // 1000-point sweep samples the open interval
  const double gamma = 0.199 + 0.306 + 4.592;
  double min_s = 1e300;
  for (const SweepPoint& point :
       beta_sweep(12, {gamma}, kPi / 2000.0, kPi * 1999.0 / 2000.0, 1000))
    min_s = std::min(min_s, point.squeezing_db);
  std::ostringstream out;
  out.precision(6);
  out << "min_S_over_sweep=" << min_s << " (want > 0)";
  crit.expect(min_s > 0.0, out.str());

  const double at_quarter = beta_sweep(12, {gamma}, kPi / 4.0, kPi / 2.0, 2)[0].squeezing_db;
  crit.expect_near("S(pi/4)", at_quarter, 8.0, 0.3);
}

void criterion_9_oracle_equivalence() {
  Criterion crit(9, "oracle equivalence over random schedules");
  const auto suite = invariants::oracle_equivalence(100, 2468, /*n_max=*/8);
  crit.expect(suite.failures == 0,
              "100 schedules, n in {2..8}, amplitude tol 1e-9, residual tol 1e-9" +
                  (suite.failures ? " (" + suite.first_failure + ")" : ""));
}

void criterion_10_deep_squeezing_regression() {
  Criterion crit(10, "n=4 depth-2 deep-squeezing regression");
  const QaoaParams params{{0.918, -0.257}, {-0.711, -2.175}};
  const SymmetricState direct = trial_state(4, params);
  const SymmetricProjection proj =
      project_symmetric(evolve_qaoa_full(maxcut_ising(complete_graph(4)), params));
  const double diff =
      max_amp_diff(align_global_phase(direct, proj.components), proj.components);
  std::ostringstream out;
  out.precision(3);
  out << "simulator_amp_diff=" << diff << " (want <= 1e-9)";
  crit.expect(diff <= 1e-9, out.str());

  const double s_db = squeezing_db(collective_moments(direct).var_z, 4);
  crit.expect_le("S_dB", s_db, -10.0);
  crit.expect_near("S_dB_pinned", s_db, -59.7476571937, 1e-3);
}

void criterion_11_invariant_suites() {
  Criterion crit(11, "module invariant suites at 1000 cases");
  for (const auto& suite : invariants::run_all(1000, 20260808)) {
    crit.expect(suite.failures == 0,
                suite.name + (suite.failures ? " (" + suite.first_failure + ")" : ""));
  }
  const auto exhaustive = invariants::window_correctness_exhaustive();
  crit.expect(exhaustive.failures == 0,
              exhaustive.name +
                  (exhaustive.failures ? " (" + exhaustive.first_failure + ")" : ""));

  // cli: reproducibility and schema validity over randomized configs
  CounterRng rng(112233);
  long cli_failures = 0;
  std::string first_cli_failure;
  const int cli_cases = 1000;
  for (int i = 0; i < cli_cases; ++i) {
    const int pick = int(rng.next_double() * 4);
    const int n = 2 + int(rng.next_double() * 7);
    std::ostringstream cmd;
    std::string schema_name;
    switch (pick) {
      case 0:
        cmd << "report --n " << n << " --gammas " << rng.next_uniform(0.0, 6.2) << " --betas "
            << rng.next_uniform(0.0, 3.1);
        schema_name = "report.schema.json";
        break;
      case 1:
        cmd << "discontinuities --alpha 0." << 900 + int(rng.next_double() * 99) << " --n-max "
            << 50 + int(rng.next_double() * 200);
        schema_name = "discontinuities.schema.json";
        break;
      case 2:
        cmd << "sweep --n " << n << " --gammas " << rng.next_uniform(0.0, 6.2)
            << " --steps 12 --format json";
        schema_name = "rows.schema.json";
        break;
      default:
        cmd << "benchmark --alpha 0.999 --n-min " << n + 2 << " --n-max " << n + 6
            << " --s-min -6 --s-max -2 --s-steps 3 --format json";
        schema_name = "rows.schema.json";
        break;
    }
    const CliResult first = run_cli(cmd.str());
    const CliResult second = run_cli(cmd.str());
    bool ok = first.exit_code == 0 && first.output == second.output;
    if (ok) {
      try {
        sqz::schemacheck::validate_against_file(nlohmann::json::parse(first.output),
                                                std::string(SQZ_SCHEMA_DIR) + "/" +
                                                    schema_name);
      } catch (const std::exception& e) {
        ok = false;
        if (first_cli_failure.empty()) first_cli_failure = e.what();
      }
    } else if (first_cli_failure.empty()) {
      first_cli_failure = "non-zero exit or byte mismatch for: " + cmd.str();
    }
    if (!ok) ++cli_failures;
  }
  crit.expect(cli_failures == 0,
              "cli/reproducibility+schema over " + std::to_string(cli_cases) + " configs" +
                  (cli_failures ? " (" + first_cli_failure + ")" : ""));
}

}  // namespace

int main() {
  std::printf("acceptance gate\n");
  criterion_1_pipeline();
  criterion_2_depth_one_ceiling();
  criterion_3_delta_metric();
  criterion_4_beta_sweeps();
  criterion_5_gaussian_benchmark();
  criterion_6_cnot_formulas();
  criterion_7_entanglement_witnesses();
  criterion_8_over_squeezing();
  criterion_9_oracle_equivalence();
  criterion_10_deep_squeezing_regression();
  criterion_11_invariant_suites();
  std::printf("%d of 11 criteria failed\n", g_failures);
  return g_failures;
}
