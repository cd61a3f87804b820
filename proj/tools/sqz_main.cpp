// sqz: command-line front end over the squeezeqaoa C API. Emits
// machine-readable JSON reports and figure-ready CSV tables.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "squeezeqaoa.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";
constexpr double kPi = 3.141592653589793238463;
constexpr double kTwoPi = 6.283185307179586476925;

// every run is reproducible from its arguments; exit codes: 0 ok,
// 2 invalid arguments, 1 internal failure
struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail_usage(const std::string& message) { throw CliError{2, message}; }

void check(int status, const std::string& where) {
  if (status == SQZ_OK) return;
  const std::string detail = sqz_last_error_message();
  if (status == SQZ_ERROR_INVALID_ARGUMENT || status == SQZ_ERROR_SIZE_MISMATCH)
    throw CliError{2, where + ": " + detail};
  throw CliError{1, where + ": " + detail};
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) fail_usage(flag + ": empty element in list `" + text + "`");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      fail_usage(flag + ": `" + token + "` is not a number");
    }
    if (used != token.size()) fail_usage(flag + ": `" + token + "` is not a number");
    values.push_back(value);
  }
  if (values.empty()) fail_usage(flag + ": empty list");
  return values;
}

std::string format_double(double value) {
  if (std::isinf(value)) return value < 0 ? "\"neg_inf\"" : "\"inf\"";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

// JSON dump with floating-point values at 12 significant digits, insertion
// order preserved.
void dump12(const ordered_json& node, std::string& out, int indent) {
  const std::string pad(2 * indent, ' ');
  const std::string pad_in(2 * (indent + 1), ' ');
  switch (node.type()) {
    case ordered_json::value_t::object: {
      if (node.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = node.begin(); it != node.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + ordered_json(it.key()).dump() + ": ";
        dump12(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (node.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      bool first = true;
      for (const auto& item : node) {
        if (!first) out += ", ";
        first = false;
        dump12(item, out, indent + 1);
      }
      out += "]";
      return;
    }
    case ordered_json::value_t::number_float:
      out += format_double(node.get<double>());
      return;
    default:
      out += node.dump();
      return;
  }
}

std::string dump12(const ordered_json& node) {
  std::string out;
  dump12(node, out, 0);
  out += "\n";
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw CliError{1, "cannot open output file " + out_path};
  file << text;
}

ordered_json envelope(const std::string& command, ordered_json config, bool timestamp) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  if (timestamp) doc["timestamp"] = std::time(nullptr);
  doc["config"] = std::move(config);
  return doc;
}

struct StateSpec {
  int n = 0;
  std::string kind = "qaoa";  // qaoa | coherent | dicke
  int k = -1;
  std::vector<double> gammas, betas;
};

sqz_state* build_state(const StateSpec& spec) {
  sqz_state* state = nullptr;
  if (spec.kind == "dicke") {
    if (spec.k < 0) fail_usage("--state dicke requires --k");
    check(sqz_state_dicke(spec.n, spec.k, &state), "dicke state");
  } else if (spec.kind == "coherent") {
    check(sqz_state_coherent(spec.n, &state), "coherent state");
  } else if (spec.kind == "qaoa") {
    if (spec.gammas.size() != spec.betas.size())
      fail_usage("--gammas and --betas must have the same length");
    check(sqz_state_qaoa_trial(spec.n, spec.gammas.data(), spec.betas.data(),
                               int(spec.gammas.size()), &state),
          "trial state");
  } else {
    fail_usage("--state must be qaoa, coherent or dicke, got `" + spec.kind + "`");
  }
  return state;
}

// ---- subcommand runners ----

int run_report(int n, const std::string& gammas_text, const std::string& betas_text,
               const std::string& out_path, const std::string& format, bool timestamp) {
  if (format != "json") fail_usage("report supports --format json only");
  std::vector<double> gammas, betas;
  if (!gammas_text.empty() || !betas_text.empty()) {
    gammas = parse_double_list(gammas_text, "--gammas");
    betas = parse_double_list(betas_text, "--betas");
    if (gammas.size() != betas.size())
      fail_usage("--gammas and --betas must have the same length");
  }

  sqz_state* state = nullptr;
  check(sqz_state_qaoa_trial(n, gammas.data(), betas.data(), int(gammas.size()), &state),
        "trial state");
  char* report_text = nullptr;
  const int rc = sqz_state_report_json(state, &report_text);
  sqz_state_free(state);
  check(rc, "metrology report");
  const ordered_json report = ordered_json::parse(report_text);
  sqz_string_free(report_text);

  ordered_json config{{"n", n}, {"depth", int(gammas.size())}, {"gammas", gammas},
                      {"betas", betas}};
  ordered_json doc = envelope("report", std::move(config), timestamp);
  doc["report"] = report;
  write_output(dump12(doc), out_path);
  return 0;
}

int run_optimize(int n, int depth, int restarts, std::uint64_t seed, long shots,
                 int max_iterations, int calibration, const std::string& out_path,
                 const std::string& format, bool timestamp) {
  if (format != "json") fail_usage("optimize supports --format json only");

  sqz_spsa_options options;
  sqz_spsa_options_init(&options);
  options.max_iterations = max_iterations;
  options.calibration_iterations = calibration;
  options.seed = seed;
  options.shots = shots;

  sqz_trace* trace = nullptr;
  check(sqz_optimize(n, depth, restarts, &options, &trace), "optimize");
  double best_energy = 0.0;
  std::vector<double> best_gammas(depth), best_betas(depth);
  long evaluations = 0;
  int iterations = 0;
  sqz_trace_best_energy(trace, &best_energy);
  check(sqz_trace_best_params(trace, best_gammas.data(), best_betas.data(), depth),
        "best params");
  sqz_trace_evaluations(trace, &evaluations);
  sqz_trace_iterations(trace, &iterations);
  sqz_trace_free(trace);

  // improvement over the coherent start toward the target manifold
  sqz_state* coherent = nullptr;
  sqz_state* target = nullptr;
  double e_initial = 0.0, e_target = 0.0;
  check(sqz_state_coherent(n, &coherent), "coherent state");
  check(sqz_state_maxcut_target(n, &target), "target state");
  sqz_state_energy(coherent, &e_initial);
  sqz_state_energy(target, &e_target);
  sqz_state_free(coherent);
  sqz_state_free(target);
  double delta_value = 0.0;
  int delta_out_of_range = 0;
  check(sqz_improvement_delta(e_initial, best_energy, e_target, &delta_value,
                              &delta_out_of_range),
        "improvement delta");

  ordered_json config{{"n", n},
                      {"depth", depth},
                      {"restarts", restarts},
                      {"seed", seed},
                      {"shots", shots > 0 ? ordered_json(shots) : ordered_json(nullptr)},
                      {"max_iterations", max_iterations},
                      {"calibration_iterations", calibration}};
  ordered_json doc = envelope("optimize", std::move(config), timestamp);
  doc["result"] = ordered_json{{"best_energy", best_energy},
                               {"best_gammas", best_gammas},
                               {"best_betas", best_betas},
                               {"evaluations", evaluations},
                               {"iterations", iterations},
                               {"delta", ordered_json{{"initial_energy", e_initial},
                                                      {"target_energy", e_target},
                                                      {"value", delta_value},
                                                      {"in_range", delta_out_of_range == 0}}}};
  write_output(dump12(doc), out_path);
  return 0;
}

int run_sweep(int n, const std::string& gammas_text, double beta_lo, double beta_hi, int steps,
              const std::string& out_path, const std::string& format, bool timestamp) {
  const std::vector<double> gammas = parse_double_list(gammas_text, "--gammas");
  std::vector<double> betas(steps), squeezing(steps);
  check(sqz_beta_sweep(n, gammas.data(), int(gammas.size()), beta_lo, beta_hi, steps,
                       betas.data(), squeezing.data()),
        "beta sweep");

  if (format == "csv") {
    std::string out = "beta,squeezing_db\n";
    char line[80];
    for (int j = 0; j < steps; ++j) {
      std::snprintf(line, sizeof(line), "%.12g,%.12g\n", betas[j], squeezing[j]);
      out += line;
    }
    write_output(out, out_path);
    return 0;
  }
  if (format != "json") fail_usage("sweep supports --format csv or json");
  ordered_json config{{"n", n}, {"gammas", gammas}, {"beta_min", beta_lo},
                      {"beta_max", beta_hi}, {"steps", steps}};
  ordered_json doc = envelope("sweep", std::move(config), timestamp);
  ordered_json rows = ordered_json::array();
  for (int j = 0; j < steps; ++j)
    rows.push_back(ordered_json{{"beta", betas[j]}, {"squeezing_db", squeezing[j]}});
  doc["rows"] = std::move(rows);
  write_output(dump12(doc), out_path);
  return 0;
}

int run_landscape(int n, double gamma_lo, double gamma_hi, int gamma_steps, double beta_lo,
                  double beta_hi, int beta_steps, const std::string& out_path,
                  const std::string& format, bool timestamp) {
  std::vector<double> energies(std::size_t(gamma_steps) * beta_steps);
  double min_energy = 0.0, argmin_gamma = 0.0, argmin_beta = 0.0, overlap = 0.0;
  check(sqz_landscape(n, gamma_lo, gamma_hi, gamma_steps, beta_lo, beta_hi, beta_steps,
                      energies.data(), &min_energy, &argmin_gamma, &argmin_beta, &overlap),
        "landscape");

  if (format == "csv") {
    std::string out = "gamma,beta,energy\n";
    char line[96];
    for (int i = 0; i < gamma_steps; ++i) {
      const double gamma = gamma_lo + (gamma_hi - gamma_lo) * i / gamma_steps;
      for (int j = 0; j < beta_steps; ++j) {
        const double beta = beta_lo + (beta_hi - beta_lo) * j / beta_steps;
        std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g\n", gamma, beta,
                      energies[std::size_t(i) * beta_steps + j]);
        out += line;
      }
    }
    write_output(out, out_path);
    return 0;
  }
  if (format != "json") fail_usage("landscape supports --format csv or json");
  ordered_json config{{"n", n},
                      {"gamma_min", gamma_lo},
                      {"gamma_max", gamma_hi},
                      {"gamma_steps", gamma_steps},
                      {"beta_min", beta_lo},
                      {"beta_max", beta_hi},
                      {"beta_steps", beta_steps}};
  ordered_json doc = envelope("landscape", std::move(config), timestamp);
  doc["result"] = ordered_json{{"min_energy", min_energy},
                               {"argmin_gamma", argmin_gamma},
                               {"argmin_beta", argmin_beta},
                               {"dicke_overlap", overlap}};
  write_output(dump12(doc), out_path);
  return 0;
}

int run_benchmark(double alpha, int n_min, int n_max, int n_step, double s_min, double s_max,
                  int s_steps, const std::string& out_path, const std::string& format,
                  bool timestamp) {
  if (n_min < 1 || n_max < n_min) fail_usage("--n-min/--n-max: bad range");
  if (n_step < 1) fail_usage("--n-step must be >= 1");
  if (s_steps < 1) fail_usage("--s-steps must be >= 1");
  std::vector<int> n_values;
  for (int n = n_min; n <= n_max; n += n_step) n_values.push_back(n);
  std::vector<double> s_values(s_steps);
  for (int j = 0; j < s_steps; ++j)
    s_values[j] = s_steps == 1 ? s_min : s_min + (s_max - s_min) * j / (s_steps - 1);

  std::vector<double> p(n_values.size() * s_values.size());
  std::vector<int> flags(n_values.size());
  check(sqz_benchmark_grid(n_values.data(), int(n_values.size()), s_values.data(),
                           int(s_values.size()), alpha, p.data(), flags.data()),
        "benchmark grid");

  if (format == "csv") {
    std::string out = "n,squeezing_db,alpha,p_alpha,is_discontinuity\n";
    char line[128];
    for (std::size_t i = 0; i < n_values.size(); ++i)
      for (std::size_t j = 0; j < s_values.size(); ++j) {
        std::snprintf(line, sizeof(line), "%d,%.12g,%.12g,%.12g,%d\n", n_values[i], s_values[j],
                      alpha, p[i * s_values.size() + j], flags[i]);
        out += line;
      }
    write_output(out, out_path);
    return 0;
  }
  if (format != "json") fail_usage("benchmark supports --format csv or json");
  ordered_json config{{"alpha", alpha}, {"n_min", n_min},  {"n_max", n_max},
                      {"n_step", n_step}, {"s_min", s_min}, {"s_max", s_max},
                      {"s_steps", s_steps}};
  ordered_json doc = envelope("benchmark", std::move(config), timestamp);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < n_values.size(); ++i)
    for (std::size_t j = 0; j < s_values.size(); ++j)
      rows.push_back(ordered_json{{"n", n_values[i]},
                                  {"squeezing_db", s_values[j]},
                                  {"alpha", alpha},
                                  {"p_alpha", p[i * s_values.size() + j]},
                                  {"is_discontinuity", flags[i] != 0}});
  doc["rows"] = std::move(rows);
  write_output(dump12(doc), out_path);
  return 0;
}

int run_discontinuities(double alpha, int n_max, const std::string& out_path,
                        const std::string& format, bool timestamp) {
  if (format != "json") fail_usage("discontinuities supports --format json only");
  std::vector<int> values(std::size_t(n_max / 2) + 1);
  int count = 0;
  check(sqz_discontinuities(alpha, n_max, values.data(), int(values.size()), &count),
        "discontinuities");
  values.resize(count);

  ordered_json config{{"alpha", alpha}, {"n_max", n_max}};
  ordered_json doc = envelope("discontinuities", std::move(config), timestamp);
  doc["result"] = ordered_json{{"alpha", alpha}, {"n_values", values}};
  write_output(dump12(doc), out_path);
  return 0;
}

int run_wigner(const StateSpec& spec, int theta_steps, int phi_steps,
               const std::string& out_path, const std::string& format, bool timestamp) {
  sqz_state* state = build_state(spec);
  std::vector<double> theta(theta_steps), weight(theta_steps), phi(phi_steps);
  std::vector<double> values(std::size_t(theta_steps) * phi_steps);
  const int rc = sqz_state_wigner(state, theta_steps, phi_steps, theta.data(), weight.data(),
                                  phi.data(), values.data());
  sqz_state_free(state);
  check(rc, "wigner");

  if (format == "csv") {
    std::string out = "theta,phi,value\n";
    char line[96];
    for (int i = 0; i < theta_steps; ++i)
      for (int j = 0; j < phi_steps; ++j) {
        std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g\n", theta[i], phi[j],
                      values[std::size_t(i) * phi_steps + j]);
        out += line;
      }
    write_output(out, out_path);
    return 0;
  }
  if (format != "json") fail_usage("wigner supports --format csv or json");
  ordered_json config{{"n", spec.n},     {"state", spec.kind},        {"k", spec.k},
                      {"gammas", spec.gammas}, {"betas", spec.betas},
                      {"theta_steps", theta_steps}, {"phi_steps", phi_steps}};
  ordered_json doc = envelope("wigner", std::move(config), timestamp);
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < theta_steps; ++i)
    for (int j = 0; j < phi_steps; ++j)
      rows.push_back(ordered_json{{"theta", theta[i]},
                                  {"phi", phi[j]},
                                  {"value", values[std::size_t(i) * phi_steps + j]}});
  doc["rows"] = std::move(rows);
  write_output(dump12(doc), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"squeezing-generating QAOA simulator and hardware benchmark"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sqz_version()));

  // shared options (registered per subcommand so help stays local); the
  // effective format defaults per command at parse time
  std::string out_path, format;
  bool timestamp = false;
  auto add_common = [&](CLI::App* cmd, const std::string& default_format) {
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--format", format, "output format (json|csv)")
        ->default_str(default_format);
    cmd->add_flag("--timestamp", timestamp, "embed a timestamp field (off for reproducibility)");
  };
  auto pick = [&format](const char* default_format) {
    return format.empty() ? std::string(default_format) : format;
  };

  int n = 0, depth = 1, restarts = 1, k = -1;
  int steps = 100, gamma_steps = 400, beta_steps = 400, theta_steps = 64, phi_steps = 128;
  int n_min = 4, n_max = 256, n_step = 2, s_steps = 21;
  int max_iterations = 500, calibration = 25;
  long shots = 0;
  std::uint64_t seed = 0;
  double alpha = 0.999, beta_lo = 0.0, beta_hi = kPi, gamma_lo = 0.0, gamma_hi = kTwoPi;
  double s_min = -10.0, s_max = 0.0;
  std::string gammas_text, betas_text, state_kind = "qaoa";

  auto* report = app.add_subcommand("report", "metrology report of a QAOA trial state");
  report->add_option("--n", n, "qubit count")->required();
  report->add_option("--gammas", gammas_text, "comma-separated cost angles (radians)");
  report->add_option("--betas", betas_text, "comma-separated mixer angles (radians)");
  add_common(report, "json");

  auto* optimize = app.add_subcommand("optimize", "multistart SPSA over the energy objective");
  optimize->add_option("--n", n, "qubit count")->required();
  optimize->add_option("--depth", depth, "QAOA depth p")->required();
  optimize->add_option("--restarts", restarts, "random restarts")->check(CLI::PositiveNumber);
  optimize->add_option("--seed", seed, "seed for restarts and shot noise");
  optimize->add_option("--shots", shots, "shots per energy evaluation (0 = exact; bare flag = 32768)")
      ->expected(0, 1)
      ->default_str("32768");
  optimize->add_option("--max-iterations", max_iterations, "SPSA iterations per restart");
  optimize->add_option("--calibration-iterations", calibration, "SPSA calibration probes");
  add_common(optimize, "json");

  auto* sweep = app.add_subcommand("sweep", "squeezing vs mixer angle after a cost schedule");
  sweep->add_option("--n", n, "qubit count")->required();
  sweep->add_option("--gammas", gammas_text, "comma-separated cost angles")->required();
  sweep->add_option("--beta-min", beta_lo, "sweep start");
  sweep->add_option("--beta-max", beta_hi, "sweep end (inclusive)");
  sweep->add_option("--steps", steps, "number of sweep points")->check(CLI::Range(2, 1 << 24));
  add_common(sweep, "csv");

  auto* landscape = app.add_subcommand("landscape", "depth-one energy grid");
  landscape->add_option("--n", n, "qubit count")->required();
  landscape->add_option("--gamma-min", gamma_lo, "gamma range start");
  landscape->add_option("--gamma-max", gamma_hi, "gamma range end (exclusive)");
  landscape->add_option("--gamma-steps", gamma_steps, "grid columns");
  landscape->add_option("--beta-min", beta_lo, "beta range start");
  landscape->add_option("--beta-max", beta_hi, "beta range end (exclusive)");
  landscape->add_option("--beta-steps", beta_steps, "grid rows");
  add_common(landscape, "csv");

  auto* benchmark = app.add_subcommand("benchmark", "Gaussian-model P_alpha grid");
  benchmark->add_option("--alpha", alpha, "approximation-ratio fraction in (0,1)");
  benchmark->add_option("--n-min", n_min, "first qubit count");
  benchmark->add_option("--n-max", n_max, "last qubit count");
  benchmark->add_option("--n-step", n_step, "qubit count stride");
  benchmark->add_option("--s-min", s_min, "most negative squeezing (dB)");
  benchmark->add_option("--s-max", s_max, "least negative squeezing (dB)");
  benchmark->add_option("--s-steps", s_steps, "squeezing grid points");
  add_common(benchmark, "csv");

  auto* disc = app.add_subcommand("discontinuities", "window jumps of the benchmark");
  disc->add_option("--alpha", alpha, "approximation-ratio fraction in (0,1)");
  disc->add_option("--n-max", n_max, "scan even n up to this value");
  add_common(disc, "json");

  auto* wigner = app.add_subcommand("wigner", "Wigner quasi-probability grid of a state");
  wigner->add_option("--n", n, "qubit count")->required();
  wigner->add_option("--state", state_kind, "qaoa | coherent | dicke");
  wigner->add_option("--k", k, "Dicke level for --state dicke");
  wigner->add_option("--gammas", gammas_text, "cost schedule for --state qaoa");
  wigner->add_option("--betas", betas_text, "mixer schedule for --state qaoa");
  wigner->add_option("--theta-steps", theta_steps, "polar resolution");
  wigner->add_option("--phi-steps", phi_steps, "azimuthal resolution");
  add_common(wigner, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (report->parsed())
      return run_report(n, gammas_text, betas_text, out_path, pick("json"), timestamp);
    if (optimize->parsed())
      return run_optimize(n, depth, restarts, seed, shots, max_iterations, calibration,
                          out_path, pick("json"), timestamp);
    if (sweep->parsed())
      return run_sweep(n, gammas_text, beta_lo, beta_hi, steps, out_path, pick("csv"),
                       timestamp);
    if (landscape->parsed())
      return run_landscape(n, gamma_lo, gamma_hi, gamma_steps, beta_lo, beta_hi, beta_steps,
                           out_path, pick("csv"), timestamp);
    if (benchmark->parsed())
      return run_benchmark(alpha, n_min, n_max, n_step, s_min, s_max, s_steps, out_path,
                           pick("csv"), timestamp);
    if (disc->parsed())
      return run_discontinuities(alpha, n_max, out_path, pick("json"), timestamp);
    if (wigner->parsed()) {
      StateSpec spec;
      spec.n = n;
      spec.kind = state_kind;
      spec.k = k;
      if (!gammas_text.empty()) spec.gammas = parse_double_list(gammas_text, "--gammas");
      if (!betas_text.empty()) spec.betas = parse_double_list(betas_text, "--betas");
      return run_wigner(spec, theta_steps, phi_steps, out_path, pick("csv"), timestamp);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
