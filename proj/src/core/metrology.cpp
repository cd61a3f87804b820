#include "core/metrology.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace sqz {

double squeezing_db(double var_z, int n) {
  if (n < 1) throw std::invalid_argument("squeezing_db: n must be >= 1");
  if (var_z < 0.0) throw std::invalid_argument("squeezing_db: negative variance");
  if (var_z == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(var_z / (0.25 * n));
}

double qfi_pure(const SymmetricState& state, Axis axis) {
  const CollectiveMoments mo = collective_moments(state);
  switch (axis) {
    case Axis::x: return 4.0 * mo.var_x;
    case Axis::y: return 4.0 * mo.var_y;
    case Axis::z: return 4.0 * mo.var_z;
  }
  throw std::invalid_argument("qfi_pure: bad axis");
}

E1Result witness_e1(const SymmetricState& state) {
  const CollectiveMoments mo = collective_moments(state);
  const double margin = 0.25 * state.n - mo.second_z;
  return {margin > 0.0, margin};
}

int qfi_entanglement_depth(double fq, int n) {
  if (n < 1) throw std::invalid_argument("qfi_entanglement_depth: n must be >= 1");
  if (fq < 0.0) throw std::invalid_argument("qfi_entanglement_depth: negative F_Q");
  int depth = 1;
  for (int k = 1; k <= n; ++k) {
    const int s = n / k;
    const int r = n - s * k;
    if (fq > double(s) * k * k + double(r) * r) depth = k + 1;
  }
  return std::min(depth, n);
}

int gaussian_depth_estimate(double squeezing_db_value, int n) {
  if (!std::isfinite(squeezing_db_value))
    throw std::invalid_argument("gaussian_depth_estimate: S must be finite");
  const double fq_estimate = double(n) * std::pow(10.0, -squeezing_db_value / 10.0);
  return qfi_entanglement_depth(fq_estimate, n);
}

MetrologyReport metrology_report(const SymmetricState& state) {
  const CollectiveMoments mo = collective_moments(state);
  MetrologyReport rep;
  rep.n = state.n;
  rep.var_z = std::max(mo.var_z, 0.0);  // clamp the -1e-10 invariant slack
  rep.exp_z = mo.mean_z;
  rep.exp_z2 = mo.second_z;
  rep.squeezing_db = squeezing_db(rep.var_z, state.n);
  rep.qfi_x = 4.0 * mo.var_x;
  rep.qfi_y = 4.0 * mo.var_y;
  const E1Result e1 = witness_e1(state);
  rep.e1_entangled = e1.entangled;
  rep.e1_margin = e1.margin;
  rep.e2_depth = qfi_entanglement_depth(std::max(rep.qfi_x, rep.qfi_y), state.n);
  rep.e3_depth_estimate = std::isfinite(rep.squeezing_db)
                              ? gaussian_depth_estimate(rep.squeezing_db, state.n)
                              : state.n;  // var_z = 0 saturates the estimate
  rep.dicke_overlap = state.n >= 2 ? state_overlap(state, maxcut_target_state(state.n))
                                   : std::norm(state.amps[0]);
  return rep;
}

std::string report_to_json(const MetrologyReport& rep) {
  nlohmann::ordered_json j;
  j["n"] = rep.n;
  if (std::isinf(rep.squeezing_db) && rep.squeezing_db < 0)
    j["squeezing_db"] = "neg_inf";
  else
    j["squeezing_db"] = rep.squeezing_db;
  j["var_z"] = rep.var_z;
  j["exp_z"] = rep.exp_z;
  j["exp_z2"] = rep.exp_z2;
  j["qfi_x"] = rep.qfi_x;
  j["qfi_y"] = rep.qfi_y;
  j["e1_entangled"] = rep.e1_entangled;
  j["e1_margin"] = rep.e1_margin;
  j["e2_depth"] = rep.e2_depth;
  j["e3_depth_estimate"] = rep.e3_depth_estimate;
  j["dicke_overlap"] = rep.dicke_overlap;
  return j.dump();
}

MetrologyReport report_from_json(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  MetrologyReport rep;
  rep.n = j.at("n").get<int>();
  const auto& s = j.at("squeezing_db");
  rep.squeezing_db = s.is_string() ? -std::numeric_limits<double>::infinity()
                                   : s.get<double>();
  if (s.is_string() && s.get<std::string>() != "neg_inf")
    throw std::invalid_argument("unknown squeezing_db sentinel: " + s.get<std::string>());
  rep.var_z = j.at("var_z").get<double>();
  rep.exp_z = j.at("exp_z").get<double>();
  rep.exp_z2 = j.at("exp_z2").get<double>();
  rep.qfi_x = j.at("qfi_x").get<double>();
  rep.qfi_y = j.at("qfi_y").get<double>();
  rep.e1_entangled = j.at("e1_entangled").get<bool>();
  rep.e1_margin = j.at("e1_margin").get<double>();
  rep.e2_depth = j.at("e2_depth").get<int>();
  rep.e3_depth_estimate = j.at("e3_depth_estimate").get<int>();
  rep.dicke_overlap = j.at("dicke_overlap").get<double>();
  return rep;
}

}  // namespace sqz
