#include "tunnelsplit/report.hpp"

#include <cmath>
#include <cstdio>

#include "tunnelsplit/error.hpp"

namespace tunnelsplit {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

void CsvWriter::header(const std::vector<std::string>& names) {
  columns_ = names.size();
  for (std::size_t i = 0; i < names.size(); ++i) out_ << (i ? "," : "") << names[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<CsvCell>& cells) {
  if (columns_ && cells.size() != columns_)
    throw Error(ErrorKind::numerical, "csv row width does not match the header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>)
            out_ << format_double(v);
          else if constexpr (std::is_same_v<T, long long>)
            out_ << v;
          else if (v.find_first_of(",\"\n") == std::string::npos)
            out_ << v;
          else {
            out_ << '"';
            for (char c : v) out_ << (c == '"' ? "\"\"" : std::string(1, c));
            out_ << '"';
          }
        },
        cells[i]);
  }
  out_ << '\n';
}

json to_json(const WellParameters& p) {
  return {{"a", p.a},
          {"b", p.b},
          {"n", p.n},
          {"epsilon", p.epsilon},
          {"barrier_height", p.barrier_height},
          {"oscillator_length", p.oscillator_length()},
          {"units", {{"hbar", p.units.hbar}, {"mass", p.units.mass}, {"omega", p.units.omega}}}};
}

json to_json(const SplittingResult& r) {
  json j = {{"method", to_string(r.method)},
            {"l", r.l},
            {"n", r.n},
            {"epsilon", r.epsilon},
            {"energy", r.energy},
            {"Delta_l", r.Delta_l},
            {"log_Delta_l_over_hbar_omega", r.log_Delta_l},
            {"Delta_l_eps", r.Delta_l_eps},
            {"delta_l", r.delta_l},
            {"g_l", r.g_l},
            {"g_l_plus_n", r.g_ln},
            {"formal", r.formal}};
  if (r.barrier_action) j["barrier_action"] = *r.barrier_action;
  if (r.turning_points)
    j["turning_points"] = {{"left", r.turning_points->left},
                           {"right", r.turning_points->right},
                           {"level_nu", r.turning_points->level_nu}};
  if (r.method == SplittingMethod::turning_point_form)
    j["integration_limits"] = {r.left_root, r.right_root};
  if (r.actions)
    j["actions"] = {{"I_a", r.actions->I_a},
                    {"I_b", r.actions->I_b},
                    {"gamma_a", r.actions->gamma_a},
                    {"gamma_b", r.actions->gamma_b}};
  return j;
}

json to_json(const VdParameters& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"n", p.n}, {"epsilon", p.epsilon}};
}

json to_json(const VdSplitting& s) {
  return {{"method", "quadratic_delta"},
          {"l", s.l},
          {"R_l", s.R_l},
          {"L_l", s.L_l},
          {"log_R_l", s.log_R_l},
          {"log_L_l", s.log_L_l},
          {"r", s.r},
          {"delta_roots", {s.delta_minus, s.delta_plus}},
          {"splitting", s.splitting},
          {"log_splitting_over_hbar_omega", s.log_splitting}};
}

json to_json(const PcfValue& v) {
  return {{"value", v.value},
          {"log_abs", v.log_abs},
          {"sign", v.sign},
          {"regime", to_string(v.regime)},
          {"est_error", v.est_error}};
}

json to_json(const ScanPoint& p) {
  json j = {{"parameter", p.parameter}, {"ok", p.ok}, {"off_resonance", p.off_resonance}};
  if (p.ok) {
    j["n"] = p.n;
    j["epsilon"] = p.epsilon;
    j["Delta_l"] = p.Delta_l;
    j["Delta_l_eps"] = p.Delta_l_eps;
    j["max_transfer"] = p.max_transfer;
  } else {
    j["max_transfer"] = p.off_resonance ? json(0.0) : json(nullptr);
    j["error"] = p.error;
  }
  return j;
}

json to_json(const RichardsonResult& r) {
  return {{"coarse", r.coarse},
          {"medium", r.medium},
          {"fine", r.fine},
          {"ratio", r.ratio},
          {"extrapolated", r.extrapolated},
          {"error_estimate", r.error_estimate}};
}

json to_json(const LocalizedStates& s) {
  return {{"l", s.l},
          {"sigma", s.sigma},
          {"right_mass", s.right_mass},
          {"left_mass", s.left_mass},
          {"overlap", s.overlap},
          {"psi_R0", s.psi_R0},
          {"dpsi_R0", s.dpsi_R0},
          {"psi_L0", s.psi_L0},
          {"dpsi_L0", s.dpsi_L0}};
}

json to_json(const ForbiddenAmplitudes& a) {
  return {{"N_R", a.N_R},
          {"N_L", a.N_L},
          {"spread_R", a.spread_R},
          {"spread_L", a.spread_L},
          {"splitting", a.splitting},
          {"fit_interval", {a.x_from, a.x_to}}};
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

std::vector<std::string> splitting_csv_header() {
  return {"method", "l", "n", "epsilon", "Delta_l", "log_Delta_l_over_hbar_omega", "Delta_l_eps",
          "delta_l", "g_l", "g_l_plus_n", "barrier_action", "I_a", "I_b", "gamma_a", "gamma_b",
          "formal"};
}

std::vector<CsvCell> splitting_csv_row(const SplittingResult& r) {
  const double nan = std::nan("");
  return {std::string(to_string(r.method)),
          static_cast<long long>(r.l),
          static_cast<long long>(r.n),
          r.epsilon,
          r.Delta_l,
          r.log_Delta_l,
          r.Delta_l_eps,
          r.delta_l,
          r.g_l,
          r.g_ln,
          r.barrier_action.value_or(nan),
          r.actions ? r.actions->I_a : nan,
          r.actions ? r.actions->I_b : nan,
          r.actions ? r.actions->gamma_a : nan,
          r.actions ? r.actions->gamma_b : nan,
          static_cast<long long>(r.formal)};
}

}  // namespace tunnelsplit
