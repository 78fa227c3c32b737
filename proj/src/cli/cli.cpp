#include "tunnelsplit/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tunnelsplit/config.hpp"
#include "tunnelsplit/dynamics.hpp"
#include "tunnelsplit/error.hpp"
#include "tunnelsplit/exact_vd.hpp"
#include "tunnelsplit/oracle.hpp"
#include "tunnelsplit/pcf.hpp"
#include "tunnelsplit/report.hpp"
#include "tunnelsplit/wkb.hpp"

namespace tunnelsplit {
namespace {

using nlohmann::json;

struct Range {
  double from = 0.0;
  double to = 0.0;
  int points = 0;
};

// "a:b" or "a:b:points".
Range parse_range(const std::string& text, int default_points) {
  Range r;
  r.points = default_points;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || !std::isfinite(v))
      throw Error(ErrorKind::invalid_input, "bad number '" + s + "' in range '" + text + "'");
    return v;
  };
  if (parts.size() != 2 && parts.size() != 3)
    throw Error(ErrorKind::invalid_input, "range must be FROM:TO or FROM:TO:POINTS, got '" + text + "'");
  r.from = num(parts[0]);
  r.to = num(parts[1]);
  if (parts.size() == 3) {
    const double p = num(parts[2]);
    if (p != std::floor(p)) throw Error(ErrorKind::invalid_input, "range point count must be an integer");
    r.points = static_cast<int>(p);
  }
  if (r.points < 2) throw Error(ErrorKind::invalid_input, "a range needs at least 2 points");
  if (!(r.to > r.from)) throw Error(ErrorKind::invalid_input, "range end must exceed its start");
  return r;
}

std::vector<double> linspace(const Range& r) {
  std::vector<double> v(r.points);
  for (int i = 0; i < r.points; ++i) v[i] = r.from + (r.to - r.from) * i / (r.points - 1);
  return v;
}

double relative(double x, double ref) { return (x - ref) / ref; }

// Settings shared by config-driven commands.
struct Common {
  std::string config_path;
  std::string format;
  std::string output;
};

struct Emit {
  OutputFormat format;
  std::optional<std::string> path;
};

Emit resolve(const Common& c, const RunConfig* cfg, OutputFormat fallback) {
  Emit e{fallback, std::nullopt};
  if (cfg && cfg->format) e.format = *cfg->format;
  if (!c.format.empty()) e.format = parse_format(c.format);
  if (cfg && cfg->output_path) e.path = cfg->output_path;
  if (!c.output.empty()) e.path = c.output;
  return e;
}

void write(const Emit& e, const std::string& text, std::ostream& out) {
  if (!e.path) {
    out << text;
    return;
  }
  std::ofstream f(*e.path, std::ios::binary);
  if (!f) throw Error(ErrorKind::configuration, "cannot write output file '" + *e.path + "'");
  f << text;
}

void add_common(CLI::App* cmd, Common& c, bool needs_config = true) {
  auto* opt = cmd->add_option("--config", c.config_path, "JSON run configuration");
  if (needs_config) opt->required();
  cmd->add_option("--format", c.format, "json or csv (overrides output.format)");
  cmd->add_option("--output", c.output, "write here instead of stdout (overrides output.path)");
}

json header(const std::string& command, const RunConfig& cfg) {
  return {{"command", command}, {"potential", to_json(cfg.potential)}, {"units", to_json(cfg.units)}};
}

// ---- split ----

struct SplitArgs {
  Common common;
  int level = 0;
  std::string method = "both";
  bool force_formal = false;
};

std::string cmd_split(const SplitArgs& a, Emit& emit) {
  const RunConfig cfg = load_config(a.common.config_path);
  emit = resolve(a.common, &cfg, OutputFormat::json);
  if (a.method != "turning" && a.method != "regularized" && a.method != "both")
    throw Error(ErrorKind::invalid_input, "method must be turning, regularized or both");
  const PotentialModel model = build_model(cfg);
  const WellParameters params = extract_well_parameters(model);
  SplittingOptions so;
  so.allow_non_smooth = a.force_formal;
  std::vector<SplittingResult> results;
  if (a.method != "regularized") results.push_back(splitting_turning_form(model, a.level, so));
  if (a.method != "turning") results.push_back(splitting_regularized_form(model, a.level, so));

  std::ostringstream os;
  if (emit.format == OutputFormat::csv) {
    CsvWriter w(os);
    w.header(splitting_csv_header());
    for (const auto& r : results) w.row(splitting_csv_row(r));
    return os.str();
  }
  json j = header("split", cfg);
  j["well"] = to_json(params);
  j["mirrored"] = model.mirrored();
  for (const auto& r : results) j["results"].push_back(to_json(r));
  if (results.size() == 2)
    j["relative_difference"] = {
        {"definition", "(turning_point_form - regularized_form) / regularized_form"},
        {"value", std::expm1(results[0].log_Delta_l - results[1].log_Delta_l)}};
  return j.dump(2) + "\n";
}

// ---- exact-vd ----

struct VdArgs {
  Common common;
  int level = 0;
  std::string eps_sweep;
};

std::string cmd_exact_vd(const VdArgs& a, Emit& emit) {
  const RunConfig cfg = load_config(a.common.config_path);
  if (cfg.potential.kind != PotentialKind::piecewise_quadratic)
    throw Error(ErrorKind::invalid_input, "exact-vd needs a piecewise_quadratic potential");
  const PotentialModel model = build_model(cfg);
  const VdParameters p = VdParameters::from_model(model);
  const double q = p.units.quantum();

  if (!a.eps_sweep.empty()) {
    emit = resolve(a.common, &cfg, OutputFormat::csv);
    const Range r = parse_range(a.eps_sweep, 41);
    std::vector<json> rows;
    std::ostringstream os;
    CsvWriter w(os);
    if (emit.format == OutputFormat::csv)
      w.header({"epsilon", "beta", "R_l", "L_l", "delta_minus", "delta_plus", "splitting_formula",
                "splitting_roots", "mirrored"});
    for (double eps : linspace(r)) {
      // Negative detuning at zero offset lowers the left well: evaluate the mirror image.
      const bool mirrored = p.n == 0 && eps < 0;
      const VdParameters pe =
          VdParameters::from_alpha(p.alpha, p.n, mirrored ? -eps : eps, p.units);
      const VdSplitting s = vd_quadratic_delta(pe, a.level);
      double roots = std::nan("");
      try {
        roots = vd_eigenlevels(pe, a.level).gap() * q;
      } catch (const Error&) {
      }
      if (emit.format == OutputFormat::csv) {
        w.row({eps, pe.beta, s.R_l, s.L_l, s.delta_minus, s.delta_plus, s.splitting, roots,
               static_cast<long long>(mirrored)});
      } else {
        json row = to_json(s);
        row["epsilon"] = eps;
        row["beta"] = pe.beta;
        row["splitting_roots"] = std::isnan(roots) ? json(nullptr) : json(roots);
        row["mirrored"] = mirrored;
        rows.push_back(row);
      }
    }
    if (emit.format == OutputFormat::csv) return os.str();
    json j = header("exact-vd", cfg);
    j["sweep"] = rows;
    return j.dump(2) + "\n";
  }

  emit = resolve(a.common, &cfg, OutputFormat::json);
  const VdLevels lv = vd_eigenlevels(p, a.level);
  const VdSplitting s = vd_quadratic_delta(p, a.level);
  const double root_splitting = lv.gap() * q;
  if (emit.format == OutputFormat::csv) {
    std::ostringstream os;
    CsvWriter w(os);
    w.header({"l", "alpha", "beta", "n", "epsilon", "nu_minus", "nu_plus", "splitting_roots", "R_l",
              "L_l", "r", "delta_minus", "delta_plus", "splitting_formula"});
    w.row({static_cast<long long>(a.level), p.alpha, p.beta, static_cast<long long>(p.n), p.epsilon,
           lv.nu_minus, lv.nu_plus, root_splitting, s.R_l, s.L_l, s.r, s.delta_minus, s.delta_plus,
           s.splitting});
    return os.str();
  }
  json j = header("exact-vd", cfg);
  j["parameters"] = to_json(p);
  j["roots"] = {{"method", "matching_condition_bisection"},
                {"nu_minus", lv.nu_minus},
                {"nu_plus", lv.nu_plus},
                {"energies", {(lv.nu_minus + p.n + p.epsilon + 0.5) * q, (lv.nu_plus + p.n + p.epsilon + 0.5) * q}},
                {"splitting", root_splitting}};
  j["formula"] = to_json(s);
  j["relative_difference"] = {{"definition", "(formula - roots) / roots"},
                              {"value", relative(s.splitting, root_splitting)}};
  if (p.n == 0 && p.epsilon == 0.0 && p.alpha == p.beta) {
    const double twice_r = 2.0 * q * s.R_l;
    j["symmetric_reference"] = {{"two_hbar_omega_R_l", twice_r},
                                {"roots_relative_difference", relative(root_splitting, twice_r)}};
  }
  return j.dump(2) + "\n";
}

// ---- oracle ----

struct OracleArgs {
  Common common;
  int levels = 1;
  int grid = kDefaultGridSize;
  std::string wavefunctions;
  bool no_richardson = false;
};

std::string cmd_oracle(const OracleArgs& a, Emit& emit) {
  const RunConfig cfg = load_config(a.common.config_path);
  emit = resolve(a.common, &cfg, OutputFormat::json);
  if (a.levels < 1) throw Error(ErrorKind::invalid_input, "--levels must be at least 1");
  const PotentialModel model = build_model(cfg);
  const WellParameters params = extract_well_parameters(model);
  const double q = params.units.quantum();
  const GridDomain domain = default_domain(model, a.grid);
  const GridHamiltonian h = build_grid_hamiltonian(model, domain, a.grid);
  const double top = (a.levels - 1 + params.n + 0.75 + 0.5 * params.epsilon) * q;
  const int count = std::max(2, count_below(h, top));
  SpectrumResult spectrum = eigen_lowest(h, count, true);

  struct Level {
    int l = 0;
    bool ok = false;
    std::string error;
    std::pair<int, int> idx;
    double gap = 0.0;
    std::optional<RichardsonResult> rich;
  };
  std::vector<Level> levels;
  for (int l = 0; l < a.levels; ++l) {
    Level lv;
    lv.l = l;
    try {
      lv.idx = pair_doublet(spectrum, params, l);
      lv.gap = spectrum.eigenvalues[lv.idx.second] - spectrum.eigenvalues[lv.idx.first];
      lv.ok = true;
      if (!a.no_richardson) {
        lv.rich = richardson(
            [&](int N) {
              OracleOptions o;
              o.N = N;
              return oracle_splitting(model, l, o).gap;
            },
            a.grid);
      }
    } catch (const Error& e) {
      lv.error = e.what();
    }
    levels.push_back(lv);
  }

  if (!a.wavefunctions.empty()) {
    std::ofstream f(a.wavefunctions, std::ios::binary);
    if (!f) throw Error(ErrorKind::configuration, "cannot write '" + a.wavefunctions + "'");
    CsvWriter w(f);
    std::vector<std::string> names{"x"};
    for (int k = 0; k < count; ++k) names.push_back("psi_" + std::to_string(k));
    w.header(names);
    for (int i = 0; i < spectrum.N; ++i) {
      std::vector<CsvCell> row{spectrum.x(i)};
      for (int k = 0; k < count; ++k) row.push_back(spectrum.eigenvectors[k][i]);
      w.row(row);
    }
  }

  std::ostringstream os;
  if (emit.format == OutputFormat::csv) {
    CsvWriter w(os);
    w.header({"l", "index_lower", "index_upper", "E_lower", "E_upper", "gap", "richardson_error",
              "status"});
    for (const auto& lv : levels) {
      if (!lv.ok) {
        w.row({static_cast<long long>(lv.l), -1LL, -1LL, std::nan(""), std::nan(""), std::nan(""),
               std::nan(""), lv.error});
        continue;
      }
      w.row({static_cast<long long>(lv.l), static_cast<long long>(lv.idx.first),
             static_cast<long long>(lv.idx.second), spectrum.eigenvalues[lv.idx.first],
             spectrum.eigenvalues[lv.idx.second], lv.gap,
             lv.rich ? lv.rich->error_estimate : std::nan(""), std::string("ok")});
    }
    return os.str();
  }
  json j = header("oracle", cfg);
  j["well"] = to_json(params);
  j["grid"] = {{"N", spectrum.N}, {"x_min", domain.x_min}, {"x_max", domain.x_max}, {"dx", spectrum.dx}};
  j["eigenvalues"] = spectrum.eigenvalues;
  j["orthonormality_residual"] = spectrum.orthonormality_residual();
  for (const auto& lv : levels) {
    json e = {{"l", lv.l}};
    if (lv.ok) {
      e["method"] = "grid_diagonalization";
      e["indices"] = {lv.idx.first, lv.idx.second};
      e["energies"] = {spectrum.eigenvalues[lv.idx.first], spectrum.eigenvalues[lv.idx.second]};
      e["gap"] = lv.gap;
      if (lv.rich) e["richardson"] = to_json(*lv.rich);
    } else {
      e["error"] = lv.error;
    }
    j["levels"].push_back(e);
  }
  if (!a.wavefunctions.empty()) j["wavefunctions"] = a.wavefunctions;
  return j.dump(2) + "\n";
}

// ---- scan ----

struct ScanArgs {
  Common common;
  std::string tilt_range;
  std::string eps_range;
  int points = 101;
  int level = 0;
  int jobs = 1;
  std::string method = "regularized";
};

std::string cmd_scan(const ScanArgs& a, Emit& emit) {
  const RunConfig cfg = load_config(a.common.config_path);
  emit = resolve(a.common, &cfg, OutputFormat::csv);
  if (a.tilt_range.empty() == a.eps_range.empty())
    throw Error(ErrorKind::invalid_input, "give exactly one of --tilt-range or --eps-range");
  const ScanVariable var = a.tilt_range.empty() ? ScanVariable::epsilon : ScanVariable::tilt;
  const Range r = parse_range(var == ScanVariable::tilt ? a.tilt_range : a.eps_range, a.points);
  ScanOptions so;
  so.jobs = a.jobs;
  if (a.method == "turning")
    so.method = SplittingMethod::turning_point_form;
  else if (a.method != "regularized")
    throw Error(ErrorKind::invalid_input, "method must be turning or regularized");
  const PotentialModel model = build_model(cfg);
  const std::vector<double> grid = linspace(r);
  const std::vector<ScanPoint> pts = resonance_scan(model, var, grid, a.level, so);

  std::ostringstream os;
  if (emit.format == OutputFormat::csv) {
    CsvWriter w(os);
    w.header({var == ScanVariable::tilt ? "s" : "epsilon", "Delta_l", "Delta_l_eps", "max_transfer",
              "n", "detuning_epsilon", "status"});
    for (const auto& p : pts) {
      const std::string status = p.ok ? "ok" : (p.off_resonance ? "off_resonance" : "error");
      w.row({p.parameter, p.ok ? p.Delta_l : std::nan(""), p.ok ? p.Delta_l_eps : std::nan(""),
             p.max_transfer, static_cast<long long>(p.ok ? p.n : -1), p.ok ? p.epsilon : std::nan(""),
             status});
    }
    return os.str();
  }
  json j = header("scan", cfg);
  j["variable"] = to_string(var);
  j["level"] = a.level;
  j["method"] = to_string(so.method);
  std::vector<double> y;
  for (const auto& p : pts) {
    j["points"].push_back(to_json(p));
    y.push_back(std::isnan(p.max_transfer) ? 0.0 : p.max_transfer);
  }
  j["peaks"] = json::array();
  for (int i : curve_peaks(y, 0.5)) j["peaks"].push_back({{"index", i}, {"position", refine_peak(grid, y, i)}, {"max_transfer", y[i]}});
  try {
    j["fwhm"] = curve_fwhm(grid, y);
  } catch (const Error&) {
    j["fwhm"] = nullptr;
  }
  return j.dump(2) + "\n";
}

// ---- dynamics ----

struct DynArgs {
  Common common;
  double Delta = 0.0;
  double epsilon = 0.0;
  double t_max = 0.0;
  int steps = 200;
  std::string initial = "right";
  double hbar = 1.0;
  double omega = 1.0;
  double E0 = 0.0;
};

std::string cmd_dynamics(const DynArgs& a, Emit& emit) {
  emit = resolve(a.common, nullptr, OutputFormat::csv);
  Units u;
  u.hbar = a.hbar;
  u.omega = a.omega;
  u.validate();
  if (a.initial != "right" && a.initial != "left")
    throw Error(ErrorKind::invalid_input, "--initial must be right or left");
  TwoStateSystem sys{a.E0, a.Delta, u.quantum() * a.epsilon};
  const TwoStateTrajectory tr =
      evolve_two_state(sys, a.t_max, a.steps, a.initial == "right" ? Well::right : Well::left, u);
  std::ostringstream os;
  if (emit.format == OutputFormat::csv) {
    CsvWriter w(os);
    w.header({"t", "p_right", "p_left"});
    for (std::size_t i = 0; i < tr.times.size(); ++i) w.row({tr.times[i], tr.p_right[i], tr.p_left[i]});
    return os.str();
  }
  json j = {{"command", "dynamics"},
            {"Delta", a.Delta},
            {"epsilon", a.epsilon},
            {"detuning_energy", sys.detuning},
            {"shuttle_frequency", tr.shuttle_frequency},
            {"t", tr.times},
            {"p_right", tr.p_right},
            {"p_left", tr.p_left}};
  if (a.Delta > 0 || sys.detuning != 0) j["max_transfer"] = max_transfer_probability(a.Delta, sys.detuning);
  return j.dump(2) + "\n";
}

// ---- compare ----

struct CompareArgs {
  Common common;
  int level = 0;
  int grid = kDefaultGridSize;
};

std::string cmd_compare(const CompareArgs& a, Emit& emit) {
  const RunConfig cfg = load_config(a.common.config_path);
  emit = resolve(a.common, &cfg, OutputFormat::json);
  const PotentialModel model = build_model(cfg);
  const WellParameters params = extract_well_parameters(model);
  const double q = params.units.quantum();

  struct Row {
    std::string method;
    std::optional<double> value;
    std::string warning;
  };
  std::vector<Row> rows;
  auto attempt = [&](const std::string& name, const std::function<double()>& f) {
    Row r{name, std::nullopt, ""};
    try {
      r.value = f();
    } catch (const Error& e) {
      if (e.is_validation()) throw;
      r.warning = std::string(to_string(e.kind())) + ": " + e.what();
    }
    rows.push_back(r);
  };

  const bool piecewise = model.kind() == PotentialKind::piecewise_quadratic;
  if (!piecewise)
    attempt("turning_point_form", [&] { return splitting_turning_form(model, a.level).Delta_l; });
  attempt("regularized_form", [&] {
    SplittingOptions so;
    so.allow_non_smooth = true;
    return splitting_regularized_form(model, a.level, so).Delta_l;
  });
  if (piecewise) {
    const VdParameters p = VdParameters::from_model(model);
    attempt("exact_roots", [&] { return vd_eigenlevels(p, a.level).gap() * q; });
    attempt("quadratic_delta", [&] { return vd_quadratic_delta(p, a.level).splitting; });
  }
  std::optional<OracleSplitting> oracle;
  attempt("oracle_gap", [&] {
    OracleOptions o;
    o.N = a.grid;
    oracle = oracle_splitting(model, a.level, o);
    return oracle->gap;
  });
  attempt("wronskian", [&] {
    if (!oracle) throw Error(ErrorKind::pairing, "no oracle doublet");
    return wronskian_splitting(localized_states(oracle->spectrum, a.level), params.units);
  });

  std::vector<std::string> warnings;
  if (oracle) {
    // Level shifts of order dx^2 differ between the two wells when n > 0 and
    // can detune the doublet; a finer grid exposes that.
    try {
      OracleOptions o;
      o.N = 2 * a.grid - 1;
      const double finer = oracle_splitting(model, a.level, o).gap;
      const double change = relative(oracle->gap, finer);
      if (std::fabs(change) > 1e-2) {
        std::ostringstream os;
        os << "discretization: oracle gap changes by " << change
           << " relative between N = " << a.grid << " and N = " << o.N << "; increase --grid";
        warnings.push_back(os.str());
      }
    } catch (const Error& e) {
      warnings.push_back(std::string("discretization check failed: ") + e.what());
    }
  }
  const double separation = (params.a + params.b) / params.oscillator_length();
  if (separation < 10.0) {
    std::ostringstream os;
    os << "regime: well separation " << separation
       << " oscillator lengths is below 10; the semiclassical forms are not expected to agree";
    warnings.push_back(os.str());
  }
  try {
    (void)turning_points(params, a.level);
  } catch (const Error& e) {
    warnings.push_back(std::string("regime: ") + e.what());
  }
  for (const auto& r : rows)
    if (!r.warning.empty()) warnings.push_back(r.method + ": " + r.warning);

  const Row* ref = nullptr;
  for (const auto& r : rows)
    if (r.method == "oracle_gap" && r.value) ref = &r;

  std::ostringstream os;
  if (emit.format == OutputFormat::csv) {
    CsvWriter w(os);
    w.header({"method", "Delta_l", "relative_to_oracle", "warning"});
    for (const auto& r : rows)
      w.row({r.method, r.value.value_or(std::nan("")),
             (r.value && ref) ? relative(*r.value, *ref->value) : std::nan(""), r.warning});
    return os.str();
  }
  json j = header("compare", cfg);
  j["level"] = a.level;
  j["well"] = to_json(params);
  j["separation"] = separation;
  for (const auto& r : rows) {
    json e = {{"method", r.method}};
    e["Delta_l"] = r.value ? json(*r.value) : json(nullptr);
    if (!r.warning.empty()) e["warning"] = r.warning;
    j["methods"].push_back(e);
  }
  json pair = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (i == k || !rows[i].value || !rows[k].value) continue;
      pair.push_back({{"method", rows[i].method},
                      {"reference", rows[k].method},
                      {"relative_difference", relative(*rows[i].value, *rows[k].value)}});
    }
  j["pairwise"] = pair;
  j["warnings"] = warnings;
  return j.dump(2) + "\n";
}

// ---- pcf-eval ----

struct PcfArgs {
  Common common;
  double nu = 0.0;
  double z = 0.0;
  bool derivative = false;
  std::string route = "auto";
};

std::string cmd_pcf(const PcfArgs& a, Emit& emit) {
  emit = resolve(a.common, nullptr, OutputFormat::json);
  PcfValue v;
  if (a.derivative) {
    if (a.route != "auto") throw Error(ErrorKind::invalid_input, "--route applies to values only");
    v = pcf_d_deriv(a.nu, a.z);
  } else if (a.route == "auto") {
    v = pcf_d(a.nu, a.z);
  } else if (a.route == "series") {
    v = pcf_d_series(a.nu, a.z);
  } else if (a.route == "asymptotic") {
    v = pcf_d_asymptotic(a.nu, a.z);
  } else {
    throw Error(ErrorKind::invalid_input, "--route must be auto, series or asymptotic");
  }
  if (emit.format == OutputFormat::csv) {
    std::ostringstream os;
    CsvWriter w(os);
    w.header({"nu", "z", "derivative", "value", "log_abs", "sign", "regime", "est_error"});
    w.row({a.nu, a.z, static_cast<long long>(a.derivative), v.value, v.log_abs,
           static_cast<long long>(v.sign), std::string(to_string(v.regime)), v.est_error});
    return os.str();
  }
  json j = to_json(v);
  j["nu"] = a.nu;
  j["z"] = a.z;
  j["derivative"] = a.derivative;
  return j.dump(2) + "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tunneling splittings in asymmetric double wells"};
  app.name("tunnelsplit");
  app.require_subcommand(1);

  SplitArgs split;
  auto* c_split = app.add_subcommand("split", "WKB splitting by the turning-point and regularized forms");
  add_common(c_split, split.common);
  c_split->add_option("--level", split.level, "level index l")->check(CLI::NonNegativeNumber);
  c_split->add_option("--method", split.method, "turning, regularized or both");
  c_split->add_flag("--force-formal", split.force_formal,
                    "evaluate the turning-point form on a non-smooth potential");
  c_split->footer(
      "CSV columns: method,l,n,epsilon,Delta_l,log_Delta_l_over_hbar_omega,Delta_l_eps,delta_l,g_l,"
      "g_l_plus_n,barrier_action,I_a,I_b,gamma_a,gamma_b,formal");

  VdArgs vd;
  auto* c_vd = app.add_subcommand("exact-vd", "Exact levels of the piecewise-quadratic well");
  add_common(c_vd, vd.common);
  c_vd->add_option("--level", vd.level, "level index l")->check(CLI::NonNegativeNumber);
  c_vd->add_option("--eps-sweep", vd.eps_sweep, "FROM:TO[:POINTS] detuning sweep at fixed alpha and n");
  c_vd->footer(
      "CSV columns: l,alpha,beta,n,epsilon,nu_minus,nu_plus,splitting_roots,R_l,L_l,r,delta_minus,"
      "delta_plus,splitting_formula\n"
      "Sweep CSV columns: epsilon,beta,R_l,L_l,delta_minus,delta_plus,splitting_formula,"
      "splitting_roots,mirrored");

  OracleArgs orc;
  auto* c_or = app.add_subcommand("oracle", "Grid diagonalization of the Hamiltonian");
  add_common(c_or, orc.common);
  c_or->add_option("--levels", orc.levels, "number of doublets, l = 0 .. levels-1");
  c_or->add_option("--grid", orc.grid, "grid size N")->check(CLI::Range(kMinGridSize, 1 << 22));
  c_or->add_option("--emit-wavefunctions", orc.wavefunctions, "CSV file for x,psi_0,psi_1,...");
  c_or->add_flag("--no-richardson", orc.no_richardson, "skip the N, 2N-1, 4N-3 error estimate");
  c_or->footer("CSV columns: l,index_lower,index_upper,E_lower,E_upper,gap,richardson_error,status");

  ScanArgs scan;
  auto* c_scan = app.add_subcommand("scan", "Resonance scan over tilt or detuning");
  add_common(c_scan, scan.common);
  c_scan->add_option("--tilt-range", scan.tilt_range, "FROM:TO[:POINTS] linear tilt s");
  c_scan->add_option("--eps-range", scan.eps_range, "FROM:TO[:POINTS] detuning epsilon");
  c_scan->add_option("--points", scan.points, "grid points when the range omits them");
  c_scan->add_option("--level", scan.level, "level index l")->check(CLI::NonNegativeNumber);
  c_scan->add_option("--jobs", scan.jobs, "worker threads")->check(CLI::PositiveNumber);
  c_scan->add_option("--method", scan.method, "turning or regularized");
  c_scan->footer("CSV columns: s|epsilon,Delta_l,Delta_l_eps,max_transfer,n,detuning_epsilon,status");

  DynArgs dyn;
  auto* c_dyn = app.add_subcommand("dynamics", "Two-state tunneling trajectory");
  add_common(c_dyn, dyn.common, false);
  c_dyn->add_option("--Delta", dyn.Delta, "splitting (energy)")->required();
  c_dyn->add_option("--epsilon", dyn.epsilon, "detuning in units of hbar omega");
  c_dyn->add_option("--t-max", dyn.t_max, "final time")->required();
  c_dyn->add_option("--steps", dyn.steps, "time steps");
  c_dyn->add_option("--initial", dyn.initial, "starting well, right or left");
  c_dyn->add_option("--hbar", dyn.hbar, "hbar");
  c_dyn->add_option("--omega", dyn.omega, "omega");
  c_dyn->add_option("--E0", dyn.E0, "mean level energy");
  c_dyn->footer("CSV columns: t,p_right,p_left");

  CompareArgs cmp;
  auto* c_cmp = app.add_subcommand("compare", "All splitting estimators side by side");
  add_common(c_cmp, cmp.common);
  c_cmp->add_option("--level", cmp.level, "level index l")->check(CLI::NonNegativeNumber);
  c_cmp->add_option("--grid", cmp.grid, "oracle grid size N")->check(CLI::Range(kMinGridSize, 1 << 22));
  c_cmp->footer("CSV columns: method,Delta_l,relative_to_oracle,warning");

  PcfArgs pcf;
  auto* c_pcf = app.add_subcommand("pcf-eval", "Parabolic cylinder function D_nu(z)");
  add_common(c_pcf, pcf.common, false);
  c_pcf->add_option("--nu", pcf.nu, "order")->required();
  c_pcf->add_option("--z", pcf.z, "argument")->required();
  c_pcf->add_flag("--derivative", pcf.derivative, "evaluate dD/dz");
  c_pcf->add_option("--route", pcf.route, "auto, series or asymptotic");
  c_pcf->footer("CSV columns: nu,z,derivative,value,log_abs,sign,regime,est_error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_json("invalid_input", e.what()).dump() << "\n";
    return 2;
  }

  try {
    Emit emit{OutputFormat::json, std::nullopt};
    std::string text;
    if (*c_split) text = cmd_split(split, emit);
    else if (*c_vd) text = cmd_exact_vd(vd, emit);
    else if (*c_or) text = cmd_oracle(orc, emit);
    else if (*c_scan) text = cmd_scan(scan, emit);
    else if (*c_dyn) text = cmd_dynamics(dyn, emit);
    else if (*c_cmp) text = cmd_compare(cmp, emit);
    else if (*c_pcf) text = cmd_pcf(pcf, emit);
    write(emit, text, out);
    return 0;
  } catch (const Error& e) {
    err << error_json(std::string(to_string(e.kind())), e.what()).dump() << "\n";
    return e.is_validation() ? 2 : 1;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump() << "\n";
    return 1;
  }
}

}  // namespace tunnelsplit
