#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tunnelsplit/cli.hpp"
#include "tunnelsplit/dynamics.hpp"
#include "tunnelsplit/error.hpp"
#include "tunnelsplit/exact_vd.hpp"
#include "tunnelsplit/oracle.hpp"
#include "tunnelsplit/pcf.hpp"
#include "tunnelsplit/potential.hpp"
#include "tunnelsplit/wkb.hpp"

namespace py = pybind11;
using namespace tunnelsplit;

namespace {

py::dict trajectory_dict(const TwoStateTrajectory& t) {
  py::dict d;
  d["times"] = t.times;
  d["p_right"] = t.p_right;
  d["p_left"] = t.p_left;
  d["shuttle_frequency"] = t.shuttle_frequency;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tunneling splittings in asymmetric double wells";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::object(py::exception<Error>(m, "TunnelsplitError", PyExc_RuntimeError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object inst = type(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  py::class_<Units>(m, "Units")
      .def(py::init([](double hbar, double mass, double omega) {
             Units u{hbar, mass, omega};
             u.validate();
             return u;
           }),
           py::arg("hbar") = 1.0, py::arg("mass") = 1.0, py::arg("omega") = 1.0)
      .def_readonly("hbar", &Units::hbar)
      .def_readonly("mass", &Units::mass)
      .def_readonly("omega", &Units::omega)
      .def("oscillator_length", &Units::oscillator_length);

  py::enum_<PotentialKind>(m, "PotentialKind")
      .value("piecewise_quadratic", PotentialKind::piecewise_quadratic)
      .value("quartic_tilt", PotentialKind::quartic_tilt)
      .value("polynomial", PotentialKind::polynomial);

  py::class_<PotentialModel>(m, "PotentialModel")
      .def_static("piecewise_quadratic", &PotentialModel::piecewise_quadratic, py::arg("alpha"),
                  py::arg("beta"), py::arg("units") = Units{})
      .def_static("quartic_tilt", &PotentialModel::quartic_tilt, py::arg("lam"), py::arg("eta"),
                  py::arg("s") = 0.0, py::arg("units") = Units{})
      .def_static("polynomial", &PotentialModel::polynomial, py::arg("coefficients"),
                  py::arg("units") = Units{})
      .def_property_readonly("kind", &PotentialModel::kind)
      .def_property_readonly("units", &PotentialModel::units)
      .def_property_readonly("is_smooth", &PotentialModel::is_smooth)
      .def_property_readonly("mirrored", &PotentialModel::mirrored)
      .def("__call__", &PotentialModel::value)
      .def("value", &PotentialModel::value)
      .def("left_minimum", &PotentialModel::left_minimum)
      .def("right_minimum", &PotentialModel::right_minimum)
      .def("barrier_top", &PotentialModel::barrier_top)
      .def("with_tilt", &PotentialModel::with_tilt);

  py::class_<WellParameters>(m, "WellParameters")
      .def_readonly("units", &WellParameters::units)
      .def_readonly("a", &WellParameters::a)
      .def_readonly("b", &WellParameters::b)
      .def_readonly("n", &WellParameters::n)
      .def_readonly("epsilon", &WellParameters::epsilon)
      .def_readonly("barrier_height", &WellParameters::barrier_height);
  m.def("extract_well_parameters", &extract_well_parameters);
  m.def("apply_tilt", &apply_tilt);

  py::class_<TurningPoints>(m, "TurningPoints")
      .def_readonly("left", &TurningPoints::left)
      .def_readonly("right", &TurningPoints::right)
      .def_readonly("level_nu", &TurningPoints::level_nu);
  m.def("turning_points", &turning_points, py::arg("params"), py::arg("l"));

  py::enum_<PcfRegime>(m, "PcfRegime")
      .value("series", PcfRegime::series)
      .value("integral", PcfRegime::integral)
      .value("asymptotic", PcfRegime::asymptotic);
  py::class_<PcfValue>(m, "PcfValue")
      .def_readonly("value", &PcfValue::value)
      .def_readonly("log_abs", &PcfValue::log_abs)
      .def_readonly("sign", &PcfValue::sign)
      .def_readonly("regime", &PcfValue::regime)
      .def_readonly("est_error", &PcfValue::est_error);
  m.def("pcf_d", &pcf_d, py::arg("nu"), py::arg("z"));
  m.def("pcf_d_deriv", &pcf_d_deriv, py::arg("nu"), py::arg("z"));

  py::enum_<SplittingMethod>(m, "SplittingMethod")
      .value("turning_point_form", SplittingMethod::turning_point_form)
      .value("regularized_form", SplittingMethod::regularized_form);
  py::class_<ActionIntegrals>(m, "ActionIntegrals")
      .def_readonly("I_a", &ActionIntegrals::I_a)
      .def_readonly("I_b", &ActionIntegrals::I_b)
      .def_readonly("gamma_a", &ActionIntegrals::gamma_a)
      .def_readonly("gamma_b", &ActionIntegrals::gamma_b);
  py::class_<SplittingResult>(m, "SplittingResult")
      .def_readonly("method", &SplittingResult::method)
      .def_readonly("l", &SplittingResult::l)
      .def_readonly("n", &SplittingResult::n)
      .def_readonly("epsilon", &SplittingResult::epsilon)
      .def_readonly("energy", &SplittingResult::energy)
      .def_readonly("Delta_l", &SplittingResult::Delta_l)
      .def_readonly("log_Delta_l", &SplittingResult::log_Delta_l)
      .def_readonly("Delta_l_eps", &SplittingResult::Delta_l_eps)
      .def_readonly("delta_l", &SplittingResult::delta_l)
      .def_readonly("g_l", &SplittingResult::g_l)
      .def_readonly("g_ln", &SplittingResult::g_ln)
      .def_readonly("formal", &SplittingResult::formal)
      .def_readonly("barrier_action", &SplittingResult::barrier_action)
      .def_readonly("actions", &SplittingResult::actions);
  m.def("g_factor", &g_factor, py::arg("k"));
  m.def(
      "splitting_turning_form",
      [](const PotentialModel& model, int l, bool allow_non_smooth) {
        return splitting_turning_form(model, l, SplittingOptions{allow_non_smooth});
      },
      py::arg("model"), py::arg("l") = 0, py::arg("allow_non_smooth") = false);
  m.def(
      "splitting_regularized_form",
      [](const PotentialModel& model, int l, bool allow_non_smooth) {
        return splitting_regularized_form(model, l, SplittingOptions{allow_non_smooth});
      },
      py::arg("model"), py::arg("l") = 0, py::arg("allow_non_smooth") = true);

  py::class_<VdParameters>(m, "VdParameters")
      .def_static("from_alpha", &VdParameters::from_alpha, py::arg("alpha"), py::arg("n"),
                  py::arg("epsilon") = 0.0, py::arg("units") = Units{})
      .def_static("from_lengths", &VdParameters::from_lengths, py::arg("alpha"), py::arg("beta"),
                  py::arg("units") = Units{})
      .def_readonly("alpha", &VdParameters::alpha)
      .def_readonly("beta", &VdParameters::beta)
      .def_readonly("n", &VdParameters::n)
      .def_readonly("epsilon", &VdParameters::epsilon)
      .def("model", &VdParameters::model);
  py::class_<VdSplitting>(m, "VdSplitting")
      .def_readonly("R_l", &VdSplitting::R_l)
      .def_readonly("L_l", &VdSplitting::L_l)
      .def_readonly("log_R_l", &VdSplitting::log_R_l)
      .def_readonly("log_L_l", &VdSplitting::log_L_l)
      .def_readonly("r", &VdSplitting::r)
      .def_readonly("delta_minus", &VdSplitting::delta_minus)
      .def_readonly("delta_plus", &VdSplitting::delta_plus)
      .def_readonly("splitting", &VdSplitting::splitting);
  m.def("vd_matching_residual", &vd_matching_residual, py::arg("params"), py::arg("nu"));
  m.def(
      "vd_eigenlevels",
      [](const VdParameters& p, int l) {
        const VdLevels v = vd_eigenlevels(p, l);
        return py::make_tuple(v.nu_minus, v.nu_plus);
      },
      py::arg("params"), py::arg("l") = 0);
  m.def("vd_quadratic_delta", &vd_quadratic_delta, py::arg("params"), py::arg("l") = 0);

  py::class_<OracleSplitting>(m, "OracleSplitting")
      .def_readonly("l", &OracleSplitting::l)
      .def_readonly("gap", &OracleSplitting::gap)
      .def_readonly("E_lower", &OracleSplitting::E_lower)
      .def_readonly("E_upper", &OracleSplitting::E_upper)
      .def_readonly("index_lower", &OracleSplitting::index_lower)
      .def_readonly("index_upper", &OracleSplitting::index_upper)
      .def_property_readonly("eigenvalues", [](const OracleSplitting& o) { return o.spectrum.eigenvalues; })
      .def(
          "wronskian_splitting",
          [](const OracleSplitting& o) {
            return wronskian_splitting(localized_states(o.spectrum, o.l), o.params.units);
          });
  m.def(
      "oracle_splitting",
      [](const PotentialModel& model, int l, int N) {
        OracleOptions o;
        o.N = N;
        py::gil_scoped_release release;
        return oracle_splitting(model, l, o);
      },
      py::arg("model"), py::arg("l") = 0, py::arg("N") = kDefaultGridSize);

  m.def("max_transfer_probability", &max_transfer_probability, py::arg("Delta"), py::arg("detuning"));
  m.def(
      "evolve_two_state",
      [](double Delta, double detuning, double t_max, int n_steps, const std::string& initial,
         double hbar) {
        if (initial != "right" && initial != "left")
          throw Error(ErrorKind::invalid_input, "initial must be 'right' or 'left'");
        Units u{hbar, 1.0, 1.0};
        return trajectory_dict(evolve_two_state(TwoStateSystem{0.0, Delta, detuning}, t_max, n_steps,
                                                initial == "right" ? Well::right : Well::left, u));
      },
      py::arg("Delta"), py::arg("detuning"), py::arg("t_max"), py::arg("n_steps"),
      py::arg("initial") = "right", py::arg("hbar") = 1.0);
  m.def(
      "resonance_scan",
      [](const PotentialModel& base, const std::string& variable, const std::vector<double>& grid,
         int l, int jobs) {
        ScanVariable v;
        if (variable == "tilt")
          v = ScanVariable::tilt;
        else if (variable == "epsilon")
          v = ScanVariable::epsilon;
        else
          throw Error(ErrorKind::invalid_input, "variable must be 'tilt' or 'epsilon'");
        ScanOptions so;
        so.jobs = jobs;
        std::vector<ScanPoint> pts;
        {
          py::gil_scoped_release release;
          pts = resonance_scan(base, v, grid, l, so);
        }
        py::list out;
        for (const auto& p : pts) {
          py::dict d;
          d["parameter"] = p.parameter;
          d["ok"] = p.ok;
          d["off_resonance"] = p.off_resonance;
          d["n"] = p.n;
          d["epsilon"] = p.epsilon;
          d["Delta_l"] = p.Delta_l;
          d["Delta_l_eps"] = p.Delta_l_eps;
          d["max_transfer"] = p.max_transfer;
          d["error"] = p.error;
          out.append(d);
        }
        return out;
      },
      py::arg("base"), py::arg("variable"), py::arg("grid"), py::arg("l") = 0, py::arg("jobs") = 1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"tunnelsplit"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line tool in process; returns (exit_code, stdout, stderr).");
}
