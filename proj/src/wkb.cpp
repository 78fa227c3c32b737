#include "tunnelsplit/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "tunnelsplit/error.hpp"
#include "tunnelsplit/numeric/quadrature.hpp"
#include "tunnelsplit/numeric/roots.hpp"
#include "tunnelsplit/special.hpp"

namespace tunnelsplit {
namespace {

constexpr double kPi = 3.14159265358979323846;

void check_level(int l) {
  if (l < 0) throw Error(ErrorKind::invalid_input, "level index must be non-negative");
  if (l > 170) throw Error(ErrorKind::invalid_input, "level index above 170");
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          const numeric::QuadratureOptions& opts, const char* what) {
  const auto r = numeric::integrate(f, a, b, opts);
  if (!r.converged && r.abs_error > 1e3 * std::max(opts.abs_tol, opts.rel_tol * std::fabs(r.value))) {
    std::ostringstream os;
    os << what << ": quadrature did not converge (estimate " << r.value << ", error " << r.abs_error
       << ")";
    throw Error(ErrorKind::numerical, os.str());
  }
  return r.value;
}

// The V = E crossing between a point below E and a point above it.
double energy_crossing(const PotentialModel& model, double E, double below, double above) {
  auto f = [&](double x) { return model.value(x) - E; };
  const double fb = f(below);
  if (fb >= 0 || f(above) <= 0)
    throw Error(ErrorKind::out_of_regime, "level energy has no crossing inside the well");
  return numeric::bisect(f, below, above, fb);
}

}  // namespace

const char* to_string(SplittingMethod method) {
  switch (method) {
    case SplittingMethod::turning_point_form: return "turning_point_form";
    case SplittingMethod::regularized_form: return "regularized_form";
  }
  return "unknown";
}

double log_g_factor(int k) {
  if (k < 0) throw Error(ErrorKind::invalid_input, "g_factor needs k >= 0");
  const long double h = k + 0.5L;
  const long double v = 0.5L * std::log(2.0L * static_cast<long double>(kPi)) -
                        special::log_factorial(k) + h * std::log(h) - h;
  return static_cast<double>(v);
}

double g_factor(int k) { return std::exp(log_g_factor(k)); }

double barrier_action(const PotentialModel& model, double E, double x1, double x2) {
  if (!std::isfinite(E) || !std::isfinite(x1) || !std::isfinite(x2))
    throw Error(ErrorKind::invalid_input, "barrier_action needs finite arguments");
  if (x2 < x1) throw Error(ErrorKind::invalid_input, "barrier_action needs x1 <= x2");
  if (x1 == x2) return 0.0;
  for (int i = 1; i < 200; ++i) {
    const double x = x1 + (x2 - x1) * (0.005 + 0.99 * i / 200.0);
    if (model.value(x) <= E) {
      std::ostringstream os;
      os << "V(" << x << ") = " << model.value(x) << " does not exceed E = " << E
         << " inside the interval";
      throw Error(ErrorKind::not_a_barrier, os.str());
    }
  }
  const double m = model.units().mass;
  const double hbar = model.units().hbar;
  auto p = [&](double y) {
    const double r = model.value(y) - E;
    return r > 0 ? std::sqrt(2.0 * m * r) / hbar : 0.0;
  };
  std::vector<double> cuts{x1};
  for (double k : model.kinks())
    if (k > x1 && k < x2) cuts.push_back(k);
  cuts.push_back(x2);

  numeric::QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  opts.rel_tol = 1e-13;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    const double mid = 0.5 * (lo + hi);
    if (lo == x1) {
      total += integrate_or_throw([&](double t) { return 2.0 * t * p(x1 + t * t); }, 0.0,
                                  std::sqrt(mid - x1), opts, "barrier action");
    } else {
      total += integrate_or_throw(p, lo, mid, opts, "barrier action");
    }
    if (hi == x2) {
      total += integrate_or_throw([&](double t) { return 2.0 * t * p(x2 - t * t); }, 0.0,
                                  std::sqrt(x2 - mid), opts, "barrier action");
    } else {
      total += integrate_or_throw(p, mid, hi, opts, "barrier action");
    }
  }
  return total;
}

ReferenceActions reference_actions(const PotentialModel& model) {
  const Units& u = model.units();
  const double a = -model.left_minimum();
  const double b = model.right_minimum();
  const double floor = -1e-14 * u.quantum();
  auto root = [&](double r) {
    if (r < floor) {
      std::ostringstream os;
      os << "potential dips " << r << " below the well minimum inside the barrier";
      throw Error(ErrorKind::model_assumption, os.str());
    }
    return r > 0 ? std::sqrt(2.0 * u.mass * r) : 0.0;
  };
  numeric::QuadratureOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-13;
  ReferenceActions out;
  out.I_b = integrate_or_throw([&](double y) { return root(model.rise_from_right_minimum(y - b)); },
                               0.0, b, opts, "I_b");
  out.I_a = integrate_or_throw([&](double y) { return root(model.rise_from_left_minimum(y + a)); },
                               -a, 0.0, opts, "I_a");
  return out;
}

GammaCorrections gamma_corrections(const PotentialModel& model) {
  GammaCorrections out;
  if (!model.is_smooth()) return out;
  const double m = model.units().mass;
  const double a = -model.left_minimum();
  const double b = model.right_minimum();
  numeric::QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  opts.rel_tol = 1e-12;

  auto gamma = [&](double width, double omega, const std::vector<double>& t, auto rise) {
    // With rise = t2 y^2 (1 + u), u = (t3 y + t4 y^2) / t2, the combined
    // integrand is -t3/(2 t2) + (3/8 (t3/t2)^2 - t4/(2 t2)) y + O(y^2).
    auto coef = [&](std::size_t k) { return k < t.size() ? t[k] : 0.0; };
    const double t2 = coef(2), t3 = coef(3), t4 = coef(4);
    const double c0 = -t3 / (2.0 * t2);
    const double c1 = 0.375 * (t3 / t2) * (t3 / t2) - t4 / (2.0 * t2);
    const double y0 = 1e-4 * width;
    auto f = [&](double y) {
      const double r = rise(y);
      if (!(r > 0)) {
        std::ostringstream os;
        os << "well potential is not positive at distance " << y << " from its minimum";
        throw Error(ErrorKind::model_assumption, os.str());
      }
      return std::sqrt(m * omega * omega) / std::sqrt(2.0 * r) - 1.0 / y;
    };
    // Below y0 the two 1/y terms cancel to within rounding; the series is
    // integrated there instead.
    const double near = c0 * y0 + 0.5 * c1 * y0 * y0;
    const double v = near + integrate_or_throw(f, y0, width, opts, "gamma correction");
    if (!std::isfinite(v))
      throw Error(ErrorKind::model_assumption, "gamma correction does not converge");
    return v;
  };
  out.gamma_b = gamma(b, model.right_frequency(), model.right_taylor(),
                      [&](double y) { return model.rise_from_right_minimum(-y); });
  out.gamma_a = gamma(a, model.left_frequency(), model.left_taylor(),
                      [&](double y) { return model.rise_from_left_minimum(y); });
  return out;
}

DetuningResult splitting_with_detuning(double Delta_l, double epsilon, const Units& units) {
  units.validate();
  if (!std::isfinite(Delta_l) || Delta_l < 0)
    throw Error(ErrorKind::invalid_input, "Delta_l must be finite and non-negative");
  if (!std::isfinite(epsilon)) throw Error(ErrorKind::invalid_input, "epsilon must be finite");
  DetuningResult out;
  const double q = Delta_l / (2.0 * units.quantum());
  const double h = std::hypot(0.5 * epsilon, q);
  // Larger-magnitude root directly, the other from the product -q^2.
  if (epsilon >= 0) {
    out.delta_plus = 0.5 * epsilon + h;
    out.delta_minus = out.delta_plus > 0 ? -q * q / out.delta_plus : 0.0;
  } else {
    out.delta_minus = 0.5 * epsilon - h;
    out.delta_plus = -q * q / out.delta_minus;
  }
  out.Delta_l_eps = std::hypot(Delta_l, units.quantum() * epsilon);
  return out;
}

namespace {

void fill_detuning(SplittingResult& r) {
  const DetuningResult d = splitting_with_detuning(r.Delta_l, r.epsilon, r.units);
  r.Delta_l_eps = d.Delta_l_eps;
  r.delta_l = d.delta_plus;
}

}  // namespace

SplittingResult splitting_turning_form(const PotentialModel& model, int l,
                                       const SplittingOptions& opts) {
  check_level(l);
  if (!model.is_smooth() && !opts.allow_non_smooth)
    throw Error(ErrorKind::non_smooth,
                "the turning-point form assumes a potential smooth at the barrier top; "
                "this model has a kink at x = 0");
  const WellParameters params = extract_well_parameters(model);
  check_level(l + params.n);
  const TurningPoints tp = turning_points(params, l);
  SplittingResult r;
  r.method = SplittingMethod::turning_point_form;
  r.l = l;
  r.n = params.n;
  r.epsilon = params.epsilon;
  r.units = params.units;
  r.formal = !model.is_smooth();
  r.energy = (l + params.n + 0.5) * params.units.quantum();
  r.turning_points = tp;
  r.left_root = energy_crossing(model, r.energy, -params.a, 0.0);
  r.right_root = energy_crossing(model, r.energy, params.b, 0.0);
  const double S = barrier_action(model, r.energy, r.left_root, r.right_root);
  r.barrier_action = S;
  r.g_l = g_factor(l);
  r.g_ln = g_factor(l + params.n);
  r.log_Delta_l = 0.5 * (log_g_factor(l) + log_g_factor(l + params.n)) - std::log(kPi) - S;
  r.Delta_l = params.units.quantum() * std::exp(r.log_Delta_l);
  fill_detuning(r);
  return r;
}

SplittingResult splitting_regularized_form(const PotentialModel& model, int l,
                                           const SplittingOptions&) {
  check_level(l);
  const WellParameters params = extract_well_parameters(model);
  check_level(l + params.n);
  turning_points(params, l);
  const ReferenceActions I = reference_actions(model);
  const GammaCorrections g = gamma_corrections(model);
  const Units& u = params.units;
  const double lho = u.oscillator_length();
  SplittingResult r;
  r.method = SplittingMethod::regularized_form;
  r.l = l;
  r.n = params.n;
  r.epsilon = params.epsilon;
  r.units = u;
  r.formal = !model.is_smooth();
  r.energy = (l + params.n + 0.5) * u.quantum();
  r.actions = ActionIntegrals{I.I_a, I.I_b, g.gamma_a, g.gamma_b};
  r.g_l = g_factor(l);
  r.g_ln = g_factor(l + params.n);
  const double ln_sqrt2 = 0.5 * std::log(2.0);
  const long double log_fact =
      special::log_factorial(l + params.n) + special::log_factorial(l);
  r.log_Delta_l = ln_sqrt2 - (I.I_a + I.I_b) / u.hbar -
                  0.5 * (std::log(kPi) + static_cast<double>(log_fact)) +
                  (l + 0.5) * (ln_sqrt2 + std::log(params.a / lho) + g.gamma_a) +
                  (l + params.n + 0.5) * (ln_sqrt2 + std::log(params.b / lho) + g.gamma_b);
  r.Delta_l = u.quantum() * std::exp(r.log_Delta_l);
  fill_detuning(r);
  return r;
}

WeierstrassRatio weierstrass_ratio(const PotentialModel& model, int l) {
  check_level(2 * l);
  const WellParameters params = extract_well_parameters(model);
  if (params.n != 0 || std::fabs(params.epsilon) > 1e-6)
    throw Error(ErrorKind::precondition, "the quasi-Weierstrass ratio needs n = 0 and epsilon = 0");
  WeierstrassRatio w;
  const SplittingResult d0 = splitting_regularized_form(model, 0);
  const SplittingResult d2l = splitting_regularized_form(model, 2 * l);
  w.log_direct = d2l.log_Delta_l - d0.log_Delta_l;
  w.direct = std::exp(w.log_direct);

  const GammaCorrections g = gamma_corrections(model);
  const double lho2 = params.units.hbar / (params.units.mass * params.units.omega);
  w.log_closed_form = 2.0 * l * (std::log(2.0 * params.a * params.b / lho2) + g.gamma_a + g.gamma_b) -
                      static_cast<double>(special::log_factorial(2 * l));
  w.closed_form = std::exp(w.log_closed_form);
  return w;
}

}  // namespace tunnelsplit
