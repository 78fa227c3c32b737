#include "tunnelsplit/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "tunnelsplit/error.hpp"

namespace tunnelsplit {
namespace {

using ld = long double;
using Poly = std::vector<ld>;

ld horner(const Poly& c, ld x) {
  ld acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly derivative_of(const Poly& c) {
  Poly d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<ld>(k));
  return d;
}

// Coefficients of p(u0 + sigma y) in y.
Poly taylor_shift(Poly p, ld u0, int sigma) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) p[j] += u0 * p[j + 1];
  if (sigma < 0)
    for (std::size_t j = 1; j < n; j += 2) p[j] = -p[j];
  return p;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorKind::invalid_input, std::string(what) + " must be finite");
}

struct Critical {
  ld u;
  bool is_min;
};

// Sign-changing real roots of p', bracketed on a uniform grid over the
// Cauchy bound and bisected to adjacent doubles.
std::vector<Critical> critical_points(const Poly& p) {
  const Poly d = derivative_of(p);
  std::size_t deg = d.size();
  while (deg > 0 && d[deg - 1] == 0) --deg;
  if (deg < 2) return {};
  ld bound = 0;
  for (std::size_t k = 0; k + 1 < deg; ++k) bound = std::max(bound, std::fabs(d[k] / d[deg - 1]));
  bound += 1;
  const int cells = 40000;
  std::vector<Critical> out;
  auto f = [&](ld u) { return horner(d, u); };
  ld prev_u = -bound;
  ld prev_f = f(prev_u);
  for (int i = 1; i <= cells; ++i) {
    const ld u = -bound + 2 * bound * i / cells;
    const ld fu = f(u);
    if (fu == 0) continue;  // an exact zero is bracketed by the next nonzero sample
    if ((prev_f < 0) != (fu < 0)) {
      ld lo = prev_u, hi = u, flo = prev_f;
      for (int it = 0; it < 200; ++it) {
        const ld mid = 0.5L * (lo + hi);
        if (static_cast<double>(mid) == static_cast<double>(lo) ||
            static_cast<double>(mid) == static_cast<double>(hi))
          break;
        const ld fm = f(mid);
        if (fm == 0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      out.push_back({0.5L * (lo + hi), prev_f < 0});
    }
    prev_u = u;
    prev_f = fu;
  }
  return out;
}

}  // namespace

struct PotentialModel::State {
  PotentialKind kind{};
  Units units;
  std::vector<double> raw_params;
  double raw_tilt = 0.0;
  double raw_origin = 0.0;
  int sigma = 1;
  double a = 0, b = 0, left_value = 0, top = 0;
  double omega_left = 0, omega_right = 0;
  // Piecewise: spring constant m omega^2.
  double k = 0;
  // Smooth: Taylor expansions about -a, 0 and b in canonical coordinates,
  // constant terms included.
  Poly left, center, right;

  static std::shared_ptr<const State> build(PotentialKind kind, const Units& units,
                                            std::vector<double> raw, double tilt);
  static void build_piecewise(State& s);
  static void build_smooth(State& s);
};

const char* to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::piecewise_quadratic: return "piecewise_quadratic";
    case PotentialKind::quartic_tilt: return "quartic_tilt";
    case PotentialKind::polynomial: return "polynomial";
  }
  return "unknown";
}

std::shared_ptr<const PotentialModel::State> PotentialModel::State::build(
    PotentialKind kind, const Units& units, std::vector<double> raw, double tilt) {
  units.validate();
  require_finite(tilt, "tilt");
  for (double v : raw) require_finite(v, "potential parameter");
  auto s = std::make_shared<State>();
  s->kind = kind;
  s->units = units;
  s->raw_params = std::move(raw);
  s->raw_tilt = tilt;
  if (kind == PotentialKind::piecewise_quadratic)
    build_piecewise(*s);
  else
    build_smooth(*s);
  return s;
}

void PotentialModel::State::build_piecewise(State& s) {
  const double alpha = s.raw_params[0];
  const double beta = s.raw_params[1];
  if (!(alpha > 0) || !(beta > 0))
    throw Error(ErrorKind::invalid_input, "piecewise_quadratic needs alpha > 0 and beta > 0");
  s.k = s.units.mass * s.units.omega * s.units.omega;
  // Raw minima sit at -alpha - tilt/k and beta - tilt/k; the kink at u = 0
  // stays the maximum while both remain on their own side.
  const double dl = alpha + s.raw_tilt / s.k;
  const double dr = beta - s.raw_tilt / s.k;
  if (!(dl > 0) || !(dr > 0))
    throw Error(ErrorKind::shape, "tilt removes one of the piecewise minima");
  s.sigma = dr >= dl ? 1 : -1;
  s.a = s.sigma > 0 ? dl : dr;
  s.b = s.sigma > 0 ? dr : dl;
  s.left_value = 0.5 * s.k * (s.b - s.a) * (s.b + s.a);
  s.top = 0.5 * s.k * s.b * s.b;
  s.raw_origin = 0.0;
  s.omega_left = s.omega_right = s.units.omega;
}

void PotentialModel::State::build_smooth(State& s) {
  Poly p;
  if (s.kind == PotentialKind::quartic_tilt) {
    const ld lambda = s.raw_params[0];
    const ld eta = s.raw_params[1];
    if (!(lambda > 0) || !(eta > 0))
      throw Error(ErrorKind::invalid_input, "quartic_tilt needs lambda > 0 and eta > 0");
    p = {lambda * eta * eta * eta * eta, 0, -2 * lambda * eta * eta, 0, lambda};
  } else {
    p.assign(s.raw_params.begin(), s.raw_params.end());
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.size() < 5 || p.size() % 2 == 0 || p.back() < 0)
      throw Error(ErrorKind::shape,
                  "polynomial must have even degree >= 4 and a positive leading coefficient");
  }
  if (p.size() < 2) p.resize(2, 0);
  p[1] += s.raw_tilt;

  ld u_left, u_max, u_right;
  if (s.kind == PotentialKind::quartic_tilt && s.raw_tilt == 0.0) {
    u_left = -static_cast<ld>(s.raw_params[1]);
    u_max = 0;
    u_right = s.raw_params[1];
  } else {
    const auto crit = critical_points(p);
    if (crit.size() != 3 || !crit[0].is_min || crit[1].is_min || !crit[2].is_min) {
      std::ostringstream os;
      os << "expected two minima and one maximum, found " << crit.size() << " critical points";
      throw Error(ErrorKind::shape, os.str());
    }
    u_left = crit[0].u;
    u_max = crit[1].u;
    u_right = crit[2].u;
  }
  const ld v_left = horner(p, u_left);
  const ld v_right = horner(p, u_right);
  s.sigma = v_right <= v_left ? 1 : -1;
  const ld u_low = s.sigma > 0 ? u_right : u_left;
  const ld u_high = s.sigma > 0 ? u_left : u_right;
  const ld e_off = horner(p, u_low);
  s.raw_origin = static_cast<double>(u_max);
  s.a = static_cast<double>(std::fabs(u_max - u_high));
  s.b = static_cast<double>(std::fabs(u_low - u_max));

  s.right = taylor_shift(p, u_low, s.sigma);
  s.right[0] = 0;
  s.right[1] = 0;
  s.left = taylor_shift(p, u_high, s.sigma);
  s.left[0] = horner(p, u_high) - e_off;
  s.left[1] = 0;
  s.center = taylor_shift(p, u_max, s.sigma);
  s.center[0] = horner(p, u_max) - e_off;
  s.center[1] = 0;

  s.left_value = static_cast<double>(s.left[0]);
  s.top = static_cast<double>(s.center[0]);
  const double m = s.units.mass;
  if (!(s.right[2] > 0) || !(s.left[2] > 0))
    throw Error(ErrorKind::shape, "a minimum has vanishing curvature");
  s.omega_right = std::sqrt(2.0 * static_cast<double>(s.right[2]) / m);
  s.omega_left = std::sqrt(2.0 * static_cast<double>(s.left[2]) / m);
  s.units.omega = s.omega_right;
}

PotentialModel::PotentialModel(std::shared_ptr<const State> state) : state_(std::move(state)) {}

PotentialModel PotentialModel::piecewise_quadratic(double alpha, double beta, const Units& units) {
  return PotentialModel(State::build(PotentialKind::piecewise_quadratic, units, {alpha, beta}, 0.0));
}

PotentialModel PotentialModel::quartic_tilt(double lambda, double eta, double s, const Units& units) {
  return PotentialModel(State::build(PotentialKind::quartic_tilt, units, {lambda, eta}, s));
}

PotentialModel PotentialModel::polynomial(std::vector<double> coefficients, const Units& units) {
  return PotentialModel(State::build(PotentialKind::polynomial, units, std::move(coefficients), 0.0));
}

PotentialKind PotentialModel::kind() const { return state_->kind; }
const Units& PotentialModel::units() const { return state_->units; }
bool PotentialModel::is_smooth() const { return state_->kind != PotentialKind::piecewise_quadratic; }
bool PotentialModel::mirrored() const { return state_->sigma < 0; }

std::vector<double> PotentialModel::kinks() const {
  if (is_smooth()) return {};
  return {0.0};
}

double PotentialModel::value(double x) const {
  if (!std::isfinite(x)) throw Error(ErrorKind::invalid_input, "potential evaluated at non-finite x");
  const State& s = *state_;
  if (!is_smooth()) {
    if (x < 0) return 0.5 * s.k * (x + s.a) * (x + s.a) + s.left_value;
    return 0.5 * s.k * (x - s.b) * (x - s.b);
  }
  if (x >= 0.5 * s.b) return static_cast<double>(horner(s.right, x - s.b));
  if (x <= -0.5 * s.a) return static_cast<double>(horner(s.left, x + s.a));
  return static_cast<double>(horner(s.center, x));
}

double PotentialModel::derivative(double x) const {
  const State& s = *state_;
  if (!is_smooth()) return x < 0 ? s.k * (x + s.a) : s.k * (x - s.b);
  auto d = [](const Poly& c, ld y) { return static_cast<double>(horner(derivative_of(c), y)); };
  if (x >= 0.5 * s.b) return d(s.right, x - s.b);
  if (x <= -0.5 * s.a) return d(s.left, x + s.a);
  return d(s.center, x);
}

double PotentialModel::second_derivative(double x) const {
  const State& s = *state_;
  if (!is_smooth()) return s.k;
  auto d2 = [](const Poly& c, ld y) {
    return static_cast<double>(horner(derivative_of(derivative_of(c)), y));
  };
  if (x >= 0.5 * s.b) return d2(s.right, x - s.b);
  if (x <= -0.5 * s.a) return d2(s.left, x + s.a);
  return d2(s.center, x);
}

double PotentialModel::rise_from_right_minimum(double dy) const {
  const State& s = *state_;
  if (!is_smooth()) {
    if (s.b + dy < 0) return value(s.b + dy);
    return 0.5 * s.k * dy * dy;
  }
  if (s.b + dy <= 0.5 * s.b) return value(s.b + dy);
  return static_cast<double>(horner(s.right, dy));
}

double PotentialModel::rise_from_left_minimum(double dy) const {
  const State& s = *state_;
  if (!is_smooth()) {
    if (-s.a + dy >= 0) return value(-s.a + dy) - s.left_value;
    return 0.5 * s.k * dy * dy;
  }
  if (-s.a + dy >= -0.5 * s.a) return value(-s.a + dy) - s.left_value;
  Poly c = s.left;
  c[0] = 0;
  return static_cast<double>(horner(c, dy));
}

double PotentialModel::left_minimum() const { return -state_->a; }
double PotentialModel::right_minimum() const { return state_->b; }
double PotentialModel::left_minimum_value() const { return state_->left_value; }
double PotentialModel::barrier_top() const { return state_->top; }
double PotentialModel::left_frequency() const { return state_->omega_left; }
double PotentialModel::right_frequency() const { return state_->omega_right; }
std::vector<double> PotentialModel::left_taylor() const {
  if (!is_smooth()) return {0.0, 0.0, 0.5 * state_->k};
  std::vector<double> t(state_->left.begin(), state_->left.end());
  t[0] = 0.0;
  return t;
}

std::vector<double> PotentialModel::right_taylor() const {
  if (!is_smooth()) return {0.0, 0.0, 0.5 * state_->k};
  std::vector<double> t;
  for (std::size_t k = 0; k < state_->right.size(); ++k)
    t.push_back(static_cast<double>(k % 2 ? -state_->right[k] : state_->right[k]));
  return t;
}
double PotentialModel::raw_tilt() const { return state_->raw_tilt; }
double PotentialModel::raw_origin() const { return state_->raw_origin; }
const std::vector<double>& PotentialModel::raw_parameters() const { return state_->raw_params; }

PotentialModel PotentialModel::with_tilt(double s) const {
  require_finite(s, "tilt");
  Units u = state_->units;
  return PotentialModel(State::build(state_->kind, u, state_->raw_params,
                                     state_->raw_tilt + state_->sigma * s));
}

PotentialModel apply_tilt(const PotentialModel& model, double s) { return model.with_tilt(s); }

WellParameters extract_well_parameters(const PotentialModel& model) {
  const Units& u = model.units();
  if (model.is_smooth()) {
    const double mismatch =
        std::fabs(model.left_frequency() - model.right_frequency()) / model.right_frequency();
    if (mismatch > 1e-3) {
      std::ostringstream os;
      os << "curvature frequencies differ by " << mismatch
         << " relative (left " << model.left_frequency() << ", right " << model.right_frequency()
         << "); the splitting formulas assume a single frequency";
      throw Error(ErrorKind::model_assumption, os.str());
    }
  }
  WellParameters p;
  p.units = u;
  p.a = -model.left_minimum();
  p.b = model.right_minimum();
  const double delta = model.left_minimum_value() / u.quantum();
  p.n = static_cast<int>(std::lround(delta));
  if (p.n < 0) p.n = 0;
  p.epsilon = delta - p.n;
  p.barrier_height = model.barrier_top();
  if (std::fabs(p.epsilon) > 0.1) {
    std::ostringstream os;
    os << "well offset " << delta << " hbar omega leaves detuning epsilon = " << p.epsilon
       << " outside |epsilon| <= 0.1";
    throw Error(ErrorKind::out_of_regime, os.str());
  }
  return p;
}

TurningPoints turning_points(const WellParameters& params, int l) {
  if (l < 0) throw Error(ErrorKind::invalid_input, "level index must be non-negative");
  const double lho = params.oscillator_length();
  const double energy = (l + params.n + 0.5) * params.units.quantum();
  if (energy >= params.barrier_height) {
    std::ostringstream os;
    os << "level energy " << energy << " is not below the barrier top " << params.barrier_height;
    throw Error(ErrorKind::out_of_regime, os.str());
  }
  TurningPoints t;
  t.left = -params.a + std::sqrt(2.0 * l + 1.0) * lho;
  t.right = params.b - std::sqrt(2.0 * (l + params.n) + 1.0) * lho;
  t.level_nu = l;
  if (!(t.left > -params.a && t.left < 0.0) || !(t.right > 0.0 && t.right < params.b)) {
    std::ostringstream os;
    os << "harmonic turning points (" << t.left << ", " << t.right
       << ") leave the wells; the wells are too close for the splitting formulas";
    throw Error(ErrorKind::out_of_regime, os.str());
  }
  return t;
}

QuadraticRegion quadratic_region(const PotentialModel& model, double rel_tol) {
  QuadraticRegion r;
  const double m = model.units().mass;
  auto scan = [&](double extent, double omega, auto rise) {
    const int steps = 4000;
    double last_ok = 0.0;
    for (int i = 1; i <= steps; ++i) {
      const double d = extent * i / steps;
      const double harmonic = 0.5 * m * omega * omega * d * d;
      if (std::fabs(rise(d) - harmonic) > rel_tol * harmonic) break;
      last_ok = d;
    }
    return last_ok;
  };
  const double a = -model.left_minimum();
  const double b = model.right_minimum();
  r.right = scan(b, model.right_frequency(),
                 [&](double d) { return model.rise_from_right_minimum(-d); });
  r.left = scan(a, model.left_frequency(),
                [&](double d) { return model.rise_from_left_minimum(d); });
  return r;
}

}  // namespace tunnelsplit
