#pragma once

#include <memory>
#include <vector>

#include "tunnelsplit/units.hpp"

namespace tunnelsplit {

enum class PotentialKind { piecewise_quadratic, quartic_tilt, polynomial };

const char* to_string(PotentialKind kind);

// One-dimensional asymmetric double well in canonical coordinates: the
// barrier maximum sits at x = 0, the lower minimum at x = b > 0 with V(b) = 0,
// and the upper minimum at x = -a < 0. Models whose raw form has the lower
// well on the left are mirrored x -> -x on construction.
//
// units().omega is the small-oscillation frequency at x = b. For the
// piecewise model it is the branch frequency given on construction; for the
// smooth models it is derived from the curvature and the input omega is
// ignored.
class PotentialModel {
 public:
  // Two parabolic branches of frequency units.omega centred at u = -alpha and
  // u = beta, joined continuously at u = 0 with V(beta) = 0.
  static PotentialModel piecewise_quadratic(double alpha, double beta, const Units& units);
  // lambda (u^2 - eta^2)^2 + s u.
  static PotentialModel quartic_tilt(double lambda, double eta, double s, const Units& units);
  // sum_k c_k u^k, ascending powers.
  static PotentialModel polynomial(std::vector<double> coefficients, const Units& units);

  PotentialKind kind() const;
  const Units& units() const;
  bool is_smooth() const;
  bool mirrored() const;

  // Points where V is continuous but not differentiable (canonical x).
  std::vector<double> kinks() const;

  double operator()(double x) const { return value(x); }
  double value(double x) const;
  double derivative(double x) const;         // right derivative at a kink
  double second_derivative(double x) const;  // right value at a kink

  // V(b + dy) and V(-a + dy) - V(-a), accurate for small dy.
  double rise_from_right_minimum(double dy) const;
  double rise_from_left_minimum(double dy) const;

  double left_minimum() const;         // -a
  double right_minimum() const;        // b
  double left_minimum_value() const;   // V(-a)
  double barrier_top() const;          // V(0)

  double left_frequency() const;
  double right_frequency() const;

  // Taylor coefficients t_k of the rise from each minimum as a function of
  // the distance y >= 0 toward the barrier: sum_k t_k y^k (t_0 = t_1 = 0).
  std::vector<double> left_taylor() const;
  std::vector<double> right_taylor() const;

  // Accumulated linear tilt s u in the raw coordinate, and the raw location of
  // the canonical origin (the barrier maximum).
  double raw_tilt() const;
  double raw_origin() const;

  // Raw parameters, for reporting. Piecewise: {alpha, beta}; quartic:
  // {lambda, eta}; polynomial: the untilted coefficients.
  const std::vector<double>& raw_parameters() const;

  // Same model with an extra s x added in canonical coordinates.
  PotentialModel with_tilt(double s) const;

 private:
  struct State;
  explicit PotentialModel(std::shared_ptr<const State> state);
  std::shared_ptr<const State> state_;
};

// apply_tilt(model, s): V(x) + s x in the model's canonical frame.
PotentialModel apply_tilt(const PotentialModel& model, double s);

struct WellParameters {
  Units units;
  double a = 0.0;
  double b = 0.0;
  int n = 0;
  double epsilon = 0.0;
  double barrier_height = 0.0;  // V(0) above the lower minimum

  double oscillator_length() const { return units.oscillator_length(); }
  // V(-a) in units of hbar omega.
  double detuning_total() const { return n + epsilon; }
};

// Extracts (a, b, n, epsilon). Throws model_assumption when the two curvature
// frequencies differ by more than 1e-3 relative and out_of_regime when the
// residual detuning exceeds 0.1.
WellParameters extract_well_parameters(const PotentialModel& model);

struct TurningPoints {
  double left = 0.0;      // -a + l_ho sqrt(2l + 1)
  double right = 0.0;     // b - l_ho sqrt(2(l + n) + 1)
  double level_nu = 0.0;  // l, with the level shift delta_l taken as 0
};

// Harmonic turning points of the doublet (l, l + n). Throws out_of_regime if
// they fall outside the wells or cross.
TurningPoints turning_points(const WellParameters& params, int l);

// Largest distances from each minimum toward the barrier over which V stays
// within rel_tol of its harmonic approximation.
struct QuadraticRegion {
  double left = 0.0;
  double right = 0.0;
};
QuadraticRegion quadratic_region(const PotentialModel& model, double rel_tol = 0.01);

}  // namespace tunnelsplit
