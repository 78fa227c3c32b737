#pragma once

#include <optional>

#include "tunnelsplit/potential.hpp"

namespace tunnelsplit {

struct ActionIntegrals {
  double I_a = 0.0;  // action
  double I_b = 0.0;
  double gamma_a = 0.0;
  double gamma_b = 0.0;
};

enum class SplittingMethod { turning_point_form, regularized_form };

const char* to_string(SplittingMethod method);

struct SplittingOptions {
  // Evaluate the turning-point form on a non-smooth (piecewise) model anyway.
  bool allow_non_smooth = false;
};

struct SplittingResult {
  SplittingMethod method = SplittingMethod::regularized_form;
  int l = 0;
  int n = 0;
  double epsilon = 0.0;
  Units units;
  double energy = 0.0;       // (l + n + 1/2) hbar omega
  double Delta_l = 0.0;      // may underflow; log_Delta_l is authoritative
  double log_Delta_l = 0.0;  // ln(Delta_l / hbar omega)
  double Delta_l_eps = 0.0;
  double delta_l = 0.0;      // upper root of delta (delta - eps) = (Delta_l / 2 hbar omega)^2
  double g_l = 0.0;
  double g_ln = 0.0;
  bool formal = false;       // evaluated on a non-smooth model
  // Turning-point form only.
  std::optional<double> barrier_action;
  std::optional<TurningPoints> turning_points;
  double left_root = 0.0;    // where V = E, used as integration limits
  double right_root = 0.0;
  // Regularized form only.
  std::optional<ActionIntegrals> actions;
};

// g_k = sqrt(2 pi)/k! (k + 1/2)^(k + 1/2) e^-(k + 1/2), 0 <= k <= 170.
double g_factor(int k);
double log_g_factor(int k);

// int_{x1}^{x2} sqrt(2m (V - E)) / hbar with square-root endpoint substitutions.
double barrier_action(const PotentialModel& model, double E, double x1, double x2);

struct ReferenceActions {
  double I_a = 0.0;
  double I_b = 0.0;
};
// I_a = int_{-a}^0 sqrt(2m (V - V(-a))), I_b = int_0^b sqrt(2m V). Measuring
// the left well from its own minimum keeps the integrand regular when the
// detuning is nonzero.
ReferenceActions reference_actions(const PotentialModel& model);

struct GammaCorrections {
  double gamma_a = 0.0;
  double gamma_b = 0.0;
};
// Regularized log corrections; exactly zero for the piecewise model. The left
// integrand uses the left-well frequency so the 1/y terms cancel for any
// accepted curvature mismatch.
GammaCorrections gamma_corrections(const PotentialModel& model);

SplittingResult splitting_turning_form(const PotentialModel& model, int l,
                                       const SplittingOptions& opts = {});
SplittingResult splitting_regularized_form(const PotentialModel& model, int l,
                                           const SplittingOptions& opts = {});

struct DetuningResult {
  double Delta_l_eps = 0.0;
  double delta_minus = 0.0;
  double delta_plus = 0.0;
};
// hypot(Delta_l, hbar omega eps) and the two roots of
// delta (delta - eps) = (Delta_l / 2 hbar omega)^2.
DetuningResult splitting_with_detuning(double Delta_l, double epsilon, const Units& units);

struct WeierstrassRatio {
  double direct = 0.0;       // Delta_{2l} / Delta_0 from two splitting evaluations
  double closed_form = 0.0;  // (2ab e^{gamma_a + gamma_b} / l_ho^2)^{2l} / (2l)!
  double log_direct = 0.0;
  double log_closed_form = 0.0;
};
WeierstrassRatio weierstrass_ratio(const PotentialModel& model, int l);

}  // namespace tunnelsplit
