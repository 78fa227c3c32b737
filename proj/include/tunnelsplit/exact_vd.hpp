#pragma once

#include <utility>

#include "tunnelsplit/potential.hpp"

namespace tunnelsplit {

// Piecewise-quadratic double well: branch minima at -alpha (upper) and beta
// (lower), one frequency, joined at x = 0. The offset of the upper well is
// (m omega^2 / 2)(beta^2 - alpha^2) = (n + epsilon) hbar omega.
struct VdParameters {
  double alpha = 0.0;
  double beta = 0.0;
  int n = 0;
  double epsilon = 0.0;
  Units units;

  // beta derived from the offset.
  static VdParameters from_alpha(double alpha, int n, double epsilon, const Units& units);
  // n and epsilon derived from the branch positions; requires beta >= alpha > 0.
  static VdParameters from_lengths(double alpha, double beta, const Units& units);
  // Canonical a, b of a piecewise model.
  static VdParameters from_model(const PotentialModel& model);

  void validate() const;
  PotentialModel model() const;
};

// F(nu) = D_nu(-sqrt2 alpha/l) D'_{nu+n+eps}(-sqrt2 beta/l)
//       + D'_nu(-sqrt2 alpha/l) D_{nu+n+eps}(-sqrt2 beta/l).
// Zeros are eigenlevels with E = (nu + n + eps + 1/2) hbar omega above the
// lower minimum. May overflow for large arguments.
double vd_matching_residual(const VdParameters& p, double nu);

// F(nu) divided by the sum of the magnitudes of its two terms; same zeros,
// always in [-1, 1].
double vd_matching_residual_normalized(const VdParameters& p, double nu);

struct VdLevels {
  double nu_minus = 0.0;
  double nu_plus = 0.0;
  double gap() const { return nu_plus - nu_minus; }
};

// The two roots of F in [l - 0.45, l + 0.45]. Throws bracketing unless exactly
// two sign changes are found there.
VdLevels vd_eigenlevels(const VdParameters& p, int l);

struct VdSplitting {
  int l = 0;
  double R_l = 0.0;  // may underflow; the logs are authoritative
  double L_l = 0.0;
  double log_R_l = 0.0;
  double log_L_l = 0.0;
  double r = 0.0;  // (beta - alpha) / (alpha + beta)
  // Roots of delta^2 + (r (R - L) + eps) delta - R L - eps r L = 0,
  // delta_minus <= delta_plus; levels sit at nu = l + delta.
  double delta_minus = 0.0;
  double delta_plus = 0.0;
  double splitting = 0.0;      // hbar omega (delta_plus - delta_minus)
  double log_splitting = 0.0;  // ln(splitting / hbar omega)
};

VdSplitting vd_quadratic_delta(const VdParameters& p, int l);

}  // namespace tunnelsplit
