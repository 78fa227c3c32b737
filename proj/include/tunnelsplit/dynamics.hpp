#pragma once

#include <string>
#include <vector>

#include "tunnelsplit/error.hpp"
#include "tunnelsplit/potential.hpp"
#include "tunnelsplit/wkb.hpp"

namespace tunnelsplit {

// H = [[E0 + detuning, -Delta/2], [-Delta/2, E0]] in the (left, right) basis.
struct TwoStateSystem {
  double E0 = 0.0;
  double Delta = 0.0;
  double detuning = 0.0;  // energy, hbar omega epsilon

  void validate() const;
  // sqrt(Delta^2 + detuning^2), the eigenvalue gap.
  double gap() const;
};

enum class Well { right, left };

struct TwoStateTrajectory {
  std::vector<double> times;
  std::vector<double> p_right;
  std::vector<double> p_left;
  double shuttle_frequency = 0.0;  // gap / hbar, angular
};

// Closed-form evolution on n_steps + 1 equally spaced times in [0, t_max].
TwoStateTrajectory evolve_two_state(const TwoStateSystem& sys, double t_max, int n_steps,
                                    Well initial = Well::right, const Units& units = {});

// Delta^2 / (Delta^2 + detuning^2). Throws indeterminate if both vanish.
double max_transfer_probability(double Delta, double detuning);

enum class ScanVariable { tilt, epsilon };

const char* to_string(ScanVariable v);

struct ScanOptions {
  SplittingMethod method = SplittingMethod::regularized_form;
  int jobs = 1;
};

struct ScanPoint {
  double parameter = 0.0;  // s or epsilon
  bool ok = false;
  bool off_resonance = false;  // detuning outside the accepted window; transfer set to 0
  std::string error;
  int n = 0;
  double epsilon = 0.0;
  double Delta_l = 0.0;
  double Delta_l_eps = 0.0;
  double max_transfer = 0.0;
};

// Tilt scan: V + s x for each s. Epsilon scan: piecewise models are rebuilt
// with beta from (alpha, n, epsilon); smooth models keep Delta_l of the base
// model and take epsilon as the two-state detuning. Results are in grid order.
std::vector<ScanPoint> resonance_scan(const PotentialModel& base, ScanVariable variable,
                                      const std::vector<double>& grid, int l,
                                      const ScanOptions& opts = {});

// Full width at half maximum of the highest peak, by linear interpolation.
// Throws indeterminate if the curve does not fall below half on both sides.
double curve_fwhm(const std::vector<double>& x, const std::vector<double>& y);

// Indices of local maxima with y >= threshold.
std::vector<int> curve_peaks(const std::vector<double>& y, double threshold);

// Peak position by a parabola through the maximum and its neighbours.
double refine_peak(const std::vector<double>& x, const std::vector<double>& y, int index);

}  // namespace tunnelsplit
