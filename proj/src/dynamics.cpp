#include "tunnelsplit/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "tunnelsplit/exact_vd.hpp"

namespace tunnelsplit {
namespace {

double splitting_of(const PotentialModel& model, int l, SplittingMethod method) {
  SplittingOptions so;
  so.allow_non_smooth = true;
  const SplittingResult r = method == SplittingMethod::turning_point_form
                                ? splitting_turning_form(model, l, so)
                                : splitting_regularized_form(model, l, so);
  return r.Delta_l;
}

void fill(ScanPoint& pt, double Delta, const WellParameters& params) {
  pt.n = params.n;
  pt.epsilon = params.epsilon;
  pt.Delta_l = Delta;
  const double d = params.units.quantum() * params.epsilon;
  pt.Delta_l_eps = std::hypot(Delta, d);
  pt.max_transfer = max_transfer_probability(Delta, d);
  pt.ok = true;
}

}  // namespace

void TwoStateSystem::validate() const {
  if (!std::isfinite(E0) || !std::isfinite(Delta) || !std::isfinite(detuning))
    throw Error(ErrorKind::invalid_input, "two-state parameters must be finite");
  if (Delta < 0) throw Error(ErrorKind::invalid_input, "Delta must be non-negative");
}

double TwoStateSystem::gap() const { return std::hypot(Delta, detuning); }

TwoStateTrajectory evolve_two_state(const TwoStateSystem& sys, double t_max, int n_steps,
                                    Well initial, const Units& units) {
  sys.validate();
  units.validate();
  if (n_steps < 2) throw Error(ErrorKind::invalid_input, "n_steps must be at least 2");
  if (!(t_max > 0) || !std::isfinite(t_max))
    throw Error(ErrorKind::invalid_input, "t_max must be positive and finite");
  const double omega = sys.gap();
  // Amplitude to stay is cos(th) + i (d/W) sin(th) up to a phase, to move is
  // i (Delta/W) sin(th), with th = W t / 2 hbar; the sign of d flips with the
  // starting well but drops out of both probabilities.
  const double move = omega > 0 ? sys.Delta / omega : 0.0;
  const double stay = omega > 0 ? sys.detuning / omega : 1.0;
  TwoStateTrajectory tr;
  tr.shuttle_frequency = omega / units.hbar;
  tr.times.reserve(n_steps + 1);
  for (int k = 0; k <= n_steps; ++k) {
    const double t = t_max * k / n_steps;
    const double th = 0.5 * omega * t / units.hbar;
    const double c = std::cos(th), s = std::sin(th);
    const double p_move = move * move * s * s;
    const double p_stay = c * c + stay * stay * s * s;
    tr.times.push_back(t);
    if (initial == Well::right) {
      tr.p_right.push_back(p_stay);
      tr.p_left.push_back(p_move);
    } else {
      tr.p_left.push_back(p_stay);
      tr.p_right.push_back(p_move);
    }
  }
  return tr;
}

double max_transfer_probability(double Delta, double detuning) {
  if (!std::isfinite(Delta) || !std::isfinite(detuning))
    throw Error(ErrorKind::invalid_input, "Delta and detuning must be finite");
  if (Delta < 0) throw Error(ErrorKind::invalid_input, "Delta must be non-negative");
  if (Delta == 0 && detuning == 0)
    throw Error(ErrorKind::indeterminate, "transfer probability undefined for Delta = detuning = 0");
  // Ratio form keeps tiny Delta from underflowing when squared.
  const double r = detuning / std::max(Delta, std::fabs(detuning));
  const double q = Delta / std::max(Delta, std::fabs(detuning));
  return q * q / (q * q + r * r);
}

const char* to_string(ScanVariable v) {
  switch (v) {
    case ScanVariable::tilt: return "tilt";
    case ScanVariable::epsilon: return "epsilon";
  }
  return "unknown";
}

std::vector<ScanPoint> resonance_scan(const PotentialModel& base, ScanVariable variable,
                                      const std::vector<double>& grid, int l,
                                      const ScanOptions& opts) {
  if (l < 0) throw Error(ErrorKind::invalid_input, "level index must be non-negative");
  if (opts.jobs < 1) throw Error(ErrorKind::invalid_input, "jobs must be at least 1");
  for (double v : grid)
    if (!std::isfinite(v)) throw Error(ErrorKind::invalid_input, "scan grid values must be finite");

  const bool rebuild = variable == ScanVariable::epsilon &&
                       base.kind() == PotentialKind::piecewise_quadratic;
  double base_delta = 0.0;
  WellParameters base_params;
  if (variable == ScanVariable::epsilon && !rebuild) {
    base_params = extract_well_parameters(base);
    base_delta = splitting_of(base, l, opts.method);
  }
  std::vector<ScanPoint> out(grid.size());

  auto run = [&](std::size_t i) {
    ScanPoint& pt = out[i];
    pt.parameter = grid[i];
    try {
      if (variable == ScanVariable::tilt) {
        const PotentialModel m = apply_tilt(base, grid[i]);
        WellParameters params;
        try {
          params = extract_well_parameters(m);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::out_of_regime) throw;
          pt.off_resonance = true;
          pt.error = e.what();
          return;
        }
        fill(pt, splitting_of(m, l, opts.method), params);
      } else if (rebuild) {
        const VdParameters b = VdParameters::from_model(base);
        // Below zero offset the left well is the lower one: same well, mirrored.
        const bool mirror = b.n == 0 && grid[i] < 0;
        const VdParameters p =
            VdParameters::from_alpha(b.alpha, b.n, mirror ? -grid[i] : grid[i], b.units);
        const PotentialModel m = p.model();
        WellParameters params;
        params.units = p.units;
        params.a = p.alpha;
        params.b = p.beta;
        params.n = p.n;
        params.epsilon = grid[i];
        params.barrier_height = m.barrier_top();
        fill(pt, splitting_of(m, l, opts.method), params);
      } else {
        WellParameters params = base_params;
        params.epsilon = grid[i];
        fill(pt, base_delta, params);
      }
    } catch (const Error& e) {
      pt.ok = false;
      pt.error = e.what();
      pt.max_transfer = std::nan("");
    }
  };

  const std::size_t workers = std::min<std::size_t>(opts.jobs, grid.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) run(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < grid.size(); i = next++) run(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

double curve_fwhm(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3)
    throw Error(ErrorKind::invalid_input, "curve needs at least three matching points");
  std::size_t top = 0;
  for (std::size_t i = 1; i < y.size(); ++i)
    if (y[i] > y[top]) top = i;
  const double half = 0.5 * y[top];
  auto crossing = [&](std::size_t i, std::size_t j) {
    return x[i] + (half - y[i]) * (x[j] - x[i]) / (y[j] - y[i]);
  };
  std::size_t i = top;
  while (i > 0 && y[i - 1] > half) --i;
  if (i == 0) throw Error(ErrorKind::indeterminate, "curve does not fall to half maximum on the left");
  const double left = crossing(i - 1, i);
  std::size_t j = top;
  while (j + 1 < y.size() && y[j + 1] > half) ++j;
  if (j + 1 == y.size())
    throw Error(ErrorKind::indeterminate, "curve does not fall to half maximum on the right");
  const double right = crossing(j, j + 1);
  return right - left;
}

std::vector<int> curve_peaks(const std::vector<double>& y, double threshold) {
  std::vector<int> peaks;
  const int n = static_cast<int>(y.size());
  for (int i = 0; i < n; ++i) {
    if (!(y[i] >= threshold)) continue;
    const bool left_ok = i == 0 || y[i] > y[i - 1];
    const bool right_ok = i == n - 1 || y[i] >= y[i + 1];
    if (left_ok && right_ok) peaks.push_back(i);
  }
  return peaks;
}

double refine_peak(const std::vector<double>& x, const std::vector<double>& y, int i) {
  if (i <= 0 || i + 1 >= static_cast<int>(y.size())) return x.at(i);
  const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
  const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
  const double d1 = (y1 - y0) / (x1 - x0), d2 = (y2 - y1) / (x2 - x1);
  const double curv = (d2 - d1) / (x2 - x0);
  if (!(curv < 0)) return x1;
  return 0.5 * (x0 + x1) - d1 / (2.0 * curv);
}

}  // namespace tunnelsplit
