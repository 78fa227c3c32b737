// One line per acceptance criterion; exit status 1 if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tunnelsplit/dynamics.hpp"
#include "tunnelsplit/error.hpp"
#include "tunnelsplit/exact_vd.hpp"
#include "tunnelsplit/oracle.hpp"
#include "tunnelsplit/pcf.hpp"
#include "tunnelsplit/potential.hpp"
#include "tunnelsplit/wkb.hpp"

using namespace tunnelsplit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok) { pass = pass && ok; }
};

double rel(double a, double b) { return (a - b) / b; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Symmetric quartic with unit frequency; separation 2 eta oscillator lengths.
PotentialModel quartic(double separation) {
  const double eta = 0.5 * separation;
  return PotentialModel::quartic_tilt(1.0 / (8 * eta * eta), eta, 0.0, {});
}

constexpr double kSeparations[] = {10.0, 11.0, 12.0};
constexpr int kAsymmetricGrid = 65536;

void symmetric_reduction(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (double sep : kSeparations) {
    const auto m = quartic(sep);
    const double reg = splitting_regularized_form(m, 0).Delta_l;
    const double gap = oracle_splitting(m, 0).gap;
    const double d = rel(reg, gap);
    o.require(std::fabs(d) < 0.05);
    o.detail << "sep " << sep << ": " << d << "; ";
  }
  const double t = seconds_since(t0);
  o.require(t < 10.0);
  o.detail << "time " << t << " s";
}

void form_equivalence(Outcome& o) {
  double prev = INFINITY;
  for (double sep : kSeparations) {
    const auto m = quartic(sep);
    const double d =
        std::fabs(rel(splitting_turning_form(m, 0).Delta_l, splitting_regularized_form(m, 0).Delta_l));
    o.require(d < 0.02);
    o.require(d < prev);
    prev = d;
    o.detail << "sep " << sep << ": " << d << "; ";
  }
}

void appendix_closure(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  double prev = INFINITY;
  for (double alpha : {3.0, 4.0, 5.0}) {
    const auto p = VdParameters::from_alpha(alpha, 0, 0.0, {});
    const double roots = vd_eigenlevels(p, 0).gap() * p.units.quantum();
    const double two_r = 2.0 * vd_quadratic_delta(p, 0).R_l * p.units.quantum();
    const auto formal = splitting_regularized_form(p.model(), 0);
    const double d = std::fabs(rel(two_r, roots));
    const double closed = std::fabs(std::expm1(formal.log_Delta_l - std::log(2.0 * vd_quadratic_delta(p, 0).R_l)));
    o.require(d < 0.05 && d < prev);
    o.require(closed < 1e-8);
    prev = d;
    o.detail << "alpha " << alpha << ": roots " << d << ", formal " << closed << "; ";
  }
  const double t = seconds_since(t0);
  o.require(t < 5.0);
  o.detail << "time " << t << " s";
}

void detuning_law(Outcome& o) {
  const auto base = VdParameters::from_alpha(4.0, 1, 0.0, {});
  const double Delta0 = splitting_regularized_form(base.model(), 0).Delta_l;
  OracleOptions opts;
  opts.N = kAsymmetricGrid;
  for (double k : {0.0, 1.0, 5.0}) {
    const auto p = VdParameters::from_alpha(4.0, 1, k * Delta0 / base.units.quantum(), {});
    const double gap = oracle_splitting(p.model(), 0, opts).gap;
    const double expect = std::hypot(Delta0, k * Delta0);
    const double d = rel(gap, expect);
    o.require(std::fabs(d) < 0.05);
    o.detail << "k " << k << ": " << d << "; ";
  }
  o.detail << "piecewise alpha 4, n 1, N " << kAsymmetricGrid;
}

void lorentzian(Outcome& o) {
  double worst = 0.0;
  const double Delta = 2.3e-4;
  for (double k : {0.0, 0.25, 1.0, 2.0, 5.0}) {
    const double d = k * Delta;
    const double W = std::hypot(Delta, d);
    const auto tr = evolve_two_state({0.0, Delta, d}, 7 * M_PI / W, 7000);
    const double peak = *std::max_element(tr.p_left.begin(), tr.p_left.end());
    worst = std::max(worst, std::fabs(peak - Delta * Delta / (Delta * Delta + d * d)));
  }
  o.require(worst <= 1e-10);
  o.detail << "trajectory max error " << worst << "; ";

  const auto base = PotentialModel::piecewise_quadratic(4.0, 4.0, {});
  const double D = splitting_regularized_form(base, 0).Delta_l;
  std::vector<double> grid, y;
  for (int i = 0; i <= 400; ++i) grid.push_back((-5.0 + 0.025 * i) * D);
  ScanOptions so;
  so.jobs = 4;
  for (const auto& p : resonance_scan(base, ScanVariable::epsilon, grid, 0, so))
    y.push_back(p.ok ? p.max_transfer : std::nan(""));
  const double fwhm = curve_fwhm(grid, y);
  const double d = rel(fwhm, 2 * D / base.units().quantum());
  o.require(std::fabs(d) < 0.01);
  o.detail << "FWHM vs 2 Delta " << d;
}

void node_structure(Outcome& o) {
  auto check = [&](const PotentialModel& m, int N, const char* name) {
    OracleOptions opts;
    opts.N = N;
    const auto s = oracle_splitting(m, 0, opts);
    const auto tp = turning_points(s.params, 0);
    const int lower = node_count(s.spectrum, s.spectrum.eigenvectors[s.index_lower], tp.left, tp.right);
    const int upper = node_count(s.spectrum, s.spectrum.eigenvectors[s.index_upper], tp.left, tp.right);
    o.require(lower == 0 && upper == 1);
    o.detail << name << ": lower " << lower << ", upper " << upper << "; ";
  };
  check(quartic(12.0), kDefaultGridSize, "quartic sep 12");
  check(VdParameters::from_alpha(4.0, 1, 0.0, {}).model(), kAsymmetricGrid, "piecewise alpha 4 n 1");
}

void weierstrass(Outcome& o) {
  const auto m = quartic(12.0);
  for (int l : {0, 1}) {
    const auto w = weierstrass_ratio(m, l);
    const double d = std::fabs(std::expm1(w.log_direct - w.log_closed_form));
    o.require(d <= 1e-8);
    o.detail << "l " << l << ": " << d << "; ";
  }
}

// Physicists' Hermite polynomial; bound is the same recurrence on magnitudes, so
// |value| << bound flags a value dominated by rounding (a zero of H_k).
double hermite(int k, double x, double* bound) {
  double h0 = 1.0, h1 = 2.0 * x, b0 = 1.0, b1 = std::fabs(2.0 * x);
  if (k == 0) {
    *bound = 1.0;
    return h0;
  }
  for (int j = 1; j < k; ++j) {
    const double h2 = 2.0 * x * h1 - 2.0 * j * h0;
    const double b2 = std::fabs(2.0 * x) * b1 + 2.0 * j * b0;
    h0 = h1;
    h1 = h2;
    b0 = b1;
    b1 = b2;
  }
  *bound = b1;
  return h1;
}

void pcf_kernel(Outcome& o) {
  double herm = 0.0;
  for (int k = 0; k <= 8; ++k)
    for (double z = -12.0; z <= 12.0; z += 0.25) {
      double bound = 0.0;
      const double h = hermite(k, z / std::sqrt(2.0), &bound);
      if (std::fabs(h) <= 1e-13 * bound) continue;
      const double e = std::pow(2.0, -0.5 * k) * std::exp(-0.25 * z * z) * h;
      herm = std::max(herm, std::fabs(pcf_d(k, z).value - e) / std::fabs(e));
    }
  double rec = 0.0;
  for (double nu = -2.0; nu <= 10.0; nu += 0.25)
    for (double z = -8.0; z <= 8.0; z += 0.5) {
      const double up = pcf_d(nu + 1, z).value, mid = pcf_d(nu, z).value, dn = pcf_d(nu - 1, z).value;
      const double scale = std::max({std::fabs(up), std::fabs(z * mid), std::fabs(nu * dn)});
      if (scale > 0) rec = std::max(rec, std::fabs(up - z * mid + nu * dn) / scale);
    }
  double ovl = 0.0;
  for (double nu = 0.0; nu <= 3.0 + 1e-12; nu += 0.125) {
    const double r = pcf_switchover_radius(nu);
    for (double z : {-1.1 * r, -0.9 * r, 0.9 * r, 1.1 * r}) {
      const auto s = pcf_d_series(nu, z);
      const auto a = detail::pcf_d_asymptotic_unchecked(nu, z);
      ovl = std::max(ovl, s.sign == a.sign ? std::fabs(std::expm1(s.log_abs - a.log_abs)) : 1.0);
    }
  }
  o.require(herm <= 1e-10);
  o.require(rec <= 1e-9);
  o.require(ovl <= 1e-8);
  o.detail << "hermite " << herm << ", recurrence " << rec << ", overlap " << ovl;
}

void wronskian(Outcome& o) {
  auto check = [&](const PotentialModel& m, int N, double tol, const char* name) {
    OracleOptions opts;
    opts.N = N;
    const auto s = oracle_splitting(m, 0, opts);
    const double w = wronskian_splitting(localized_states(s.spectrum, 0), s.params.units);
    const double d = rel(w, s.gap);
    o.require(std::fabs(d) < tol);
    o.detail << name << ": " << d << "; ";
  };
  check(quartic(12.0), kDefaultGridSize, 0.05, "quartic sep 12");
  check(VdParameters::from_alpha(4.0, 1, 0.0, {}).model(), kAsymmetricGrid, 0.10, "piecewise alpha 4 n 1");
}

void oracle_self(Outcome& o) {
  auto harmonic = [](int N) {
    return build_grid_hamiltonian([](double x) { return 0.5 * x * x; }, {}, {-12.0, 12.0}, N);
  };
  const auto s = eigen_lowest(harmonic(4096), 5, false);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) worst = std::max(worst, std::fabs(s.eigenvalues[k] - (k + 0.5)));
  o.require(worst <= 1e-6);
  const auto r = richardson([&](int N) { return eigen_lowest(harmonic(N), 1, false).eigenvalues[0]; }, 4096);
  o.require(std::fabs(r.ratio - 4.0) <= 0.8);
  o.detail << "harmonic max error " << worst << ", Richardson ratio " << r.ratio;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"symmetric-case reduction", symmetric_reduction},
      {"form equivalence", form_equivalence},
      {"exact piecewise closure", appendix_closure},
      {"detuning law", detuning_law},
      {"Lorentzian resonance", lorentzian},
      {"node structure", node_structure},
      {"quasi-Weierstrass identity", weierstrass},
      {"PCF kernel", pcf_kernel},
      {"Wronskian estimator", wronskian},
      {"oracle self-validation", oracle_self},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "threw: " << e.what();
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
