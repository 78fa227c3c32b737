#include "tunnelsplit/exact_vd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "tunnelsplit/error.hpp"
#include "tunnelsplit/numeric/log_real.hpp"
#include "tunnelsplit/numeric/roots.hpp"
#include "tunnelsplit/pcf.hpp"
#include "tunnelsplit/special.hpp"

namespace tunnelsplit {
namespace {

using numeric::LogReal;

constexpr double kPi = 3.14159265358979323846;
constexpr double kWindow = 0.45;
constexpr int kScanPoints = 181;

LogReal as_log(const PcfValue& v) { return LogReal::from_log(v.log_abs, v.sign); }

struct Terms {
  LogReal first;
  LogReal second;
};

Terms matching_terms(const VdParameters& p, double nu) {
  const double l = p.units.oscillator_length();
  const double za = -std::sqrt(2.0) * p.alpha / l;
  const double zb = -std::sqrt(2.0) * p.beta / l;
  const double mu = nu + p.n + p.epsilon;
  return {as_log(pcf_d(nu, za)) * as_log(pcf_d_deriv(mu, zb)),
          as_log(pcf_d_deriv(nu, za)) * as_log(pcf_d(mu, zb))};
}

void check_level(int l) {
  if (l < 0) throw Error(ErrorKind::invalid_input, "level index must be non-negative");
  if (l > 170) throw Error(ErrorKind::invalid_input, "level index above 170");
}

}  // namespace

VdParameters VdParameters::from_alpha(double alpha, int n, double epsilon, const Units& units) {
  units.validate();
  if (!(alpha > 0) || !std::isfinite(alpha))
    throw Error(ErrorKind::invalid_input, "alpha must be positive and finite");
  if (n < 0) throw Error(ErrorKind::invalid_input, "n must be non-negative");
  if (!std::isfinite(epsilon)) throw Error(ErrorKind::invalid_input, "epsilon must be finite");
  const double l = units.oscillator_length();
  const double b2 = alpha * alpha + 2.0 * (n + epsilon) * l * l;
  if (!(b2 >= alpha * alpha))
    throw Error(ErrorKind::invalid_input, "n + epsilon must be non-negative");
  VdParameters p;
  p.alpha = alpha;
  p.beta = std::sqrt(b2);
  p.n = n;
  p.epsilon = epsilon;
  p.units = units;
  return p;
}

VdParameters VdParameters::from_lengths(double alpha, double beta, const Units& units) {
  units.validate();
  if (!(alpha > 0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw Error(ErrorKind::invalid_input, "alpha must be positive and finite");
  if (beta < alpha) throw Error(ErrorKind::invalid_input, "beta must not be smaller than alpha");
  const double l = units.oscillator_length();
  const double offset = 0.5 * (beta - alpha) * (beta + alpha) / (l * l);
  VdParameters p;
  p.alpha = alpha;
  p.beta = beta;
  p.n = static_cast<int>(std::lround(offset));
  p.epsilon = offset - p.n;
  p.units = units;
  return p;
}

VdParameters VdParameters::from_model(const PotentialModel& model) {
  if (model.kind() != PotentialKind::piecewise_quadratic)
    throw Error(ErrorKind::precondition, "exact solution needs a piecewise-quadratic potential");
  return from_lengths(-model.left_minimum(), model.right_minimum(), model.units());
}

void VdParameters::validate() const {
  units.validate();
  if (!(alpha > 0) || !std::isfinite(alpha))
    throw Error(ErrorKind::invalid_input, "alpha must be positive and finite");
  if (!(beta >= alpha) || !std::isfinite(beta))
    throw Error(ErrorKind::invalid_input, "beta must be finite and not smaller than alpha");
  if (n < 0) throw Error(ErrorKind::invalid_input, "n must be non-negative");
  const double l = units.oscillator_length();
  const double offset = 0.5 * (beta - alpha) * (beta + alpha) / (l * l);
  if (std::fabs(offset - (n + epsilon)) > 1e-9 * std::max(1.0, offset)) {
    std::ostringstream os;
    os << "branch positions give offset " << offset << " hbar omega, not n + epsilon = "
       << n + epsilon;
    throw Error(ErrorKind::invalid_input, os.str());
  }
}

PotentialModel VdParameters::model() const {
  return PotentialModel::piecewise_quadratic(alpha, beta, units);
}

double vd_matching_residual(const VdParameters& p, double nu) {
  p.validate();
  const Terms t = matching_terms(p, nu);
  return (t.first + t.second).value();
}

double vd_matching_residual_normalized(const VdParameters& p, double nu) {
  const Terms t = matching_terms(p, nu);
  const LogReal scale = t.first.abs() + t.second.abs();
  if (scale.is_zero()) return 0.0;
  return ((t.first + t.second) / scale).value();
}

VdLevels vd_eigenlevels(const VdParameters& p, int l) {
  p.validate();
  check_level(l);
  const double lo = l - kWindow, hi = l + kWindow;
  if (hi + p.n + p.epsilon > kPcfMaxOrder)
    throw Error(ErrorKind::domain, "level too high for the parabolic cylinder evaluator");

  // The pair is split by roughly the predicted splitting, usually far below
  // any uniform grid spacing, so the scan is seeded with the predicted roots.
  std::vector<double> nus;
  for (int i = 0; i < kScanPoints; ++i) nus.push_back(lo + (hi - lo) * i / (kScanPoints - 1));
  try {
    const VdSplitting q = vd_quadratic_delta(p, l);
    const double c = l + 0.5 * (q.delta_minus + q.delta_plus);
    const double h = std::max(0.5 * (q.delta_plus - q.delta_minus), 1e-15 * std::max(1.0, c));
    for (double k : {-4.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 4.0}) {
      const double v = c + k * h;
      if (v > lo && v < hi) nus.push_back(v);
    }
  } catch (const Error&) {
    // no seeds; plain scan only
  }
  std::sort(nus.begin(), nus.end());
  nus.erase(std::unique(nus.begin(), nus.end()), nus.end());

  auto f = [&](double nu) { return vd_matching_residual_normalized(p, nu); };
  std::vector<double> fs;
  for (double v : nus) fs.push_back(f(v));

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < nus.size(); ++i) {
    if (fs[i] == 0.0) {
      roots.push_back(nus[i]);
      continue;
    }
    if (fs[i + 1] != 0.0 && (fs[i] > 0) != (fs[i + 1] > 0))
      roots.push_back(numeric::bisect(f, nus[i], nus[i + 1], fs[i]));
  }
  if (fs.back() == 0.0) roots.push_back(nus.back());

  if (roots.size() != 2) {
    std::ostringstream os;
    os << "found " << roots.size() << " roots of the matching condition in [" << lo << ", " << hi
       << "], expected a near-degenerate pair";
    throw Error(ErrorKind::bracketing, os.str());
  }
  return {roots[0], roots[1]};
}

VdSplitting vd_quadratic_delta(const VdParameters& p, int l) {
  p.validate();
  check_level(l);
  const double lho = p.units.oscillator_length();
  const double xb = std::sqrt(2.0) * p.beta / lho;
  const double xa = std::sqrt(2.0) * p.alpha / lho;
  const double half_log_2pi = 0.5 * std::log(2.0 * kPi);

  VdSplitting s;
  s.l = l;
  s.log_R_l = (2.0 * (p.n + l) + 1.0) * std::log(xb) - half_log_2pi -
              static_cast<double>(special::log_factorial(l + p.n)) - 0.5 * xb * xb;
  s.log_L_l = (2.0 * l + 1.0) * std::log(xa) - half_log_2pi -
              static_cast<double>(special::log_factorial(l)) - 0.5 * xa * xa;
  s.R_l = std::exp(s.log_R_l);
  s.L_l = std::exp(s.log_L_l);
  s.r = (p.beta - p.alpha) / (p.alpha + p.beta);

  // Work in units of the largest scale so nothing underflows.
  const double eps = p.epsilon;
  double log_m = std::max(s.log_R_l, s.log_L_l);
  if (eps != 0.0) log_m = std::max(log_m, std::log(std::fabs(eps)));
  const double R = std::exp(s.log_R_l - log_m);
  const double L = std::exp(s.log_L_l - log_m);
  const double e = eps * std::exp(-log_m);
  const double B = s.r * (R - L) + e;
  const double C = -R * L - e * s.r * L;
  const double disc = 4.0 * R * L + e * e + 2.0 * e * s.r * (R + L) + s.r * s.r * (R - L) * (R - L);
  const double root = std::sqrt(std::max(disc, 0.0));

  // Larger-magnitude root first, the other from the product.
  const double big = -0.5 * (B + std::copysign(root, B));
  const double other = big != 0.0 ? C / big : 0.0;
  const double scale = std::exp(log_m);
  s.delta_minus = std::min(big, other) * scale;
  s.delta_plus = std::max(big, other) * scale;
  s.log_splitting = log_m + 0.5 * std::log(disc);
  s.splitting = p.units.quantum() * std::exp(s.log_splitting);
  return s;
}

}  // namespace tunnelsplit
