#include "tunnelsplit/pcf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tunnelsplit/error.hpp"
#include "tunnelsplit/numeric/quadrature.hpp"
#include "tunnelsplit/special.hpp"

namespace tunnelsplit {
namespace {

using ld = long double;
constexpr ld kEpsL = std::numeric_limits<ld>::epsilon();
constexpr ld kInf = std::numeric_limits<ld>::infinity();
constexpr ld kLn2 = 0.693147180559945309417232121458176568L;
constexpr ld kLnSqrtPi = 0.572364942924700087071713675676529356L;
constexpr ld kLnSqrt2Pi = 0.918938533204672741780329736405617640L;
constexpr double kDoubleFloor = 1.2e-16;

// value = sign * exp(log_abs), with a relative error bound.
struct Part {
  ld log_abs = -kInf;
  int sign = 0;
  ld rel_err = 0;
};

Part add(const Part& x, const Part& y) {
  if (x.sign == 0) return y;
  if (y.sign == 0) return x;
  const ld ref = std::max(x.log_abs, y.log_abs);
  const ld vx = x.sign * std::exp(x.log_abs - ref);
  const ld vy = y.sign * std::exp(y.log_abs - ref);
  const ld s = vx + vy;
  const ld err = std::fabs(vx) * x.rel_err + std::fabs(vy) * y.rel_err +
                 kEpsL * (std::fabs(vx) + std::fabs(vy));
  if (s == 0) return {-kInf, 0, 0};
  return {ref + std::log(std::fabs(s)), s > 0 ? 1 : -1, err / std::fabs(s)};
}

PcfValue finish(const Part& p, PcfRegime regime) {
  PcfValue out;
  out.regime = regime;
  out.sign = p.sign;
  if (p.sign == 0) {
    out.value = 0.0;
    out.log_abs = -std::numeric_limits<double>::infinity();
    out.est_error = 0.0;
    return out;
  }
  out.log_abs = static_cast<double>(p.log_abs);
  out.value = p.sign * std::exp(out.log_abs);
  out.est_error = std::max(static_cast<double>(p.rel_err), kDoubleFloor);
  return out;
}

void check_domain(double nu, double z, double max_order = kPcfMaxOrder) {
  if (!std::isfinite(nu) || !std::isfinite(z) || std::fabs(nu) > max_order ||
      std::fabs(z) > kPcfMaxArgument) {
    std::ostringstream os;
    os << "parabolic cylinder function outside |nu| <= " << max_order
       << ", |z| <= " << kPcfMaxArgument << " (nu=" << nu << ", z=" << z << ")";
    throw Error(ErrorKind::domain, os.str());
  }
}

struct SeriesSum {
  ld sum;
  ld abs_sum;
};

// Kummer M(a, b, x) = sum (a)_k / (b)_k x^k / k!, x >= 0.
SeriesSum kummer_m(ld a, ld b, ld x) {
  ld term = 1, sum = 1, comp = 0, abs_sum = 1;
  for (int k = 0; k < 20000; ++k) {
    const ld ratio = (a + k) / (b + k) * x / (k + 1);
    term *= ratio;
    if (term == 0) return {sum, abs_sum};
    const ld y = term - comp;
    const ld t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    abs_sum += std::fabs(term);
    if (a + k > 0 && std::fabs(ratio) < 0.9L && std::fabs(term) <= 1e-3L * kEpsL * std::fabs(sum))
      return {sum, abs_sum};
  }
  throw Error(ErrorKind::numerical, "confluent series did not converge");
}

// Expansion about z = 0. Used for z <= 0, where the two solutions add
// without catastrophic cancellation.
Part kummer_route(ld nu, ld z) {
  const ld x = 0.5L * z * z;
  const special::LogValue ra = special::reciprocal_gamma(0.5L * (1 - nu));
  const special::LogValue rb = special::reciprocal_gamma(-0.5L * nu);
  ld t1 = 0, t2 = 0, abs_total = 0;
  if (ra.sign != 0) {
    const SeriesSum m1 = kummer_m(-0.5L * nu, 0.5L, x);
    const ld c = ra.sign * std::exp(ra.log_abs + kLnSqrtPi);
    t1 = c * m1.sum;
    abs_total += std::fabs(c) * m1.abs_sum;
  }
  if (rb.sign != 0 && z != 0) {
    const SeriesSum m2 = kummer_m(0.5L * (1 - nu), 1.5L, x);
    const ld c = -rb.sign * std::exp(rb.log_abs + kLnSqrt2Pi) * z;
    t2 = c * m2.sum;
    abs_total += std::fabs(c) * m2.abs_sum;
  }
  const ld bracket = t1 + t2;
  if (bracket == 0) return {-kInf, 0, 0};
  const ld log_abs = 0.5L * nu * kLn2 - 0.25L * z * z + std::log(std::fabs(bracket));
  const ld rel = 8 * kEpsL * abs_total / std::fabs(bracket) + 16 * kEpsL;
  return {log_abs, bracket > 0 ? 1 : -1, rel};
}

// e^{z^2/4} D_mu(z) = (1/Gamma(-mu)) int_0^inf t^{-mu-1} e^{-z t - t^2/2} dt for
// mu <= -1, z >= 0. Integrated in u with t = u^2 so the endpoint is smooth.
Part integral_rep(ld mu, ld z) {
  const ld c = -mu - 1;
  const ld p = 2 * c + 1;
  const double zd = static_cast<double>(z);
  auto h = [&](double u) -> double {
    if (u <= 0) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(kLn2 + p * std::log(static_cast<ld>(u)) - z * u * u -
                               0.5L * u * u * u * u);
  };
  const double t_star = 0.5 * (-zd + std::sqrt(zd * zd + 2.0 * static_cast<double>(p)));
  const double u_star = std::sqrt(t_star);
  const double h_max = h(u_star);
  double upper = u_star + 1.0;
  while (h(upper) > h_max - 80.0) upper = u_star + 2.0 * (upper - u_star);
  auto f = [&](double u) { return std::exp(h(u) - h_max); };
  numeric::QuadratureOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-14;
  const auto left = numeric::integrate(f, 0.0, u_star, opts);
  const auto right = numeric::integrate(f, u_star, upper, opts);
  const double total = left.value + right.value;
  if (!(total > 0)) throw Error(ErrorKind::numerical, "integral representation vanished");
  const special::LogValue rg = special::reciprocal_gamma(-mu);
  const ld rel = (left.abs_error + right.abs_error) / total;
  return {h_max + std::log(static_cast<ld>(total)) + rg.log_abs, rg.sign, rel};
}

// z > 0 below the switchover: seed at two orders in (-3, -1] from the
// integral representation, then recur upward (stable for z > 0).
Part integral_route(ld nu, ld z) {
  if (nu <= -1) {
    Part p = integral_rep(nu, z);
    p.log_abs -= 0.25L * z * z;
    return p;
  }
  const int steps = static_cast<int>(std::ceil(static_cast<double>(nu) + 1.0));
  const ld mu1 = nu - steps;
  const Part p0 = integral_rep(mu1 - 1, z);
  const Part p1 = integral_rep(mu1, z);
  ld ref = std::max(p0.log_abs, p1.log_abs);
  ld prev = p0.sign * std::exp(p0.log_abs - ref);
  ld cur = p1.sign * std::exp(p1.log_abs - ref);
  ld mu = mu1;
  for (int k = 0; k < steps; ++k) {
    const ld next = z * cur - mu * prev;
    prev = cur;
    cur = next;
    mu += 1;
    if (std::fabs(cur) > 1e200L) {
      const ld s = std::log(std::fabs(cur));
      prev *= std::exp(-s);
      cur *= std::exp(-s);
      ref += s;
    }
  }
  if (cur == 0) return {-kInf, 0, 0};
  const ld rel = p0.rel_err + p1.rel_err + 4 * kEpsL * (steps + 2);
  return {ref + std::log(std::fabs(cur)) - 0.25L * z * z, cur > 0 ? 1 : -1, rel};
}

Part series_route(ld nu, ld z) { return z <= 0 ? kummer_route(nu, z) : integral_route(nu, z); }

// Optimally truncated sum of an asymptotic series with term ratio
// c(s) / ((s + 1) 2x^2), c quadratic in s. The ratio magnitude falls to a
// valley and then rises for good, so the series is cut at the first growing
// term once the ratio itself has started to increase.
template <class C>
Part truncated_series(C c, ld x) {
  ld term = 1, sum = 1, max_term = 1, trunc = 0;
  const ld two_x2 = 2 * x * x;
  auto ratio = [&](int s) { return c(static_cast<ld>(s)) / ((s + 1) * two_x2); };
  for (int s = 0; s < 1000000; ++s) {
    const ld r = ratio(s);
    const ld next = term * r;
    if (next == 0) {
      trunc = 0;
      break;
    }
    const bool rising = std::fabs(ratio(s + 1)) >= std::fabs(r);
    if (rising && std::fabs(next) >= std::fabs(term)) {
      trunc = std::fabs(term);
      break;
    }
    sum += next;
    term = next;
    max_term = std::max(max_term, std::fabs(term));
    if (rising && std::fabs(term) < kEpsL * std::fabs(sum)) {
      trunc = std::fabs(term);
      break;
    }
  }
  if (sum == 0) return {-kInf, 0, 0};
  return {std::log(std::fabs(sum)), sum > 0 ? 1 : -1,
          (trunc + 4 * kEpsL * max_term) / std::fabs(sum)};
}

// e^{-x^2/4} x^nu sum_s (-1)^s (-nu)_{2s} / (s! (2x^2)^s), x > 0.
Part decaying_expansion(ld nu, ld x) {
  Part p = truncated_series([nu](ld s) { return -(2 * s - nu) * (2 * s + 1 - nu); }, x);
  p.log_abs += -0.25L * x * x + nu * std::log(x);
  return p;
}

// e^{x^2/4} x^{-nu-1} sum_s (nu+1)_{2s} / (s! (2x^2)^s), x > 0.
Part growing_expansion(ld nu, ld x) {
  Part p = truncated_series([nu](ld s) { return (nu + 1 + 2 * s) * (nu + 2 + 2 * s); }, x);
  p.log_abs += 0.25L * x * x - (nu + 1) * std::log(x);
  return p;
}

Part asymptotic_route(ld nu, ld z) {
  if (z > 0) return decaying_expansion(nu, z);
  const ld x = -z;
  Part first = decaying_expansion(nu, x);
  const ld c = special::cos_pi(nu);
  if (c == 0) {
    first = {};
  } else {
    first.log_abs += std::log(std::fabs(c));
    first.sign *= c > 0 ? 1 : -1;
  }
  const special::LogValue rg = special::reciprocal_gamma(-nu);
  Part second;
  if (rg.sign != 0) {
    second = growing_expansion(nu, x);
    second.log_abs += kLnSqrt2Pi + rg.log_abs;
    second.sign *= rg.sign;
  }
  return add(first, second);
}

struct Routed {
  Part part;
  PcfRegime regime;
};

// Beyond the switchover the asymptotic expansion is used unless its own
// truncation estimate is worse than the non-asymptotic route, which happens
// close to the radius for moderate nu on the negative axis.
Routed evaluate(ld nu, ld z) {
  const bool nonpositive = z <= 0;
  const PcfRegime near = nonpositive ? PcfRegime::series : PcfRegime::integral;
  if (std::fabs(static_cast<double>(z)) < pcf_switchover_radius(static_cast<double>(nu)))
    return {series_route(nu, z), near};
  Part a = asymptotic_route(nu, z);
  if (a.rel_err <= 1e-13L) return {a, PcfRegime::asymptotic};
  Part s = series_route(nu, z);
  if (s.rel_err < a.rel_err) return {s, near};
  return {a, PcfRegime::asymptotic};
}

}  // namespace

const char* to_string(PcfRegime regime) {
  switch (regime) {
    case PcfRegime::series: return "series";
    case PcfRegime::integral: return "integral";
    case PcfRegime::asymptotic: return "asymptotic";
  }
  return "unknown";
}

double pcf_switchover_radius(double nu) { return std::max(8.0, 2.0 * std::sqrt(std::fabs(nu)) + 4.0); }

PcfValue pcf_d(double nu, double z) {
  check_domain(nu, z);
  const Routed r = evaluate(nu, z);
  return finish(r.part, r.regime);
}

PcfValue pcf_d_deriv(double nu, double z) {
  check_domain(nu, z);
  const Routed d = evaluate(nu, z);
  Part first = d.part;
  if (z == 0.0) {
    first = {};
  } else {
    first.log_abs += std::log(std::fabs(0.5L * z));
    first.sign *= z > 0 ? -1 : 1;
  }
  Part second;
  if (nu != 0.0) {
    second = evaluate(static_cast<ld>(nu) - 1, z).part;
    second.log_abs += std::log(std::fabs(static_cast<ld>(nu)));
    second.sign *= nu > 0 ? 1 : -1;
  }
  return finish(add(first, second), d.regime);
}

PcfValue pcf_d_asymptotic(double nu, double z) {
  check_domain(nu, z);
  if (std::fabs(z) < pcf_switchover_radius(nu)) {
    std::ostringstream os;
    os << "asymptotic expansion requested at |z| = " << std::fabs(z)
       << " below the switchover radius " << pcf_switchover_radius(nu);
    throw Error(ErrorKind::domain, os.str());
  }
  return finish(asymptotic_route(nu, z), PcfRegime::asymptotic);
}

PcfValue pcf_d_series(double nu, double z) {
  check_domain(nu, z);
  return finish(series_route(nu, z), z <= 0 ? PcfRegime::series : PcfRegime::integral);
}

namespace detail {
PcfValue pcf_d_asymptotic_unchecked(double nu, double z) {
  check_domain(nu, z);
  if (z == 0.0) throw Error(ErrorKind::domain, "asymptotic expansion needs z != 0");
  return finish(asymptotic_route(nu, z), PcfRegime::asymptotic);
}
}  // namespace detail

}  // namespace tunnelsplit
