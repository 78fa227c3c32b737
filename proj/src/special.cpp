#include "tunnelsplit/special.hpp"

#include <cmath>
#include <limits>

#include "tunnelsplit/error.hpp"

namespace tunnelsplit::special {
namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

}  // namespace

long double sin_pi(long double x) {
  long double r = x - 2.0L * std::nearbyint(0.5L * x);  // r in [-1, 1]
  if (r > 0.5L) r = 1.0L - r;
  if (r < -0.5L) r = -1.0L - r;
  if (r == 0.0L) return 0.0L;
  return std::sin(kPi * r);
}

long double cos_pi(long double x) { return sin_pi(x + 0.5L); }

long double log_gamma_positive(long double x) {
  if (!(x > 0)) throw Error(ErrorKind::domain, "log_gamma_positive needs x > 0");
#if defined(__GLIBC__)
  int s = 0;
  return ::lgammal_r(x, &s);
#else
  return std::lgamma(x);
#endif
}

LogValue reciprocal_gamma(long double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::domain, "reciprocal_gamma of a non-finite value");
  if (x >= 0.5L) return {-log_gamma_positive(x), 1};
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi, with 1 - x > 1/2.
  const long double s = sin_pi(x);
  if (s == 0.0L) return {-std::numeric_limits<long double>::infinity(), 0};
  return {std::log(std::fabs(s)) + log_gamma_positive(1.0L - x) - std::log(kPi), s > 0 ? 1 : -1};
}

long double log_factorial(int k) {
  if (k < 0) throw Error(ErrorKind::domain, "log_factorial of a negative integer");
  return log_gamma_positive(static_cast<long double>(k) + 1.0L);
}

}  // namespace tunnelsplit::special
