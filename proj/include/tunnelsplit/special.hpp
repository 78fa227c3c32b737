#pragma once

namespace tunnelsplit::special {

// Signed magnitude carried as (log|x|, sign) in extended precision.
struct LogValue {
  long double log_abs;
  int sign;  // 0 means exactly zero
};

// sin(pi x) and cos(pi x) with exact zeros at the integers / half-integers.
long double sin_pi(long double x);
long double cos_pi(long double x);

// ln|Gamma(x)| for x > 0.
long double log_gamma_positive(long double x);

// 1/Gamma(x) for any real x, exactly zero at x = 0, -1, -2, ...
LogValue reciprocal_gamma(long double x);

// ln(k!) for k >= 0.
long double log_factorial(int k);

}  // namespace tunnelsplit::special
