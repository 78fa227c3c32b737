#pragma once

#include <cmath>
#include <utility>

namespace tunnelsplit::numeric {

// Bisection on the sign of f. Requires sign(f(lo)) != sign(f(hi)), neither
// zero. Runs until the bracket cannot be split further in double precision.
template <class F>
double bisect(F&& f, double lo, double hi, double flo) {
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= std::fmin(lo, hi) || mid >= std::fmax(lo, hi)) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace tunnelsplit::numeric
