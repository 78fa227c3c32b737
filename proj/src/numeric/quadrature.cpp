#include "tunnelsplit/numeric/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace tunnelsplit::numeric {
namespace {

constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,  0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,  0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,  0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,  0.000000000000000000000000000000000};
constexpr double kKronrod[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGauss[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel kronrod(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k = fc * kKronrod[7];
  double g = fc * kGauss[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kNodes[j];
    const double s = f(c - dx) + f(c + dx);
    k += kKronrod[j] * s;
    if (j % 2 == 1) g += kGauss[j / 2] * s;
  }
  k *= h;
  g *= h;
  return {a, b, k, std::fabs(k - g)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Panel> panels;
  Panel first = kronrod(f, a, b);
  double total = first.value;
  double err = first.error;
  panels.push(first);
  int count = 1;
  while (err > std::max(opts.abs_tol, opts.rel_tol * std::fabs(total))) {
    if (count >= opts.max_intervals) break;
    Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) break;
    panels.pop();
    Panel left = kronrod(f, worst.a, mid);
    Panel right = kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  err = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  out.value = total;
  out.abs_error = err;
  out.intervals = count;
  out.converged = err <= std::max(opts.abs_tol, opts.rel_tol * std::fabs(total)) ||
                  err <= 64 * std::numeric_limits<double>::epsilon() * std::fabs(total);
  return out;
}

}  // namespace tunnelsplit::numeric
