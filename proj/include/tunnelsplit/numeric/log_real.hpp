#pragma once

#include <cmath>
#include <limits>

namespace tunnelsplit::numeric {

// Signed real stored as (log|x|, sign); sign == 0 means exactly zero.
struct LogReal {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static LogReal from_value(double v) {
    if (v == 0.0 || std::isnan(v)) return {};
    return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
  }
  static LogReal from_log(double log_abs, int sign = 1) {
    if (sign == 0) return {};
    return {log_abs, sign > 0 ? 1 : -1};
  }

  bool is_zero() const { return sign == 0; }
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
  LogReal abs() const { return sign == 0 ? LogReal{} : LogReal{log_abs, 1}; }

  friend LogReal operator*(LogReal x, LogReal y) {
    if (x.sign == 0 || y.sign == 0) return {};
    return {x.log_abs + y.log_abs, x.sign * y.sign};
  }
  friend LogReal operator/(LogReal x, LogReal y) {
    if (x.sign == 0) return {};
    return {x.log_abs - y.log_abs, x.sign * y.sign};
  }
  friend LogReal operator-(LogReal x) { return {x.log_abs, -x.sign}; }
  friend LogReal operator+(LogReal x, LogReal y) {
    if (x.sign == 0) return y;
    if (y.sign == 0) return x;
    if (x.log_abs < y.log_abs) std::swap(x, y);
    const double r = std::exp(y.log_abs - x.log_abs);
    if (x.sign == y.sign) return {x.log_abs + std::log1p(r), x.sign};
    if (r == 1.0) return {};
    return {x.log_abs + std::log1p(-r), x.sign};
  }
  friend LogReal operator-(LogReal x, LogReal y) { return x + (-y); }
};

}  // namespace tunnelsplit::numeric
