#pragma once

namespace tunnelsplit {

// Which evaluation route produced a parabolic cylinder value.
enum class PcfRegime {
  series,      // confluent hypergeometric expansion about z = 0 (z <= 0)
  integral,    // positive integral representation plus upward recurrence (z > 0)
  asymptotic,  // large-|z| expansion, optimally truncated
};

const char* to_string(PcfRegime regime);

struct PcfValue {
  double value = 0.0;   // may under/overflow; log_abs and sign are authoritative
  double log_abs = 0.0;
  int sign = 0;         // 0 for an exact zero
  PcfRegime regime = PcfRegime::series;
  double est_error = 0.0;  // relative
};

inline constexpr double kPcfMaxOrder = 40.0;
inline constexpr double kPcfMaxArgument = 60.0;

// |z| at and beyond which pcf_d switches to the asymptotic expansion.
double pcf_switchover_radius(double nu);

// Weber function D_nu(z) for |nu| <= 40, |z| <= 60.
PcfValue pcf_d(double nu, double z);

// dD_nu/dz via -z/2 D_nu(z) + nu D_{nu-1}(z).
PcfValue pcf_d_deriv(double nu, double z);

// Asymptotic expansion only; throws domain below the switchover radius.
PcfValue pcf_d_asymptotic(double nu, double z);

// Non-asymptotic route only, at any |z| <= 60.
PcfValue pcf_d_series(double nu, double z);

namespace detail {
// Asymptotic expansion without the radius check, for overlap diagnostics.
PcfValue pcf_d_asymptotic_unchecked(double nu, double z);
}  // namespace detail

}  // namespace tunnelsplit
