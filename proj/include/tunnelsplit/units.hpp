#pragma once

#include <cmath>

namespace tunnelsplit {

// Physical scales. omega is the small-oscillation frequency at the lower
// (right) minimum once a model has been built.
struct Units {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;

  double oscillator_length() const { return std::sqrt(hbar / (mass * omega)); }
  double quantum() const { return hbar * omega; }

  // Throws invalid_input unless all three are finite and positive.
  void validate() const;
};

}  // namespace tunnelsplit
