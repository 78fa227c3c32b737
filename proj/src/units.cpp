#include "tunnelsplit/units.hpp"

#include "tunnelsplit/error.hpp"

namespace tunnelsplit {

void Units::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0; };
  if (!ok(hbar)) throw Error(ErrorKind::invalid_input, "hbar must be finite and positive");
  if (!ok(mass)) throw Error(ErrorKind::invalid_input, "mass must be finite and positive");
  if (!ok(omega)) throw Error(ErrorKind::invalid_input, "omega must be finite and positive");
}

}  // namespace tunnelsplit
