#include "tunnelsplit/error.hpp"

namespace tunnelsplit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::schema: return "schema";
    case ErrorKind::configuration: return "configuration";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::domain: return "domain";
    case ErrorKind::numerical: return "numerical";
    case ErrorKind::out_of_regime: return "out_of_regime";
    case ErrorKind::model_assumption: return "model_assumption";
    case ErrorKind::shape: return "shape";
    case ErrorKind::not_a_barrier: return "not_a_barrier";
    case ErrorKind::non_smooth: return "non_smooth";
    case ErrorKind::bracketing: return "bracketing";
    case ErrorKind::pairing: return "pairing";
    case ErrorKind::degeneracy_structure: return "degeneracy_structure";
    case ErrorKind::indeterminate: return "indeterminate";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

bool Error::is_validation() const noexcept {
  switch (kind_) {
    case ErrorKind::invalid_input:
    case ErrorKind::schema:
    case ErrorKind::configuration:
    case ErrorKind::precondition:
      return true;
    default:
      return false;
  }
}

}  // namespace tunnelsplit
