#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tunnelsplit {

enum class ErrorKind {
  invalid_input,
  schema,
  configuration,
  precondition,
  domain,
  numerical,
  out_of_regime,
  model_assumption,
  shape,
  not_a_barrier,
  non_smooth,
  bracketing,
  pairing,
  degeneracy_structure,
  indeterminate,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  // Bad user input as opposed to a computation that could not be carried out.
  bool is_validation() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace tunnelsplit
