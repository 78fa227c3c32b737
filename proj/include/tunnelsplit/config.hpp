#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tunnelsplit/potential.hpp"

namespace tunnelsplit {

// Potential section of a run configuration, as written.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::piecewise_quadratic;
  // piecewise_quadratic: alpha with beta, or alpha with n (+ epsilon).
  double alpha = 0.0;
  std::optional<double> beta;
  std::optional<int> n;
  double epsilon = 0.0;
  // quartic_tilt
  double lambda = 0.0;
  double eta = 0.0;
  double s = 0.0;
  // polynomial, ascending powers
  std::vector<double> coefficients;
};

enum class OutputFormat { json, csv };

struct RunConfig {
  PotentialSpec potential;
  Units units;
  std::optional<OutputFormat> format;
  std::optional<std::string> output_path;
};

// Strict: unknown keys, wrong types and missing fields throw schema.
RunConfig parse_config(const nlohmann::json& doc);
// Reads and parses a file; unreadable files and malformed JSON throw schema.
RunConfig load_config(const std::string& path);

PotentialModel build_model(const RunConfig& config);

nlohmann::json to_json(const PotentialSpec& spec);
nlohmann::json to_json(const Units& units);

OutputFormat parse_format(const std::string& name);

}  // namespace tunnelsplit
