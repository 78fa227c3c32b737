#include "tunnelsplit/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "tunnelsplit/error.hpp"

namespace tunnelsplit {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& msg) { throw Error(ErrorKind::schema, msg); }

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where + " must be an object");
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) schema_error("unknown key '" + it.key() + "' in " + where);
}

double number(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) schema_error(where + " is missing '" + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) schema_error(where + "." + key + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) schema_error(where + "." + key + " must be finite");
  return d;
}

double number_or(const json& j, const std::string& key, const std::string& where, double fallback) {
  return j.contains(key) ? number(j, key, where) : fallback;
}

PotentialSpec parse_potential(const json& j) {
  const std::string where = "potential";
  require_object(j, where);
  if (!j.contains("kind") || !j.at("kind").is_string()) schema_error("potential.kind must be a string");
  const std::string kind = j.at("kind").get<std::string>();
  PotentialSpec p;
  if (kind == "piecewise_quadratic") {
    p.kind = PotentialKind::piecewise_quadratic;
    reject_unknown(j, {"kind", "alpha", "beta", "n", "epsilon"}, where);
    p.alpha = number(j, "alpha", where);
    const bool has_beta = j.contains("beta"), has_n = j.contains("n");
    if (has_beta == has_n) schema_error("piecewise_quadratic needs exactly one of 'beta' or 'n'");
    if (has_beta) {
      if (j.contains("epsilon")) schema_error("'epsilon' goes with 'n', not with 'beta'");
      p.beta = number(j, "beta", where);
    } else {
      const json& n = j.at("n");
      if (!n.is_number_integer()) schema_error("potential.n must be an integer");
      p.n = n.get<int>();
      p.epsilon = number_or(j, "epsilon", where, 0.0);
    }
  } else if (kind == "quartic_tilt") {
    p.kind = PotentialKind::quartic_tilt;
    reject_unknown(j, {"kind", "lambda", "eta", "s"}, where);
    p.lambda = number(j, "lambda", where);
    p.eta = number(j, "eta", where);
    p.s = number_or(j, "s", where, 0.0);
  } else if (kind == "polynomial") {
    p.kind = PotentialKind::polynomial;
    reject_unknown(j, {"kind", "coefficients"}, where);
    if (!j.contains("coefficients") || !j.at("coefficients").is_array())
      schema_error("potential.coefficients must be an array");
    for (const auto& c : j.at("coefficients")) {
      if (!c.is_number()) schema_error("potential.coefficients must hold numbers");
      p.coefficients.push_back(c.get<double>());
    }
  } else {
    schema_error("unknown potential kind '" + kind + "'");
  }
  return p;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw Error(ErrorKind::invalid_input, "output format must be 'json' or 'csv', got '" + name + "'");
}

RunConfig parse_config(const json& doc) {
  require_object(doc, "config");
  reject_unknown(doc, {"potential", "units", "output"}, "config");
  if (!doc.contains("potential")) schema_error("config is missing 'potential'");
  RunConfig c;
  c.potential = parse_potential(doc.at("potential"));
  if (doc.contains("units")) {
    const json& u = doc.at("units");
    require_object(u, "units");
    reject_unknown(u, {"hbar", "mass", "omega"}, "units");
    c.units.hbar = number_or(u, "hbar", "units", 1.0);
    c.units.mass = number_or(u, "mass", "units", 1.0);
    c.units.omega = number_or(u, "omega", "units", 1.0);
  }
  if (doc.contains("output")) {
    const json& o = doc.at("output");
    require_object(o, "output");
    reject_unknown(o, {"format", "path"}, "output");
    if (o.contains("format")) {
      if (!o.at("format").is_string()) schema_error("output.format must be a string");
      try {
        c.format = parse_format(o.at("format").get<std::string>());
      } catch (const Error& e) {
        schema_error(e.what());
      }
    }
    if (o.contains("path")) {
      if (!o.at("path").is_string()) schema_error("output.path must be a string");
      c.output_path = o.at("path").get<std::string>();
    }
  }
  c.units.validate();
  if (c.potential.kind == PotentialKind::piecewise_quadratic) {
    if (!(c.potential.alpha > 0)) throw Error(ErrorKind::invalid_input, "alpha must be positive");
    if (c.potential.beta && *c.potential.beta < c.potential.alpha)
      throw Error(ErrorKind::invalid_input, "beta must not be smaller than alpha");
    if (c.potential.n && (*c.potential.n < 0 || *c.potential.n + c.potential.epsilon < 0))
      throw Error(ErrorKind::invalid_input, "n + epsilon must be non-negative");
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    schema_error(std::string("malformed JSON in '") + path + "': " + e.what());
  }
  return parse_config(doc);
}

PotentialModel build_model(const RunConfig& c) {
  const PotentialSpec& p = c.potential;
  switch (p.kind) {
    case PotentialKind::piecewise_quadratic: {
      double beta;
      if (p.beta) {
        beta = *p.beta;
      } else {
        const double l = c.units.oscillator_length();
        beta = std::sqrt(p.alpha * p.alpha + 2.0 * (*p.n + p.epsilon) * l * l);
      }
      return PotentialModel::piecewise_quadratic(p.alpha, beta, c.units);
    }
    case PotentialKind::quartic_tilt:
      return PotentialModel::quartic_tilt(p.lambda, p.eta, p.s, c.units);
    case PotentialKind::polynomial:
      return PotentialModel::polynomial(p.coefficients, c.units);
  }
  throw Error(ErrorKind::schema, "unknown potential kind");
}

nlohmann::json to_json(const PotentialSpec& p) {
  json j;
  j["kind"] = to_string(p.kind);
  switch (p.kind) {
    case PotentialKind::piecewise_quadratic:
      j["alpha"] = p.alpha;
      if (p.beta) j["beta"] = *p.beta;
      if (p.n) {
        j["n"] = *p.n;
        j["epsilon"] = p.epsilon;
      }
      break;
    case PotentialKind::quartic_tilt:
      j["lambda"] = p.lambda;
      j["eta"] = p.eta;
      j["s"] = p.s;
      break;
    case PotentialKind::polynomial:
      j["coefficients"] = p.coefficients;
      break;
  }
  return j;
}

nlohmann::json to_json(const Units& u) {
  return {{"hbar", u.hbar}, {"mass", u.mass}, {"omega", u.omega}};
}

}  // namespace tunnelsplit
