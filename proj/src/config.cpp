#include "cascade/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cascade/errors.hpp"

namespace cascade {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key()))
      throw ConfigError("unknown config key '" + it.key() + "' in " + where);
  }
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError("missing key '" + key + "' in " + where);
  if (!obj[key].is_number()) throw ConfigError("key '" + key + "' in " + where + " must be a number");
  return obj[key].get<double>();
}

FrequencyGrid parse_grid(const json& obj, const std::string& where) {
  reject_unknown_keys(obj, {"start", "stop", "n"}, where);
  const double start = require_number(obj, "start", where);
  const double stop = require_number(obj, "stop", where);
  const double n = require_number(obj, "n", where);
  if (n < 2 || n != static_cast<double>(static_cast<std::size_t>(n)))
    throw ConfigError("key 'n' in " + where + " must be an integer >= 2");
  return FrequencyGrid(start, stop, static_cast<std::size_t>(n));
}

TimeGrid parse_time_grid(const json& obj, const std::string& where) {
  reject_unknown_keys(obj, {"start", "stop", "n"}, where);
  const double start = require_number(obj, "start", where);
  const double stop = require_number(obj, "stop", where);
  const double n = require_number(obj, "n", where);
  if (n < 2 || n != static_cast<double>(static_cast<std::size_t>(n)))
    throw ConfigError("key 'n' in " + where + " must be an integer >= 2");
  return TimeGrid(start, stop, static_cast<std::size_t>(n));
}

EmitterParams parse_emitter(const json& obj, const EmitterParams& base, const std::string& where) {
  reject_unknown_keys(obj, {"gamma_alpha", "gamma_beta", "omega_alpha", "omega_beta", "scale"},
                      where);
  EmitterParams p = base;
  if (obj.contains("gamma_alpha")) p.gamma_alpha = obj["gamma_alpha"].get<double>();
  if (obj.contains("gamma_beta")) p.gamma_beta = obj["gamma_beta"].get<double>();
  if (obj.contains("omega_alpha")) p.omega_alpha = obj["omega_alpha"].get<double>();
  if (obj.contains("omega_beta")) p.omega_beta = obj["omega_beta"].get<double>();
  if (obj.contains("scale")) p.scale = obj["scale"].get<double>();
  p.validate();
  return p;
}

}  // namespace

RunInputs parse_config_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

  reject_unknown_keys(doc,
                      {"gamma_alpha", "gamma_beta", "omega_alpha", "omega_beta", "scale", "grid_k",
                       "grid_q", "time_grid", "polarized"},
                      "config root");

  RunInputs in;
  in.emitter = default_params();
  if (doc.contains("gamma_alpha")) in.emitter.gamma_alpha = doc["gamma_alpha"].get<double>();
  if (doc.contains("gamma_beta")) in.emitter.gamma_beta = doc["gamma_beta"].get<double>();
  if (doc.contains("omega_alpha")) in.emitter.omega_alpha = doc["omega_alpha"].get<double>();
  if (doc.contains("omega_beta")) in.emitter.omega_beta = doc["omega_beta"].get<double>();
  if (doc.contains("scale")) in.emitter.scale = doc["scale"].get<double>();
  in.emitter.validate();

  if (doc.contains("grid_k")) in.grid_k = parse_grid(doc["grid_k"], "grid_k");
  if (doc.contains("grid_q")) in.grid_q = parse_grid(doc["grid_q"], "grid_q");
  if (doc.contains("time_grid")) in.time_grid = parse_time_grid(doc["time_grid"], "time_grid");

  if (doc.contains("polarized")) {
    const json& pol = doc["polarized"];
    reject_unknown_keys(pol, {"branch_h", "branch_v", "delta_fss", "tau_e", "phi"}, "polarized");
    PolarizedCascadeParams pp;
    pp.branch_h = in.emitter;
    pp.branch_v = in.emitter;
    if (pol.contains("branch_h")) pp.branch_h = parse_emitter(pol["branch_h"], in.emitter, "polarized.branch_h");
    if (pol.contains("branch_v")) pp.branch_v = parse_emitter(pol["branch_v"], in.emitter, "polarized.branch_v");
    if (pol.contains("delta_fss")) pp.delta_fss = pol["delta_fss"].get<double>();
    if (pol.contains("tau_e")) pp.tau_e = pol["tau_e"].get<double>();
    if (pol.contains("phi")) pp.phi_override = pol["phi"].get<double>();
    pp.validate();
    in.polarized = pp;
  }
  return in;
}

RunInputs load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_json(ss.str());
}

}  // namespace cascade
