#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <vector>

#include "qcm/errors.hpp"

namespace qcm::cli {
namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {"interaction", "eta",        "tau", "reservoir",
                                             "initial",     "collisions", "dt"};
  return keys;
}

double as_number(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) {
    throw ConfigError("config key '" + key + "' must be a number");
  }
  return v.get<double>();
}

Vec3 as_triple(const nlohmann::json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 3) {
    throw ConfigError("config key '" + key + "' must be an array of three numbers");
  }
  Vec3 out;
  for (int k = 0; k < 3; ++k) {
    out[k] = as_number(v[static_cast<std::size_t>(k)], key);
  }
  return out;
}

double parse_double(std::string_view text) {
  // libstdc++ 11 has no floating-point from_chars.
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ConfigError("not a finite number: '" + s + "'");
  }
  return v;
}

}  // namespace

Vec3 parse_triple(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw ConfigError("expected three comma-separated numbers, got '" + std::string(text) + "'");
  }
  return {parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
}

void merge_json(RunConfig& cfg, const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ConfigError("config document must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (known_keys().count(key) == 0) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  if (doc.contains("interaction")) {
    if (!doc["interaction"].is_string()) {
      throw ConfigError("config key 'interaction' must be a string");
    }
    cfg.interaction = doc["interaction"].get<std::string>();
  }
  if (doc.contains("eta")) cfg.eta = as_number(doc["eta"], "eta");
  if (doc.contains("tau")) cfg.tau = as_number(doc["tau"], "tau");
  if (doc.contains("reservoir")) cfg.reservoir = as_triple(doc["reservoir"], "reservoir");
  if (doc.contains("initial")) cfg.initial = as_triple(doc["initial"], "initial");
  if (doc.contains("collisions")) {
    const auto& v = doc["collisions"];
    if (!v.is_number_integer()) {
      throw ConfigError("config key 'collisions' must be an integer");
    }
    cfg.collisions = v.get<long long>();
  }
  if (doc.contains("dt")) cfg.dt = as_number(doc["dt"], "dt");
}

RunConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path.string() + "'");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  RunConfig cfg;
  merge_json(cfg, doc);
  return cfg;
}

CollisionSpec RunConfig::spec() const {
  if (!interaction) throw ConfigError("missing required setting 'interaction'");
  if (!eta) throw ConfigError("missing required setting 'eta'");
  if (collisions < 0) throw ConfigError("'collisions' must be nonnegative");
  if (dt && !(*dt > 0.0)) throw ConfigError("'dt' must be positive");
  try {
    return CollisionSpec(parse_interaction(*interaction), *eta, tau, QubitState(reservoir));
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

QubitState RunConfig::initial_state() const {
  try {
    return QubitState(initial);
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("initial state: ") + e.what());
  }
}

double RunConfig::sample_step() const { return dt.value_or(tau / 20.0); }

}  // namespace qcm::cli
