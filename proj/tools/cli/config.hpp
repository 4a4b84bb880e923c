#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qcm/collisions.hpp"

namespace qcm::cli {

/// Bad or incomplete run configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Settings shared by every subcommand. Values may come from a JSON document
/// and from flags; flags win.
struct RunConfig {
  std::optional<std::string> interaction;
  std::optional<double> eta;
  double tau = 1.0;
  Vec3 reservoir = Vec3::Zero();
  Vec3 initial = Vec3(0.5, 0.0, 0.0);
  long long collisions = 10;
  std::optional<double> dt;

  /// Validated collision spec; throws ConfigError.
  CollisionSpec spec() const;
  QubitState initial_state() const;
  /// Continuous sampling step, tau / 20 unless set.
  double sample_step() const;
};

/// Merges a JSON object into cfg. Unknown keys and wrong types raise
/// ConfigError.
void merge_json(RunConfig& cfg, const nlohmann::json& doc);
RunConfig load_config_file(const std::filesystem::path& path);

/// Parses "x,y,z".
Vec3 parse_triple(std::string_view text);

}  // namespace qcm::cli
