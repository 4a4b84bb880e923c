#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"

namespace qcm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDiagnosticFailure = 1,
  kConfigError = 2,
  kNonInvertible = 3,
};

inline constexpr const char* kCsvHeader = "kind,step,time,rx,ry,rz,purity,dist_to_fixed_point";

/// Writes the discrete and continuous trajectory CSV.
void write_trajectory_csv(const RunConfig& cfg, std::ostream& out);

nlohmann::ordered_json rates_report(const RunConfig& cfg);
nlohmann::ordered_json lindblad_report(const RunConfig& cfg);

struct CheckOptions {
  bool inject_gamma2_violation = false;
};

struct CheckResult {
  std::string name;
  bool passed;
  bool applicable;
  double defect;
  double tolerance;
};

/// Runs the six consistency checks; order is fixed.
std::vector<CheckResult> run_checks(const RunConfig& cfg, const CheckOptions& options);
nlohmann::ordered_json check_report(const RunConfig& cfg, const std::vector<CheckResult>& results);

/// Distance from r to the asymptotic state of the family (the reservoir for
/// swap, the projection onto the dephasing axis for CNOT).
double distance_to_fixed_point(const CollisionSpec& spec, const Vec3& r);

}  // namespace qcm::cli
