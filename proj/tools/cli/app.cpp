#include "cli/app.hpp"

#include <algorithm>
#include <fstream>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "qcm/errors.hpp"

namespace qcm::cli {
namespace {

struct FlagValues {
  std::string interaction;
  double eta = 0.0;
  double tau = 0.0;
  std::string reservoir;
  std::string initial;
  long long collisions = 0;
  double dt = 0.0;
  std::string config;
  std::string out;
  bool inject = false;
};

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collision-model open qubit dynamics", "qcm"};
  app.require_subcommand(1);
  app.fallthrough();

  FlagValues f;
  auto* o_interaction = app.add_option("--interaction", f.interaction, "swap | cnot-target | cnot-control");
  auto* o_eta = app.add_option("--eta", f.eta, "Mixing angle in radians, [0, pi/2]");
  auto* o_tau = app.add_option("--tau", f.tau, "Collision period");
  auto* o_reservoir = app.add_option("--reservoir", f.reservoir, "Reservoir Bloch vector x,y,z (|r| <= 1/2)");
  auto* o_initial = app.add_option("--initial", f.initial, "Initial system Bloch vector x,y,z");
  auto* o_collisions = app.add_option("--collisions", f.collisions, "Number of collisions");
  auto* o_dt = app.add_option("--dt", f.dt, "Continuous sampling step (default tau/20)");
  auto* o_config = app.add_option("--config", f.config, "JSON config file; flags override its values");

  auto* simulate = app.add_subcommand("simulate", "Write the discrete and continuous trajectory as CSV");
  simulate->add_option("--out", f.out, "Output CSV path (default: standard output)");
  auto* rates = app.add_subcommand("rates", "Report the continuous-time rates");
  auto* lindblad = app.add_subcommand("lindblad", "Report the Lindblad (GKS) coefficients");
  auto* check = app.add_subcommand("check", "Run the consistency diagnostics");
  check->add_flag("--inject-gamma2-violation", f.inject, "Halve the decoherence rate (negative control)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "qcm: " << one_line(e.what()) << '\n';
    return kConfigError;
  }

  try {
    RunConfig cfg;
    if (o_config->count() > 0) cfg = load_config_file(f.config);
    if (o_interaction->count() > 0) cfg.interaction = f.interaction;
    if (o_eta->count() > 0) cfg.eta = f.eta;
    if (o_tau->count() > 0) cfg.tau = f.tau;
    if (o_reservoir->count() > 0) cfg.reservoir = parse_triple(f.reservoir);
    if (o_initial->count() > 0) cfg.initial = parse_triple(f.initial);
    if (o_collisions->count() > 0) cfg.collisions = f.collisions;
    if (o_dt->count() > 0) cfg.dt = f.dt;
    // Validate the full config before running a command.
    cfg.spec();
    cfg.initial_state();

    if (simulate->parsed()) {
      if (f.out.empty()) {
        write_trajectory_csv(cfg, out);
      } else {
        std::ofstream file(f.out, std::ios::binary);
        if (!file) throw ConfigError("cannot open output file '" + f.out + "'");
        write_trajectory_csv(cfg, file);
      }
      return kSuccess;
    }
    if (rates->parsed()) {
      out << rates_report(cfg).dump(2) << '\n';
      return kSuccess;
    }
    if (lindblad->parsed()) {
      out << lindblad_report(cfg).dump(2) << '\n';
      return kSuccess;
    }
    if (check->parsed()) {
      const std::vector<CheckResult> results = run_checks(cfg, CheckOptions{f.inject});
      const nlohmann::ordered_json report = check_report(cfg, results);
      out << report.dump(2) << '\n';
      return report["all_passed"].get<bool>() ? kSuccess : kDiagnosticFailure;
    }
  } catch (const ConfigError& e) {
    err << "qcm: config error: " << one_line(e.what()) << '\n';
    return kConfigError;
  } catch (const NonInvertibleMap&) {
    err << "qcm: rates diverge: non-invertible collision map\n";
    return kNonInvertible;
  } catch (const BranchAmbiguity& e) {
    err << "qcm: " << one_line(e.what()) << '\n';
    return kNonInvertible;
  } catch (const std::exception& e) {
    err << "qcm: " << one_line(e.what()) << '\n';
    return kDiagnosticFailure;
  }
  return kConfigError;
}

}  // namespace qcm::cli
