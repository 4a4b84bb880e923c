#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "qcm/channels.hpp"
#include "qcm/lindblad.hpp"
#include "qcm/semigroup.hpp"

namespace qcm::cli {
namespace {

constexpr double kOracleTolerance = 1e-12;
constexpr double kInterpolationTolerance = 1e-10;
constexpr double kSemigroupTolerance = 1e-10;
constexpr double kChoiTolerance = 1e-12;
constexpr double kRateTolerance = 1e-12;
constexpr double kGeneratorTolerance = 1e-9;
constexpr int kSemigroupSamples = 200;
constexpr int kChoiSamples = 41;
constexpr std::uint64_t kCheckSeed = 20040117;

// +0.0 maps -0.0 to 0.0.
nlohmann::ordered_json vec_json(const Vec3& v) { return {v[0] + 0.0, v[1] + 0.0, v[2] + 0.0}; }

nlohmann::ordered_json mat_json(const Mat3& m) {
  return {vec_json(m.row(0)), vec_json(m.row(1)), vec_json(m.row(2))};
}

void write_row(std::ostream& out, const char* kind, long long step, double time,
               const CollisionSpec& spec, const Vec3& r) {
  const double purity = 0.5 + 2.0 * r.squaredNorm();
  out << fmt::format("{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", kind, step, time,
                     r.x(), r.y(), r.z(), purity, distance_to_fixed_point(spec, r));
}

CollisionRates injected(CollisionRates rates, const CheckOptions& options) {
  if (!options.inject_gamma2_violation) {
    return rates;
  }
  std::visit(
      [](auto& r) {
        if constexpr (std::is_same_v<std::decay_t<decltype(r)>, HomogenizationRates>) {
          r.gamma2 *= 0.5;
        } else {
          r.gamma *= 0.5;
        }
      },
      rates);
  return rates;
}

}  // namespace

double distance_to_fixed_point(const CollisionSpec& spec, const Vec3& r) {
  switch (spec.family()) {
    case Interaction::PartialSwap:
      return (r - spec.reservoir().bloch()).norm();
    case Interaction::CnotTarget:
      return std::hypot(r.y(), r.z());
    case Interaction::CnotControl:
      return std::hypot(r.x(), r.y());
  }
  return 0.0;
}

void write_trajectory_csv(const RunConfig& cfg, std::ostream& out) {
  const CollisionSpec spec = cfg.spec();
  const QubitState initial = cfg.initial_state();
  const double dt = cfg.sample_step();
  const auto n = static_cast<std::size_t>(cfg.collisions);
  // Rates first: a non-invertible regime aborts before any output.
  const CollisionRates rates = collision_rates(spec);

  out << kCsvHeader << '\n';
  const DiscreteTrajectory traj = simulate_discrete(spec, initial, n);
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    write_row(out, "discrete", static_cast<long long>(k), static_cast<double>(k) * spec.tau(), spec,
              traj.states[k].bloch());
  }
  const double horizon = static_cast<double>(n) * spec.tau();
  const auto samples = static_cast<long long>(std::floor(horizon / dt * (1.0 + 1e-12)));
  for (long long k = 0; k <= samples; ++k) {
    const double t = static_cast<double>(k) * dt;
    write_row(out, "continuous", k, t, spec, apply_bloch(continuous_map(rates, t), initial.bloch()));
  }
}

nlohmann::ordered_json rates_report(const RunConfig& cfg) {
  const CollisionSpec spec = cfg.spec();
  nlohmann::ordered_json report;
  if (spec.family() == Interaction::PartialSwap) {
    const HomogenizationRates r = homogenization_rates(spec);
    report["gamma1"] = r.gamma1;
    report["gamma2"] = r.gamma2;
    report["omega"] = r.omega;
  } else {
    const DecoherenceRates r = decoherence_rates(spec);
    report["gamma"] = r.gamma;
    report["omega"] = r.omega;
    report["axis"] = r.axis == Axis::X ? "x" : "z";
  }
  return report;
}

nlohmann::ordered_json lindblad_report(const RunConfig& cfg) {
  const CollisionSpec spec = cfg.spec();
  const LindbladForm l = lindblad_from_generator(generator_analytic(collision_rates(spec)));
  const GksVerdict verdict = gks_positivity(l);
  nlohmann::ordered_json report;
  report["h"] = vec_json(l.h());
  report["d"] = mat_json(l.d());
  report["e"] = mat_json(l.e());
  report["c_eigenvalues"] = vec_json(verdict.eigenvalues);
  report["completely_positive"] = verdict.completely_positive;
  return report;
}

std::vector<CheckResult> run_checks(const RunConfig& cfg, const CheckOptions& options) {
  const CollisionSpec spec = cfg.spec();
  const double tau = spec.tau();
  const CollisionRates rates = injected(collision_rates(spec), options);
  const TransferMatrix e = induced_map(spec);
  std::vector<CheckResult> results;

  const double oracle = max_abs_diff(oracle_map(spec).matrix(), e.matrix());
  results.push_back({"oracle_equivalence", oracle <= kOracleTolerance, true, oracle, kOracleTolerance});

  double interp = 0.0;
  const auto steps = static_cast<std::uint64_t>(std::max<long long>(cfg.collisions, 1));
  for (std::uint64_t k = 1; k <= steps; ++k) {
    interp = std::max(interp, max_abs_diff(power(e, k).matrix(),
                                           continuous_map(rates, static_cast<double>(k) * tau).matrix()));
  }
  results.push_back({"discrete_continuous", interp <= kInterpolationTolerance, true, interp,
                     kInterpolationTolerance});

  std::mt19937_64 rng(kCheckSeed);
  std::uniform_real_distribution<double> when(0.0, 10.0 * tau);
  double semigroup = 0.0;
  for (int i = 0; i < kSemigroupSamples; ++i) {
    const double t = when(rng);
    const double s = when(rng);
    semigroup = std::max(semigroup, semigroup_defect(rates, t, s));
  }
  results.push_back({"semigroup_law", semigroup <= kSemigroupTolerance, true, semigroup, kSemigroupTolerance});

  double min_eig = 1.0;
  for (int i = 0; i < kChoiSamples; ++i) {
    const double t = 0.25 * tau * i;
    min_eig = std::min(min_eig, is_completely_positive(continuous_map(rates, t)).min_eigenvalue);
  }
  results.push_back({"complete_positivity", min_eig >= -kChoiTolerance, true, std::max(0.0, -min_eig),
                     kChoiTolerance});

  if (const auto* h = std::get_if<HomogenizationRates>(&rates)) {
    const double excess = std::max(0.0, h->gamma1 - 2.0 * h->gamma2);
    results.push_back({"rate_inequality", excess <= kRateTolerance, true, excess, kRateTolerance});
  } else {
    results.push_back({"rate_inequality", true, false, 0.0, kRateTolerance});
  }

  const double gen = max_abs_diff(generator_numeric(e, tau).matrix(), generator_analytic(rates).matrix());
  results.push_back({"generator_agreement", gen <= kGeneratorTolerance, true, gen, kGeneratorTolerance});
  return results;
}

nlohmann::ordered_json check_report(const RunConfig& cfg, const std::vector<CheckResult>& results) {
  nlohmann::ordered_json report;
  report["interaction"] = *cfg.interaction;
  report["checks"] = nlohmann::ordered_json::array();
  bool all = true;
  for (const CheckResult& r : results) {
    nlohmann::ordered_json item;
    item["name"] = r.name;
    item["passed"] = r.passed;
    item["applicable"] = r.applicable;
    item["defect"] = r.defect;
    item["tolerance"] = r.tolerance;
    report["checks"].push_back(item);
    all = all && r.passed;
  }
  report["all_passed"] = all;
  return report;
}

}  // namespace qcm::cli
