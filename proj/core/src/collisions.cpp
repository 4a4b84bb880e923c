#include "qcm/collisions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "qcm/errors.hpp"

namespace qcm {

std::string_view to_string(Interaction family) {
  switch (family) {
    case Interaction::PartialSwap:
      return "swap";
    case Interaction::CnotTarget:
      return "cnot-target";
    case Interaction::CnotControl:
      return "cnot-control";
  }
  return "unknown";
}

Interaction parse_interaction(std::string_view name) {
  if (name == "swap") return Interaction::PartialSwap;
  if (name == "cnot-target") return Interaction::CnotTarget;
  if (name == "cnot-control") return Interaction::CnotControl;
  throw InvalidArgument("unknown interaction '" + std::string(name) +
                        "' (expected swap, cnot-target or cnot-control)");
}

CollisionSpec::CollisionSpec(Interaction family, double eta, double tau, QubitState reservoir)
    : family_(family), eta_(eta), tau_(tau), reservoir_(reservoir) {
  if (!(eta >= 0.0 && eta <= std::numbers::pi / 2)) {
    std::ostringstream os;
    os << "mixing angle eta = " << eta << " outside [0, pi/2]";
    throw InvalidArgument(os.str());
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    std::ostringstream os;
    os << "collision period tau = " << tau << " must be positive";
    throw InvalidArgument(os.str());
  }
}

double CollisionSpec::cos_eta() const { return std::cos(eta_); }
double CollisionSpec::sin_eta() const { return std::sin(eta_); }

Mat4c swap_gate() {
  Mat4c s = Mat4c::Zero();
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

Mat4c cnot_gate(Slot control) {
  Mat2c p0 = Mat2c::Zero();
  Mat2c p1 = Mat2c::Zero();
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  if (control == Slot::System) {
    return kron(p0, pauli(0)) + kron(p1, pauli(1));
  }
  return kron(pauli(0), p0) + kron(pauli(1), p1);
}

TwoQubitUnitary build_unitary(const CollisionSpec& spec) {
  Mat4c gate;
  switch (spec.family()) {
    case Interaction::PartialSwap:
      gate = swap_gate();
      break;
    case Interaction::CnotTarget:
      gate = cnot_gate(Slot::Environment);
      break;
    case Interaction::CnotControl:
      gate = cnot_gate(Slot::System);
      break;
  }
  const cplx i(0.0, 1.0);
  return TwoQubitUnitary(spec.cos_eta() * Mat4c::Identity() + i * spec.sin_eta() * gate);
}

CollisionResult collide(const TwoQubitUnitary& u, const QubitState& system,
                        const QubitState& environment) {
  const TwoQubitState joint = tensor(bloch_to_density(system), bloch_to_density(environment));
  const Mat4c& um = u.matrix();
  const TwoQubitState out(um * joint.matrix() * um.adjoint());
  return {density_to_bloch(partial_trace(out, Slot::System)),
          density_to_bloch(partial_trace(out, Slot::Environment))};
}

ChannelAction collision_action(const TwoQubitUnitary& u, const QubitState& environment) {
  return [um = u.matrix(), xi = bloch_to_density(environment).matrix()](const Mat2c& x) {
    return partial_trace(Mat4c(um * kron(x, xi) * um.adjoint()), Slot::System);
  };
}

TransferMatrix oracle_map(const CollisionSpec& spec) {
  return tomography(collision_action(build_unitary(spec), spec.reservoir()));
}

TransferMatrix induced_map(const CollisionSpec& spec) {
  const double c = spec.cos_eta();
  const double s = spec.sin_eta();
  const Vec3& t = spec.reservoir().bloch();
  Mat4 m = Mat4::Identity();
  switch (spec.family()) {
    case Interaction::PartialSwap: {
      // r' = c^2 r + s^2 t - 2cs t x r
      const double k = 2.0 * c * s;
      m.block<3, 1>(1, 0) = 2.0 * s * s * t;
      m.bottomRightCorner<3, 3>() << c * c, k * t.z(), -k * t.y(),
                                     -k * t.z(), c * c, k * t.x(),
                                     k * t.y(), -k * t.x(), c * c;
      break;
    }
    case Interaction::CnotTarget: {
      const double xi11 = spec.reservoir().population_one();
      const double a = 1.0 - 2.0 * s * s * xi11;
      const double b = 2.0 * c * s * xi11;
      m.block<2, 2>(2, 2) << a, b, -b, a;
      break;
    }
    case Interaction::CnotControl: {
      const double sx = spec.reservoir().sigma_x_expectation();
      const double a = c * c + s * s * sx;
      const double b = c * s * (1.0 - sx);
      m.block<2, 2>(1, 1) << a, b, -b, a;
      break;
    }
  }
  return TransferMatrix(m);
}

DiscreteTrajectory simulate_discrete(const CollisionSpec& spec, const QubitState& initial,
                                     std::size_t n) {
  const TwoQubitUnitary u = build_unitary(spec);
  DiscreteTrajectory traj;
  traj.states.reserve(n + 1);
  traj.reservoir_out.reserve(n);
  traj.states.push_back(initial);
  for (std::size_t k = 0; k < n; ++k) {
    const CollisionResult r = collide(u, traj.states.back(), spec.reservoir());
    traj.states.push_back(r.system);
    traj.reservoir_out.push_back(r.environment);
  }
  return traj;
}

double homogenization_delta(const DiscreteTrajectory& traj, const QubitState& reservoir) {
  if (traj.states.empty()) {
    throw InvalidArgument("homogenization_delta: empty trajectory");
  }
  const Vec3& t = reservoir.bloch();
  double delta = (traj.states.back().bloch() - t).norm();
  for (const QubitState& env : traj.reservoir_out) {
    delta = std::max(delta, (env.bloch() - t).norm());
  }
  return delta;
}

}  // namespace qcm
