#pragma once

// Collision model: a system qubit meets a stream of fresh environment qubits,
// all prepared in the same reservoir state, each through the same two-qubit
// unitary cos(eta) I + i sin(eta) V with V = SWAP or CNOT.

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "qcm/channels.hpp"
#include "qcm/qubit.hpp"

namespace qcm {

enum class Interaction {
  PartialSwap,
  CnotTarget,   // system qubit is the CNOT target, environment controls
  CnotControl,  // system qubit is the CNOT control
};

std::string_view to_string(Interaction family);
/// Accepts "swap", "cnot-target", "cnot-control".
Interaction parse_interaction(std::string_view name);

class CollisionSpec {
 public:
  /// Requires 0 <= eta <= pi/2 and tau > 0.
  CollisionSpec(Interaction family, double eta, double tau, QubitState reservoir);

  Interaction family() const { return family_; }
  double eta() const { return eta_; }
  double tau() const { return tau_; }
  const QubitState& reservoir() const { return reservoir_; }

  double cos_eta() const;
  double sin_eta() const;

 private:
  Interaction family_;
  double eta_;
  double tau_;
  QubitState reservoir_;
};

struct DiscreteTrajectory {
  std::vector<QubitState> states;         // states[k]: system after k collisions
  std::vector<QubitState> reservoir_out;  // reservoir_out[k]: environment qubit k+1 after its collision
};

struct CollisionResult {
  QubitState system;
  QubitState environment;
};

Mat4c swap_gate();
/// CNOT on system (x) environment with the given control slot.
Mat4c cnot_gate(Slot control);

TwoQubitUnitary build_unitary(const CollisionSpec& spec);

/// Tr_env and Tr_sys of U (rho (x) xi) U^dagger.
CollisionResult collide(const TwoQubitUnitary& u, const QubitState& system,
                        const QubitState& environment);

/// X -> Tr_env[U (X (x) xi) U^dagger], linear in X.
ChannelAction collision_action(const TwoQubitUnitary& u, const QubitState& environment);

/// Tomography of the system map over the full two-qubit collision.
TransferMatrix oracle_map(const CollisionSpec& spec);

/// Closed-form system map of one collision.
TransferMatrix induced_map(const CollisionSpec& spec);

DiscreteTrajectory simulate_discrete(const CollisionSpec& spec, const QubitState& initial,
                                     std::size_t n);

/// Largest Bloch distance to the reservoir over the final system state and
/// every outgoing environment qubit.
double homogenization_delta(const DiscreteTrajectory& traj, const QubitState& reservoir);

}  // namespace qcm
