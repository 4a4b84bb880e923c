#include <doctest.h>

#include <numbers>

#include "generators.hpp"
#include "qcm/channels.hpp"
#include "qcm/collisions.hpp"
#include "qcm/errors.hpp"

using namespace qcm;
using qcm::testing::Rng;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// Permutation matrix on the basis |s e> (index 2s + e) exchanging a and b.
Mat4c transposition(int a, int b) {
  Mat4c p = Mat4c::Identity();
  p(a, a) = p(b, b) = 0.0;
  p(a, b) = p(b, a) = 1.0;
  return p;
}

CollisionSpec swap_spec(double eta, const QubitState& xi) {
  return CollisionSpec(Interaction::PartialSwap, eta, 1.0, xi);
}

}  // namespace

TEST_CASE("CollisionSpec validation") {
  CHECK_THROWS_AS(CollisionSpec(Interaction::PartialSwap, -0.1, 1.0, QubitState()), InvalidArgument);
  CHECK_THROWS_AS(CollisionSpec(Interaction::PartialSwap, 1.6, 1.0, QubitState()), InvalidArgument);
  CHECK_THROWS_AS(CollisionSpec(Interaction::PartialSwap, 0.3, 0.0, QubitState()), InvalidArgument);
  CHECK_NOTHROW(CollisionSpec(Interaction::CnotTarget, kHalfPi, 1.0, QubitState()));
  CHECK(parse_interaction("cnot-control") == Interaction::CnotControl);
  CHECK(to_string(Interaction::PartialSwap) == "swap");
  CHECK_THROWS_AS(parse_interaction("iswap"), InvalidArgument);
}

TEST_CASE("gates match explicit basis permutations") {
  CHECK(max_abs_diff(swap_gate(), transposition(1, 2)) == 0.0);
  CHECK(max_abs_diff(cnot_gate(Slot::Environment), transposition(1, 3)) == 0.0);
  CHECK(max_abs_diff(cnot_gate(Slot::System), transposition(2, 3)) == 0.0);
}

TEST_CASE("build_unitary") {
  const cplx i(0, 1);
  CHECK(max_abs_diff(build_unitary(swap_spec(0.0, QubitState())).matrix(), Mat4c(Mat4c::Identity())) == 0.0);
  CHECK(max_abs_diff(build_unitary(swap_spec(kHalfPi, QubitState())).matrix(), Mat4c(i * swap_gate())) <= 1e-15);

  const TwoQubitUnitary u =
      build_unitary(CollisionSpec(Interaction::CnotTarget, std::numbers::pi / 4, 1.0, QubitState()));
  const Mat4c expected = (Mat4c::Identity() + i * transposition(1, 3)) / std::sqrt(2.0);
  CHECK(max_abs_diff(u.matrix(), expected) <= 1e-15);
  CHECK(max_abs_diff(Mat4c(u.matrix() * u.matrix().adjoint()), Mat4c(Mat4c::Identity())) <= 1e-15);
}

TEST_CASE("collide") {
  Rng rng(31);
  const QubitState rho = qcm::testing::random_state(rng);
  const QubitState xi = qcm::testing::random_state(rng);

  const CollisionResult same = collide(TwoQubitUnitary(Mat4c::Identity()), rho, xi);
  CHECK(max_abs_diff(same.system.bloch(), rho.bloch()) <= 1e-15);
  CHECK(max_abs_diff(same.environment.bloch(), xi.bloch()) <= 1e-15);

  const CollisionResult swapped = collide(build_unitary(swap_spec(kHalfPi, xi)), rho, xi);
  CHECK(max_abs_diff(swapped.system.bloch(), xi.bloch()) <= 1e-15);
  CHECK(max_abs_diff(swapped.environment.bloch(), rho.bloch()) <= 1e-15);

  // r' = r/2 + t/2 - t x r with r = x/2, t = z/2 gives (1/4, -1/4, 1/4).
  const QubitState r(0.5, 0, 0);
  const QubitState t(0, 0, 0.5);
  const CollisionSpec spec = swap_spec(std::numbers::pi / 4, t);
  const Vec3 expected(0.25, -0.25, 0.25);
  CHECK(max_abs_diff(collide(build_unitary(spec), r, t).system.bloch(), expected) <= 1e-15);
  CHECK(max_abs_diff(apply(induced_map(spec), r).bloch(), expected) <= 1e-15);
}

TEST_CASE("collide preserves trace and positivity") {
  Rng rng(32);
  for (int n = 0; n < 300; ++n) {
    const CollisionSpec spec = qcm::testing::random_spec(rng, qcm::testing::random_family(rng));
    // QubitState construction enforces |r| <= 1/2 (positivity) for both outputs.
    CHECK_NOTHROW(collide(build_unitary(spec), qcm::testing::random_pure_state(rng), spec.reservoir()));
  }
}

TEST_CASE("induced_map special cases") {
  Rng rng(33);
  const QubitState xi = qcm::testing::random_state(rng);
  CHECK(max_abs_diff(induced_map(swap_spec(0.0, xi)).matrix(), Mat4(Mat4::Identity())) == 0.0);

  const CollisionSpec target(Interaction::CnotTarget, 0.9, 1.0, QubitState(0, 0, 0.5));
  CHECK(max_abs_diff(induced_map(target).matrix(), Mat4(Mat4::Identity())) <= 1e-16);
  CHECK(max_abs_diff(oracle_map(target).matrix(), Mat4(Mat4::Identity())) <= 1e-15);

  const CollisionSpec control(Interaction::CnotControl, 0.9, 1.0, QubitState(0.5, 0, 0));
  CHECK(max_abs_diff(induced_map(control).matrix(), Mat4(Mat4::Identity())) <= 1e-15);
  CHECK(max_abs_diff(oracle_map(control).matrix(), Mat4(Mat4::Identity())) <= 1e-15);
}

TEST_CASE("closed-form maps agree with tomography of the two-qubit collision") {
  Rng rng(34);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const CollisionSpec spec = qcm::testing::random_spec(rng, qcm::testing::random_family(rng));
    worst = std::max(worst, max_abs_diff(induced_map(spec).matrix(), oracle_map(spec).matrix()));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("the reservoir state is a fixed point of the partial swap") {
  Rng rng(35);
  for (int n = 0; n < 300; ++n) {
    const QubitState xi = qcm::testing::random_state(rng);
    const CollisionSpec spec = swap_spec(qcm::testing::uniform(rng, 0.0, kHalfPi), xi);
    CHECK(max_abs_diff(apply(induced_map(spec), xi).bloch(), xi.bloch()) <= 1e-13);
    const CollisionResult both = collide(build_unitary(spec), xi, xi);
    CHECK(max_abs_diff(both.system.bloch(), xi.bloch()) <= 1e-13);
    CHECK(max_abs_diff(both.environment.bloch(), xi.bloch()) <= 1e-13);
  }
}

TEST_CASE("partial swap contracts toward the reservoir") {
  Rng rng(36);
  for (int n = 0; n < 500; ++n) {
    const double eta = qcm::testing::uniform(rng, 1e-3, kHalfPi);
    const QubitState xi = qcm::testing::random_state(rng);
    const QubitState r = qcm::testing::random_state(rng);
    const double c = std::cos(eta);
    const double s = std::sin(eta);
    const double w = xi.bloch().norm();
    const double factor = std::max(c * c, c * std::sqrt(c * c + 4 * s * s * w * w));
    CHECK(factor <= c * (1 + 1e-15));
    const Vec3 out = apply(induced_map(swap_spec(eta, xi)), r).bloch();
    CHECK((out - xi.bloch()).norm() <= factor * (r.bloch() - xi.bloch()).norm() * (1 + 1e-10) + 1e-16);
  }
}

TEST_CASE("CNOT-target contraction equals sqrt(1 - 4 s^2 xi11 xi00)") {
  Rng rng(37);
  for (int n = 0; n < 300; ++n) {
    const CollisionSpec spec = qcm::testing::random_spec(rng, Interaction::CnotTarget);
    const Eigen::Matrix2d block = oracle_map(spec).matrix().block<2, 2>(2, 2);
    const Eigen::Vector2d sv = Eigen::JacobiSVD<Eigen::Matrix2d>(block).singularValues();
    const double s = spec.sin_eta();
    const double xi11 = spec.reservoir().population_one();
    const double expected = std::sqrt(1 - 4 * s * s * xi11 * (1 - xi11));
    CHECK(std::abs(sv[0] - expected) <= 1e-12);
    CHECK(std::abs(sv[1] - expected) <= 1e-12);
  }
}

TEST_CASE("simulate_discrete") {
  Rng rng(38);
  const QubitState initial = qcm::testing::random_state(rng);
  const QubitState xi = qcm::testing::random_state(rng);

  const DiscreteTrajectory still = simulate_discrete(swap_spec(0.0, xi), initial, 7);
  REQUIRE(still.states.size() == 8);
  REQUIRE(still.reservoir_out.size() == 7);
  for (const QubitState& s : still.states) {
    CHECK(max_abs_diff(s.bloch(), initial.bloch()) <= 1e-15);
  }

  for (int trial = 0; trial < 30; ++trial) {
    const CollisionSpec spec = qcm::testing::random_spec(rng, qcm::testing::random_family(rng));
    const QubitState r0 = qcm::testing::random_state(rng);
    const DiscreteTrajectory traj = simulate_discrete(spec, r0, 40);
    const TransferMatrix e = induced_map(spec);
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
      CHECK(max_abs_diff(traj.states[k].bloch(), apply(power(e, k), r0).bloch()) <= 1e-12);
    }
  }

  // Pure reservoir: distance shrinks at least by c per collision.
  const QubitState pole(0, 0, 0.5);
  for (int trial = 0; trial < 30; ++trial) {
    const double eta = qcm::testing::uniform(rng, 0.05, kHalfPi);
    const QubitState r0 = qcm::testing::random_state(rng);
    const DiscreteTrajectory traj = simulate_discrete(swap_spec(eta, pole), r0, 30);
    const double d0 = (r0.bloch() - pole.bloch()).norm();
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
      const double dk = (traj.states[k].bloch() - pole.bloch()).norm();
      CHECK(dk <= std::pow(std::cos(eta), static_cast<double>(k)) * d0 * (1 + 1e-10) + 1e-15);
    }
  }
}

TEST_CASE("homogenization_delta") {
  Rng rng(39);
  const QubitState xi = qcm::testing::random_state(rng);
  CHECK(homogenization_delta(simulate_discrete(swap_spec(0.0, xi), xi, 5), xi) <= 1e-15);

  const QubitState r0 = qcm::testing::random_state(rng);
  const DiscreteTrajectory full = simulate_discrete(swap_spec(kHalfPi, xi), r0, 1);
  CHECK((full.states.back().bloch() - xi.bloch()).norm() <= 1e-15);
  CHECK(max_abs_diff(full.reservoir_out[0].bloch(), r0.bloch()) <= 1e-15);
  CHECK(std::abs(homogenization_delta(full, xi) - (r0.bloch() - xi.bloch()).norm()) <= 1e-15);

  const QubitState pole(0, 0, 0.5);
  const QubitState start(0.5, 0, 0);
  double previous = 1.0;
  for (std::size_t n = 1; n <= 30; ++n) {
    const DiscreteTrajectory traj = simulate_discrete(swap_spec(std::numbers::pi / 4, pole), start, n);
    const double system_delta = (traj.states.back().bloch() - pole.bloch()).norm();
    CHECK(system_delta < previous);
    previous = system_delta;
  }
  CHECK_THROWS_AS(homogenization_delta(DiscreteTrajectory{}, pole), InvalidArgument);
}
