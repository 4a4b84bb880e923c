#pragma once

// Seeded random generators for property tests.

#include <cmath>
#include <numbers>
#include <random>

#include "qcm/collisions.hpp"
#include "qcm/qubit.hpp"

namespace qcm::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform direction scaled by radius.
inline Vec3 random_direction(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v(n(rng), n(rng), n(rng));
  return v.normalized();
}

/// Uniform over the Bloch ball of radius 1/2.
inline QubitState random_state(Rng& rng) {
  const double radius = 0.5 * std::cbrt(uniform(rng, 0.0, 1.0));
  return QubitState(radius * random_direction(rng));
}

inline QubitState random_pure_state(Rng& rng) { return QubitState(0.5 * random_direction(rng)); }

inline Interaction random_family(Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return Interaction::PartialSwap;
    case 1:
      return Interaction::CnotTarget;
    default:
      return Interaction::CnotControl;
  }
}

inline CollisionSpec random_spec(Rng& rng, Interaction family, double eta_max = std::numbers::pi / 2) {
  return CollisionSpec(family, uniform(rng, 0.0, eta_max), uniform(rng, 0.2, 3.0), random_state(rng));
}

/// Random 2x2 density matrix built as A A^dagger / Tr, independent of the
/// Bloch parameterization.
inline Mat2c random_density_matrix(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat2c a;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      a(i, j) = cplx(n(rng), n(rng));
    }
  }
  Mat2c rho = a * a.adjoint();
  return rho / rho.trace();
}

inline Mat4c random_two_qubit_density(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat4c a;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      a(i, j) = cplx(n(rng), n(rng));
    }
  }
  Mat4c rho = a * a.adjoint();
  rho /= rho.trace();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace qcm::testing
