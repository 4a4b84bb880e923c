#pragma once

// One- and two-qubit states in the Bloch normalization rho = I/2 + r.sigma,
// so that |r| <= 1/2 on the Bloch ball.

#include <array>

#include "qcm/types.hpp"

namespace qcm {

inline constexpr double kBlochTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-14;
inline constexpr double kTraceTolerance = 1e-14;
inline constexpr double kPositivityTolerance = 1e-12;
inline constexpr double kUnitarityTolerance = 1e-13;

/// Pauli matrices indexed 0..3 as (I, sigma_x, sigma_y, sigma_z).
const Mat2c& pauli(int k);

/// Qubit state given by its Bloch vector r, |r| <= 1/2.
class QubitState {
 public:
  QubitState() : r_(Vec3::Zero()) {}
  explicit QubitState(const Vec3& r);
  QubitState(double x, double y, double z) : QubitState(Vec3(x, y, z)) {}

  const Vec3& bloch() const { return r_; }
  double x() const { return r_.x(); }
  double y() const { return r_.y(); }
  double z() const { return r_.z(); }

  /// Tr(rho^2) = 1/2 + 2|r|^2.
  double purity() const { return 0.5 + 2.0 * r_.squaredNorm(); }

  /// Matrix element <1|rho|1> = 1/2 - r_z.
  double population_one() const { return 0.5 - r_.z(); }

  /// Expectation Tr(rho sigma_x) = 2 r_x.
  double sigma_x_expectation() const { return 2.0 * r_.x(); }

 private:
  Vec3 r_;
};

/// Validated 2x2 density matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Mat2c& m);
  const Mat2c& matrix() const { return m_; }

 private:
  Mat2c m_;
};

enum class Slot { System, Environment };

/// Validated two-qubit state, ordering system (x) environment.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Mat4c& m);
  const Mat4c& matrix() const { return m_; }

 private:
  Mat4c m_;
};

/// Validated 4x4 unitary acting on system (x) environment.
class TwoQubitUnitary {
 public:
  explicit TwoQubitUnitary(const Mat4c& u);
  const Mat4c& matrix() const { return u_; }

 private:
  Mat4c u_;
};

DensityMatrix bloch_to_density(const QubitState& s);
QubitState density_to_bloch(const DensityMatrix& d);

TwoQubitState tensor(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix partial_trace(const TwoQubitState& s, Slot keep);

// Unvalidated kernels; the channel machinery feeds them non-state operators
// such as bare Pauli matrices.
Mat4c kron(const Mat2c& a, const Mat2c& b);
Mat2c partial_trace(const Mat4c& m, Slot keep);

}  // namespace qcm
