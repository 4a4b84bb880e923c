#pragma once

// Continuous-time interpolation of the discrete collision dynamics: rates,
// the map family E_t = exp(t G), semigroup checks and generator extraction.

#include <functional>
#include <variant>

#include "qcm/channels.hpp"
#include "qcm/collisions.hpp"
#include "qcm/types.hpp"

namespace qcm {

/// Proper rotation taking the reservoir Bloch vector t onto (0, 0, w), w >= 0.
struct AlignedFrame {
  Mat3 rotation = Mat3::Identity();
  double w = 0.0;
};

/// Homogenization (partial swap) rates. Expressed in the aligned frame:
/// transverse decay gamma2, longitudinal decay gamma1 toward w, rotation
/// omega about the aligned z axis.
///
/// homogenization_rates() always returns gamma2 >= gamma1 / 2 and w >= 0.
/// The struct itself accepts any values.
struct HomogenizationRates {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double omega = 0.0;
  double w = 0.0;
  Mat3 frame = Mat3::Identity();

  bool satisfies_rate_bound(double tol = 1e-12) const { return gamma1 <= 2.0 * gamma2 + tol; }
};

enum class Axis { X, Z };

/// Pure dephasing about `axis` with rate gamma, plus rotation omega about it.
struct DecoherenceRates {
  double gamma = 0.0;
  double omega = 0.0;
  Axis axis = Axis::X;
};

class GeneratorMatrix {
 public:
  GeneratorMatrix() : m_(Mat4::Zero()) {}
  /// Requires row 0 to vanish within 1e-10.
  explicit GeneratorMatrix(const Mat4& m);

  const Mat4& matrix() const { return m_; }
  double operator()(int j, int k) const { return m_(j, k); }

 private:
  Mat4 m_;
};

AlignedFrame align_basis(const QubitState& reservoir);

/// Conjugates a 4x4 affine matrix given in the aligned frame back to the
/// original Bloch axes.
Mat4 from_aligned(const Mat4& aligned, const Mat3& frame);
Mat4 to_aligned(const Mat4& original, const Mat3& frame);

/// Partial-swap rates. Throws NonInvertibleMap at eta = pi/2.
HomogenizationRates homogenization_rates(const CollisionSpec& spec);

/// CNOT rates (either role). Throws NonInvertibleMap when the per-collision
/// contraction vanishes and BranchAmbiguity when the collision reflects the
/// dephased plane (rotation angle exactly pi).
DecoherenceRates decoherence_rates(const CollisionSpec& spec);

TransferMatrix continuous_map(const HomogenizationRates& rates, double t);
TransferMatrix continuous_map(const DecoherenceRates& rates, double t);

GeneratorMatrix generator_analytic(const HomogenizationRates& rates);
GeneratorMatrix generator_analytic(const DecoherenceRates& rates);

/// (1/tau) times the principal logarithm of e.
GeneratorMatrix generator_numeric(const TransferMatrix& e, double tau);

/// max |E_t E_s - E_{t+s}| over entries.
double semigroup_defect(const HomogenizationRates& rates, double t, double s);
double semigroup_defect(const DecoherenceRates& rates, double t, double s);

using MapFamily = std::function<Mat4(double)>;

/// Central-difference estimate of dE_t/dt E_t^{-1}.
GeneratorMatrix instantaneous_generator(const MapFamily& family, double t, double dt);

TransferMatrix exp_generator(const GeneratorMatrix& g, double t);

/// Rates of whichever family the spec belongs to.
using CollisionRates = std::variant<HomogenizationRates, DecoherenceRates>;

CollisionRates collision_rates(const CollisionSpec& spec);
TransferMatrix continuous_map(const CollisionRates& rates, double t);
GeneratorMatrix generator_analytic(const CollisionRates& rates);
double semigroup_defect(const CollisionRates& rates, double t, double s);

}  // namespace qcm
