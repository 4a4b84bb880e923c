#include "qcm/semigroup.hpp"

#include <cmath>
#include <sstream>

#include "qcm/errors.hpp"
#include "qcm/matrix_functions.hpp"

namespace qcm {
namespace {

Mat3 skew(const Vec3& v) {
  Mat3 k;
  k << 0, -v.z(), v.y(),
       v.z(), 0, -v.x(),
       -v.y(), v.x(), 0;
  return k;
}

// Rotation taking unit vector a onto +z, valid for a.z() >= 0.
Mat3 rotate_onto_z(const Vec3& a) {
  const Vec3 z = Vec3::UnitZ();
  const Vec3 v = a.cross(z);
  const Mat3 k = skew(v);
  return Mat3::Identity() + k + k * k / (1.0 + a.dot(z));
}

Mat4 frame_lift(const Mat3& frame) {
  Mat4 f = Mat4::Identity();
  f.bottomRightCorner<3, 3>() = frame;
  return f;
}

// 2x2 block e^{-gamma t} [[cos, sin], [-sin, cos]](omega t).
Eigen::Matrix2d damped_rotation(double gamma, double omega, double t) {
  const double decay = std::exp(-gamma * t);
  const double cs = std::cos(omega * t);
  const double sn = std::sin(omega * t);
  Eigen::Matrix2d b;
  b << decay * cs, decay * sn, -decay * sn, decay * cs;
  return b;
}

int plane_start(Axis axis) { return axis == Axis::X ? 2 : 1; }

void require_nonnegative_time(double t, const char* what) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    std::ostringstream os;
    os << what << ": time " << t << " must be finite and nonnegative";
    throw InvalidArgument(os.str());
  }
}

void require_positive_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw InvalidArgument("collision period tau must be positive");
  }
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(const Mat4& m) : m_(m) {
  if (!m.allFinite()) {
    throw InvalidArgument("generator has non-finite entries");
  }
  if (m.row(0).cwiseAbs().maxCoeff() > kRowZeroTolerance) {
    throw NotTracePreserving("generator row 0 must vanish");
  }
}

AlignedFrame align_basis(const QubitState& reservoir) {
  const Vec3& t = reservoir.bloch();
  const double w = t.norm();
  if (w == 0.0) {
    return {};
  }
  const Vec3 dir = t / w;
  AlignedFrame frame;
  frame.w = w;
  if (dir.z() >= 0.0) {
    frame.rotation = rotate_onto_z(dir);
  } else {
    // Flip into the upper hemisphere with a half turn about x first.
    const Mat3 half_turn = Eigen::Vector3d(1.0, -1.0, -1.0).asDiagonal();
    frame.rotation = rotate_onto_z(half_turn * dir) * half_turn;
  }
  return frame;
}

Mat4 from_aligned(const Mat4& aligned, const Mat3& frame) {
  const Mat4 f = frame_lift(frame);
  return f.transpose() * aligned * f;
}

Mat4 to_aligned(const Mat4& original, const Mat3& frame) {
  const Mat4 f = frame_lift(frame);
  return f * original * f.transpose();
}

HomogenizationRates homogenization_rates(const CollisionSpec& spec) {
  if (spec.family() != Interaction::PartialSwap) {
    throw InvalidArgument("homogenization rates require the partial-swap interaction");
  }
  const double c = spec.cos_eta();
  const double s = spec.sin_eta();
  if (c <= kSingularEigenvalue) {
    throw NonInvertibleMap("rates diverge: non-invertible collision map");
  }
  const AlignedFrame frame = align_basis(spec.reservoir());
  const double w = frame.w;
  const double tau = spec.tau();
  // ln c = ln(1 - 2 sin^2(eta/2)) and c^2 + 4 s^2 w^2 = 1 + s^2 (4 w^2 - 1),
  // both kept in log1p form for accuracy near eta = 0 and w = 1/2.
  const double half = std::sin(0.5 * spec.eta());
  const double log_c = std::log1p(-2.0 * half * half);
  const double log_modulus_sq = std::log1p(s * s * (4.0 * w * w - 1.0));

  HomogenizationRates rates;
  rates.gamma1 = -2.0 * log_c / tau;
  rates.gamma2 = -(log_c + 0.5 * log_modulus_sq) / tau;
  rates.omega = std::atan2(2.0 * w * s, c) / tau;
  rates.w = w;
  rates.frame = frame.rotation;
  return rates;
}

DecoherenceRates decoherence_rates(const CollisionSpec& spec) {
  const double c = spec.cos_eta();
  const double s = spec.sin_eta();
  double a = 0.0;
  double b = 0.0;
  double modulus_sq = 0.0;
  DecoherenceRates rates;
  switch (spec.family()) {
    case Interaction::PartialSwap:
      throw InvalidArgument("decoherence rates require a CNOT interaction");
    case Interaction::CnotTarget: {
      const double xi11 = spec.reservoir().population_one();
      const double xi00 = 1.0 - xi11;
      a = 1.0 - 2.0 * s * s * xi11;
      b = 2.0 * c * s * xi11;
      modulus_sq = 1.0 - 4.0 * s * s * xi11 * xi00;
      rates.axis = Axis::X;
      break;
    }
    case Interaction::CnotControl: {
      const double sx = spec.reservoir().sigma_x_expectation();
      a = c * c + s * s * sx;
      b = c * s * (1.0 - sx);
      modulus_sq = c * c + s * s * sx * sx;
      rates.axis = Axis::Z;
      break;
    }
  }
  const double modulus = std::sqrt(std::max(modulus_sq, 0.0));
  if (modulus < kSingularEigenvalue) {
    throw NonInvertibleMap("rates diverge: non-invertible collision map");
  }
  if (a < 0.0 && std::abs(b) <= kSingularEigenvalue * modulus) {
    throw BranchAmbiguity("rates undefined: collision map reflects the dephasing plane");
  }
  const double tau = spec.tau();
  rates.gamma = -0.5 * std::log(modulus_sq) / tau;
  rates.omega = std::atan2(b, a) / tau;
  return rates;
}

TransferMatrix continuous_map(const HomogenizationRates& rates, double t) {
  require_nonnegative_time(t, "continuous_map");
  Mat4 m = Mat4::Identity();
  m.block<2, 2>(1, 1) = damped_rotation(rates.gamma2, rates.omega, t);
  m(3, 3) = std::exp(-rates.gamma1 * t);
  m(3, 0) = -2.0 * rates.w * std::expm1(-rates.gamma1 * t);
  return TransferMatrix(from_aligned(m, rates.frame));
}

TransferMatrix continuous_map(const DecoherenceRates& rates, double t) {
  require_nonnegative_time(t, "continuous_map");
  Mat4 m = Mat4::Identity();
  const int p = plane_start(rates.axis);
  m.block<2, 2>(p, p) = damped_rotation(rates.gamma, rates.omega, t);
  return TransferMatrix(m);
}

GeneratorMatrix generator_analytic(const HomogenizationRates& rates) {
  Mat4 g = Mat4::Zero();
  g.block<2, 2>(1, 1) << -rates.gamma2, rates.omega, -rates.omega, -rates.gamma2;
  g(3, 3) = -rates.gamma1;
  g(3, 0) = 2.0 * rates.w * rates.gamma1;
  return GeneratorMatrix(from_aligned(g, rates.frame));
}

GeneratorMatrix generator_analytic(const DecoherenceRates& rates) {
  Mat4 g = Mat4::Zero();
  const int p = plane_start(rates.axis);
  g.block<2, 2>(p, p) << -rates.gamma, rates.omega, -rates.omega, -rates.gamma;
  return GeneratorMatrix(g);
}

GeneratorMatrix generator_numeric(const TransferMatrix& e, double tau) {
  require_positive_tau(tau);
  return GeneratorMatrix(logm(e.matrix()) / tau);
}

double semigroup_defect(const HomogenizationRates& rates, double t, double s) {
  return max_abs_diff(continuous_map(rates, t).matrix() * continuous_map(rates, s).matrix(),
                      continuous_map(rates, t + s).matrix());
}

double semigroup_defect(const DecoherenceRates& rates, double t, double s) {
  return max_abs_diff(continuous_map(rates, t).matrix() * continuous_map(rates, s).matrix(),
                      continuous_map(rates, t + s).matrix());
}

GeneratorMatrix instantaneous_generator(const MapFamily& family, double t, double dt) {
  if (!(dt > 0.0)) {
    throw InvalidArgument("instantaneous_generator: dt must be positive");
  }
  const Mat4 e = family(t);
  const Eigen::FullPivLU<Mat4> lu(e);
  if (!lu.isInvertible()) {
    throw NonInvertibleMap();
  }
  const Mat4 derivative = (family(t + dt) - family(t - dt)) / (2.0 * dt);
  return GeneratorMatrix(derivative * lu.inverse());
}

TransferMatrix exp_generator(const GeneratorMatrix& g, double t) {
  return TransferMatrix(expm(t * g.matrix()));
}

CollisionRates collision_rates(const CollisionSpec& spec) {
  if (spec.family() == Interaction::PartialSwap) {
    return homogenization_rates(spec);
  }
  return decoherence_rates(spec);
}

TransferMatrix continuous_map(const CollisionRates& rates, double t) {
  return std::visit([t](const auto& r) { return continuous_map(r, t); }, rates);
}

GeneratorMatrix generator_analytic(const CollisionRates& rates) {
  return std::visit([](const auto& r) { return generator_analytic(r); }, rates);
}

double semigroup_defect(const CollisionRates& rates, double t, double s) {
  return std::visit([t, s](const auto& r) { return semigroup_defect(r, t, s); }, rates);
}

}  // namespace qcm
