#include "qcm/channels.hpp"

#include <cmath>
#include <sstream>

#include "qcm/errors.hpp"

namespace qcm {
namespace {

constexpr std::uint64_t kLoopPowerLimit = 16;

double row_zero_deviation(const Mat4& m) {
  return std::max({std::abs(m(0, 0) - 1.0), std::abs(m(0, 1)), std::abs(m(0, 2)), std::abs(m(0, 3))});
}

}  // namespace

TransferMatrix::TransferMatrix(const Mat4& m) : m_(m) {
  if (!m.allFinite()) {
    throw InvalidArgument("transfer matrix has non-finite entries");
  }
  if (row_zero_deviation(m) > kRowZeroTolerance) {
    throw NotTracePreserving("transfer matrix row 0 must be (1, 0, 0, 0)");
  }
}

TransferMatrix TransferMatrix::affine(const Mat3& linear, const Vec3& translation) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1.0;
  m.block<3, 1>(1, 0) = 2.0 * translation;
  m.bottomRightCorner<3, 3>() = linear;
  return TransferMatrix(m);
}

ChoiMatrix::ChoiMatrix(const Mat4c& m) : m_(m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidArgument("Choi matrix is not Hermitian");
  }
}

Vec4 ChoiMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

TransferMatrix tomography(const ChannelAction& action) {
  Mat4 m;
  for (int k = 0; k < 4; ++k) {
    const Mat2c image = action(pauli(k));
    for (int j = 0; j < 4; ++j) {
      m(j, k) = 0.5 * (pauli(j) * image).trace().real();
    }
  }
  const double dev = row_zero_deviation(m);
  if (dev > kRowZeroTolerance) {
    std::ostringstream os;
    os << "channel action is not trace preserving (row 0 deviation " << dev << ")";
    throw NotTracePreserving(os.str());
  }
  return TransferMatrix(m);
}

ChannelAction as_action(const TransferMatrix& e) {
  return [m = e.matrix()](const Mat2c& x) {
    Eigen::Vector4cd coeff;
    for (int k = 0; k < 4; ++k) {
      coeff[k] = 0.5 * (pauli(k) * x).trace();
    }
    const Eigen::Vector4cd out = m.cast<cplx>() * coeff;
    Mat2c y = Mat2c::Zero();
    for (int j = 0; j < 4; ++j) {
      y += out[j] * pauli(j);
    }
    return y;
  };
}

Vec3 apply_bloch(const TransferMatrix& e, const Vec3& r) {
  return e.linear() * r + e.translation();
}

QubitState apply(const TransferMatrix& e, const QubitState& s) {
  return QubitState(apply_bloch(e, s.bloch()));
}

namespace detail {

Mat4 power_by_loop(const Mat4& m, std::uint64_t n) {
  Mat4 out = Mat4::Identity();
  for (std::uint64_t i = 0; i < n; ++i) {
    out = out * m;
  }
  return out;
}

Mat4 power_by_squaring(const Mat4& m, std::uint64_t n) {
  Mat4 out = Mat4::Identity();
  Mat4 base = m;
  while (n > 0) {
    if (n & 1U) {
      out = out * base;
    }
    n >>= 1U;
    if (n > 0) {
      base = base * base;
    }
  }
  return out;
}

}  // namespace detail

TransferMatrix power(const TransferMatrix& e, std::uint64_t n) {
  if (n > kLoopPowerLimit) {
    return TransferMatrix(detail::power_by_squaring(e.matrix(), n));
  }
  return TransferMatrix(detail::power_by_loop(e.matrix(), n));
}

ChoiMatrix to_choi(const TransferMatrix& e) {
  const ChannelAction action = as_action(e);
  Mat4c choi = Mat4c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Mat2c unit = Mat2c::Zero();
      unit(i, j) = 1.0;
      choi += 0.5 * kron(action(unit), unit);
    }
  }
  // Symmetrize away rounding.
  return ChoiMatrix(0.5 * (choi + choi.adjoint()));
}

CpVerdict is_completely_positive(const TransferMatrix& e, double tol) {
  const double min_eig = to_choi(e).eigenvalues().minCoeff();
  return {min_eig >= -tol, min_eig};
}

}  // namespace qcm
