#include "qcm/matrix_functions.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "qcm/errors.hpp"

namespace qcm {
namespace {

// [13/13] Pade coefficients and the 1-norm bound below which no scaling is
// needed (Higham 2005).
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

}  // namespace

Mat4 expm(const Mat4& a) {
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  const Mat4 as = a / std::ldexp(1.0, squarings);

  const auto& b = kPade13;
  const Mat4 id = Mat4::Identity();
  const Mat4 a2 = as * as;
  const Mat4 a4 = a2 * a2;
  const Mat4 a6 = a4 * a2;
  const Mat4 u = as * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                       b[3] * a2 + b[1] * id);
  const Mat4 v =
      a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
  Mat4 r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) {
    r = r * r;
  }
  return r;
}

Mat4 logm(const Mat4& a) {
  if (!a.allFinite()) {
    throw InvalidArgument("logm: non-finite input");
  }
  Eigen::EigenSolver<Mat4> es(a);
  if (es.info() != Eigen::Success) {
    throw IllConditioned("logm: eigendecomposition failed");
  }
  const Eigen::Vector4cd lambda = es.eigenvalues();
  const Mat4c vecs = es.eigenvectors();

  for (int k = 0; k < 4; ++k) {
    const double mod = std::abs(lambda[k]);
    if (mod < kSingularEigenvalue) {
      throw NonInvertibleMap();
    }
    if (lambda[k].real() < 0.0 && std::abs(lambda[k].imag()) <= kSingularEigenvalue * mod) {
      throw BranchAmbiguity();
    }
  }

  Eigen::JacobiSVD<Mat4c> svd(vecs);
  const auto& sv = svd.singularValues();
  const double cond = sv[0] / sv[3];
  if (!(cond <= kMaxEigenvectorCondition)) {
    std::ostringstream os;
    os << "logm: eigenvector condition number " << cond << " exceeds "
       << kMaxEigenvectorCondition;
    throw IllConditioned(os.str());
  }

  Eigen::Vector4cd log_lambda;
  for (int k = 0; k < 4; ++k) {
    log_lambda[k] = std::log(lambda[k]);
  }
  const Mat4c l = vecs * log_lambda.asDiagonal() * vecs.inverse();
  const double residue = l.imag().cwiseAbs().maxCoeff();
  if (residue > kImaginaryResidue) {
    std::ostringstream os;
    os << "logm: imaginary residue " << residue << " in a real logarithm";
    throw IllConditioned(os.str());
  }
  return l.real();
}

}  // namespace qcm
