#include "qcm/lindblad.hpp"

#include <algorithm>
#include <cmath>

#include "qcm/errors.hpp"

namespace qcm {
namespace {

constexpr double kSymmetryTolerance = 1e-13;

double scale_of(const Mat3& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

}  // namespace

LindbladForm::LindbladForm(const Vec3& h, const Mat3& d, const Mat3& e) : h_(h), d_(d), e_(e) {
  if (!h.allFinite() || !d.allFinite() || !e.allFinite()) {
    throw InvalidArgument("Lindblad form has non-finite entries");
  }
  if (max_abs_diff(d, d.transpose()) > kSymmetryTolerance * scale_of(d)) {
    throw InvalidArgument("Lindblad d matrix must be symmetric");
  }
  if (max_abs_diff(e, -e.transpose()) > kSymmetryTolerance * scale_of(e)) {
    throw InvalidArgument("Lindblad e matrix must be antisymmetric");
  }
}

Mat3c LindbladForm::c() const { return d_.cast<cplx>() - cplx(0.0, 1.0) * e_.cast<cplx>(); }

LindbladForm lindblad_from_generator(const GeneratorMatrix& g) {
  // Pauli indices 1..3 map to matrix rows/columns 1..3.
  const auto G = [&g](int j, int k) { return g(j, k); };
  Vec3 h;
  h << (G(3, 2) - G(2, 3)) / 4.0, (G(1, 3) - G(3, 1)) / 4.0, (G(2, 1) - G(1, 2)) / 4.0;

  Mat3 e = Mat3::Zero();
  e(1, 2) = G(1, 0) / 4.0;
  e(2, 0) = G(2, 0) / 4.0;
  e(0, 1) = G(3, 0) / 4.0;
  e(2, 1) = -e(1, 2);
  e(0, 2) = -e(2, 0);
  e(1, 0) = -e(0, 1);

  Mat3 d;
  d(0, 0) = (-G(2, 2) - G(3, 3) + G(1, 1)) / 4.0;
  d(1, 1) = (-G(1, 1) - G(3, 3) + G(2, 2)) / 4.0;
  d(2, 2) = (-G(1, 1) - G(2, 2) + G(3, 3)) / 4.0;
  d(0, 1) = d(1, 0) = (G(1, 2) + G(2, 1)) / 4.0;
  d(1, 2) = d(2, 1) = (G(2, 3) + G(3, 2)) / 4.0;
  d(0, 2) = d(2, 0) = (G(1, 3) + G(3, 1)) / 4.0;
  return LindbladForm(h, d, e);
}

GeneratorMatrix generator_from_lindblad(const LindbladForm& l) {
  const Vec3& h = l.h();
  const Mat3& d = l.d();
  const Mat3& e = l.e();
  Mat4 g;
  g << 0, 0, 0, 0,
       4 * e(1, 2), -2 * d(1, 1) - 2 * d(2, 2), 2 * d(0, 1) - 2 * h(2), 2 * d(0, 2) + 2 * h(1),
       4 * e(2, 0), 2 * d(0, 1) + 2 * h(2), -2 * d(0, 0) - 2 * d(2, 2), 2 * d(1, 2) - 2 * h(0),
       4 * e(0, 1), 2 * d(2, 0) - 2 * h(1), 2 * d(2, 1) + 2 * h(0), -2 * d(0, 0) - 2 * d(1, 1);
  return GeneratorMatrix(g);
}

GksVerdict gks_positivity(const LindbladForm& l, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat3c> es(l.c(), Eigen::EigenvaluesOnly);
  const Vec3 ev = es.eigenvalues();
  return {ev.minCoeff() >= -tol, ev};
}

QubitState integrate_master_equation(const LindbladForm& l, const QubitState& initial, double t,
                                     double dt) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidArgument("integrate_master_equation: t must be finite and nonnegative");
  }
  if (!(dt > 0.0)) {
    throw InvalidArgument("integrate_master_equation: dt must be positive");
  }
  if (t == 0.0) {
    return initial;
  }
  const Mat4 g = generator_from_lindblad(l).matrix();
  const auto steps = static_cast<long long>(std::ceil(t / dt * (1.0 - 1e-12)));
  const double h = t / static_cast<double>(steps);

  Vec4 v;
  v << 0.5, initial.bloch();
  for (long long i = 0; i < steps; ++i) {
    const Vec4 k1 = g * v;
    const Vec4 k2 = g * (v + 0.5 * h * k1);
    const Vec4 k3 = g * (v + 0.5 * h * k2);
    const Vec4 k4 = g * (v + h * k3);
    v += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return QubitState(Vec3(v.tail<3>()));
}

}  // namespace qcm
