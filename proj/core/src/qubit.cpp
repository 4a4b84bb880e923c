#include "qcm/qubit.hpp"

#include <cmath>
#include <sstream>

#include "qcm/errors.hpp"

namespace qcm {
namespace {

const std::array<Mat2c, 4>& pauli_table() {
  static const std::array<Mat2c, 4> table = [] {
    const cplx i(0.0, 1.0);
    std::array<Mat2c, 4> t;
    t[0] << 1, 0, 0, 1;
    t[1] << 0, 1, 1, 0;
    t[2] << 0, -i, i, 0;
    t[3] << 1, 0, 0, -1;
    return t;
  }();
  return table;
}

template <typename M>
void require_state_matrix(const M& m, const char* what) {
  if (!m.allFinite()) {
    throw InvalidArgument(std::string(what) + ": non-finite entries");
  }
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTolerance) {
    std::ostringstream os;
    os << what << ": not Hermitian (deviation " << herm << ")";
    throw InvalidArgument(os.str());
  }
  const cplx tr = m.trace();
  if (std::abs(tr - cplx(1.0, 0.0)) > kTraceTolerance) {
    std::ostringstream os;
    os << what << ": trace " << tr.real() << " != 1";
    throw InvalidArgument(os.str());
  }
  using Herm = Eigen::Matrix<cplx, M::RowsAtCompileTime, M::ColsAtCompileTime>;
  Eigen::SelfAdjointEigenSolver<Herm> es(Herm(0.5 * (m + m.adjoint())), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPositivityTolerance) {
    std::ostringstream os;
    os << what << ": negative eigenvalue " << es.eigenvalues().minCoeff();
    throw InvalidArgument(os.str());
  }
}

}  // namespace

const Mat2c& pauli(int k) { return pauli_table().at(static_cast<std::size_t>(k)); }

QubitState::QubitState(const Vec3& r) : r_(r) {
  if (!r.allFinite()) {
    throw InvalidArgument("Bloch vector has non-finite components");
  }
  if (r.norm() > 0.5 + kBlochTolerance) {
    std::ostringstream os;
    os << "unphysical state: |r| = " << r.norm() << " exceeds 1/2";
    throw InvalidArgument(os.str());
  }
}

DensityMatrix::DensityMatrix(const Mat2c& m) : m_(m) { require_state_matrix(m_, "density matrix"); }

TwoQubitState::TwoQubitState(const Mat4c& m) : m_(m) {
  require_state_matrix(m_, "two-qubit state");
}

TwoQubitUnitary::TwoQubitUnitary(const Mat4c& u) : u_(u) {
  if (!u.allFinite() || max_abs_diff(u * u.adjoint(), Mat4c::Identity()) > kUnitarityTolerance) {
    throw InvalidArgument("two-qubit gate is not unitary");
  }
}

DensityMatrix bloch_to_density(const QubitState& s) {
  const Vec3& r = s.bloch();
  Mat2c m = 0.5 * pauli(0);
  for (int k = 0; k < 3; ++k) {
    m += r[k] * pauli(k + 1);
  }
  return DensityMatrix(m);
}

QubitState density_to_bloch(const DensityMatrix& d) {
  Vec3 r;
  for (int k = 0; k < 3; ++k) {
    r[k] = 0.5 * (pauli(k + 1) * d.matrix()).trace().real();
  }
  return QubitState(r);
}

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      out.block<2, 2>(2 * i, 2 * k) = a(i, k) * b;
    }
  }
  return out;
}

Mat2c partial_trace(const Mat4c& m, Slot keep) {
  Mat2c out = Mat2c::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int j = 0; j < 2; ++j) {
        out(a, b) += keep == Slot::System ? m(2 * a + j, 2 * b + j) : m(2 * j + a, 2 * j + b);
      }
    }
  }
  return out;
}

TwoQubitState tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return TwoQubitState(kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const TwoQubitState& s, Slot keep) {
  return DensityMatrix(partial_trace(s.matrix(), keep));
}

}  // namespace qcm
