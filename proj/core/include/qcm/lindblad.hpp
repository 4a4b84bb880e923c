#pragma once

// Operator (GKS) form of a qubit generator:
//   drho/dt = -i[H, rho] + 1/2 sum_jk c_jk ([s_j, rho s_k] + [s_j rho, s_k])
// with H = sum_k h_k s_k and c = d - i e.

#include "qcm/qubit.hpp"
#include "qcm/semigroup.hpp"
#include "qcm/types.hpp"

namespace qcm {

class LindbladForm {
 public:
  LindbladForm() : h_(Vec3::Zero()), d_(Mat3::Zero()), e_(Mat3::Zero()) {}
  /// d must be symmetric and e antisymmetric within 1e-13 (relative to
  /// their scale).
  LindbladForm(const Vec3& h, const Mat3& d, const Mat3& e);

  const Vec3& h() const { return h_; }
  const Mat3& d() const { return d_; }
  const Mat3& e() const { return e_; }
  Mat3c c() const;

 private:
  Vec3 h_;
  Mat3 d_;
  Mat3 e_;
};

struct GksVerdict {
  bool completely_positive;
  Vec3 eigenvalues;  // ascending
};

LindbladForm lindblad_from_generator(const GeneratorMatrix& g);
GeneratorMatrix generator_from_lindblad(const LindbladForm& l);

GksVerdict gks_positivity(const LindbladForm& l, double tol = kPositivityTolerance);

/// Fixed-step classical RK4 on the Bloch 4-vector. The step is dt, shortened
/// uniformly to t / ceil(t / dt).
QubitState integrate_master_equation(const LindbladForm& l, const QubitState& initial, double t,
                                     double dt);

}  // namespace qcm
