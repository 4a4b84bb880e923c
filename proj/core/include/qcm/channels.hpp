#pragma once

// Affine (Pauli transfer) representation of qubit channels. A channel acts on
// the column (1/2, r_x, r_y, r_z) by plain matrix multiplication, with
// [E]_jk = 1/2 Tr(sigma_j E[sigma_k]).

#include <cstdint>
#include <functional>

#include "qcm/qubit.hpp"
#include "qcm/types.hpp"

namespace qcm {

/// Linear action of a channel on arbitrary 2x2 operators.
using ChannelAction = std::function<Mat2c(const Mat2c&)>;

class TransferMatrix {
 public:
  /// Identity channel.
  TransferMatrix() : m_(Mat4::Identity()) {}
  /// Requires row 0 equal to (1, 0, 0, 0) within 1e-10.
  explicit TransferMatrix(const Mat4& m);

  /// Builds r -> linear * r + translation.
  static TransferMatrix affine(const Mat3& linear, const Vec3& translation);

  const Mat4& matrix() const { return m_; }
  double operator()(int j, int k) const { return m_(j, k); }

  Mat3 linear() const { return m_.bottomRightCorner<3, 3>(); }
  /// Bloch-space translation (column 0 scaled by 1/2).
  Vec3 translation() const { return 0.5 * m_.block<3, 1>(1, 0); }

  friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
    return TransferMatrix(a.m_ * b.m_);
  }

 private:
  Mat4 m_;
};

/// Choi matrix (E (x) id)[|Phi+><Phi+|], trace one for trace-preserving E.
/// Ordering: channel output (x) reference.
class ChoiMatrix {
 public:
  explicit ChoiMatrix(const Mat4c& m);
  const Mat4c& matrix() const { return m_; }
  /// Ascending eigenvalues.
  Vec4 eigenvalues() const;

 private:
  Mat4c m_;
};

struct CpVerdict {
  bool completely_positive;
  double min_eigenvalue;
};

inline constexpr double kRowZeroTolerance = 1e-10;

TransferMatrix tomography(const ChannelAction& action);

/// Re-exposes a transfer matrix as an operator action (used to round-trip
/// through tomography).
ChannelAction as_action(const TransferMatrix& e);

QubitState apply(const TransferMatrix& e, const QubitState& s);
/// Same as apply, without re-validating the image as a state.
Vec3 apply_bloch(const TransferMatrix& e, const Vec3& r);

TransferMatrix power(const TransferMatrix& e, std::uint64_t n);

ChoiMatrix to_choi(const TransferMatrix& e);
CpVerdict is_completely_positive(const TransferMatrix& e, double tol = kPositivityTolerance);

namespace detail {
Mat4 power_by_loop(const Mat4& m, std::uint64_t n);
Mat4 power_by_squaring(const Mat4& m, std::uint64_t n);
}  // namespace detail

}  // namespace qcm
