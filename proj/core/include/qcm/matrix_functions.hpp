#pragma once

#include "qcm/types.hpp"

namespace qcm {

/// Scaling-and-squaring with the [13/13] Pade approximant.
Mat4 expm(const Mat4& a);

/// Principal logarithm of a real 4x4 matrix through complex
/// eigendecomposition.
///
/// Throws NonInvertibleMap if any eigenvalue has modulus below 1e-12,
/// BranchAmbiguity if a real eigenvalue lies on the negative real axis, and
/// IllConditioned if the eigenvector matrix has condition number above 1e8.
Mat4 logm(const Mat4& a);

inline constexpr double kSingularEigenvalue = 1e-12;
inline constexpr double kMaxEigenvectorCondition = 1e8;
inline constexpr double kImaginaryResidue = 1e-10;

}  // namespace qcm
