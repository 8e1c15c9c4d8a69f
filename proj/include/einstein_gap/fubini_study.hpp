#pragma once

#include <array>

#include <Eigen/Dense>

#include "einstein_gap/errors.hpp"

namespace einstein_gap {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

/// Pull-back to C^2 \ {0} of the Fubini-Study metric on CP^1 via the
/// tautological projection, as a real symmetric 4x4 form. With z the complex
/// pair (x0 + i x1, x2 + i x3), this is the real form of the Hermitian matrix
///
///   H(z) = (|z|^2 I - z z*) / |z|^4,
///
/// rank 2 and positive semidefinite; the kernel is spanned by z and iz, and
/// h2(lambda z) = lambda^{-2} h2(z).
Mat4 fs_pullback_metric(const Vec4& x);

/// First and second coordinate derivatives of fs_pullback_metric, in closed
/// form (the entries are rational: identity/|x|^2 minus a quadratic/|x|^4).
struct FsDerivatives {
  Mat4 value;
  std::array<Mat4, 4> first;                  // d_a h2
  std::array<std::array<Mat4, 4>, 4> second;  // d_a d_b h2 (symmetric in a,b)
};

FsDerivatives fs_pullback_derivatives(const Vec4& x);

}  // namespace einstein_gap
