#include "einstein_gap/fubini_study.hpp"

namespace einstein_gap {

namespace {

// Real embedding of the Hermitian quadratic z_bar_a z_b: entries are
// homogeneous quadratics in x = (Re z1, Im z1, Re z2, Im z2).
//   r1 = x0^2 + x1^2, r2 = x2^2 + x3^2,
//   a  = x0 x2 + x1 x3, b = x0 x3 - x1 x2.
Mat4 quadratic_part(const Vec4& x) {
  const double r1 = x[0] * x[0] + x[1] * x[1];
  const double r2 = x[2] * x[2] + x[3] * x[3];
  const double a = x[0] * x[2] + x[1] * x[3];
  const double b = x[0] * x[3] - x[1] * x[2];
  Mat4 p;
  p << r1, 0.0, a, -b,
       0.0, r1, b, a,
       a, b, r2, 0.0,
       -b, a, 0.0, r2;
  return p;
}

// Gradient of the quadratic part: dP/dx_c, linear in x.
Mat4 quadratic_part_grad(const Vec4& x, int c) {
  Vec4 e = Vec4::Zero();
  e[c] = 1.0;
  // P is a symmetric bilinear expression in x; differentiate by polarization:
  // dP(x)/dx_c = B(x, e) + B(e, x) where P(x) = B(x, x) entrywise. The six
  // scalar building blocks are quadratic forms, so this is exact.
  const double dr1 = 2.0 * x[0] * e[0] + 2.0 * x[1] * e[1];
  const double dr2 = 2.0 * x[2] * e[2] + 2.0 * x[3] * e[3];
  const double da = x[0] * e[2] + e[0] * x[2] + x[1] * e[3] + e[1] * x[3];
  const double db = x[0] * e[3] + e[0] * x[3] - x[1] * e[2] - e[1] * x[2];
  Mat4 p;
  p << dr1, 0.0, da, -db,
       0.0, dr1, db, da,
       da, db, dr2, 0.0,
       -db, da, 0.0, dr2;
  return p;
}

// Constant Hessian d^2 P / dx_c dx_d.
Mat4 quadratic_part_hess(int c, int d) {
  Vec4 u = Vec4::Zero();
  Vec4 v = Vec4::Zero();
  u[c] = 1.0;
  v[d] = 1.0;
  const double r1 = 2.0 * (u[0] * v[0] + u[1] * v[1]);
  const double r2 = 2.0 * (u[2] * v[2] + u[3] * v[3]);
  const double a = u[0] * v[2] + v[0] * u[2] + u[1] * v[3] + v[1] * u[3];
  const double b = u[0] * v[3] + v[0] * u[3] - u[1] * v[2] - v[1] * u[2];
  Mat4 p;
  p << r1, 0.0, a, -b,
       0.0, r1, b, a,
       a, b, r2, 0.0,
       -b, a, 0.0, r2;
  return p;
}

}  // namespace

Mat4 fs_pullback_metric(const Vec4& x) {
  const double rho2 = x.squaredNorm();
  if (rho2 <= 0.0) {
    throw InvalidInput("fs_pullback_metric: undefined at the origin");
  }
  return (Mat4::Identity() - quadratic_part(x) / rho2) / rho2;
}

FsDerivatives fs_pullback_derivatives(const Vec4& x) {
  const double rho2 = x.squaredNorm();
  if (rho2 <= 0.0) {
    throw InvalidInput("fs_pullback_derivatives: undefined at the origin");
  }
  const double f1 = 1.0 / rho2;          // 1/rho^2
  const double f2 = f1 * f1;             // 1/rho^4
  const double f3 = f2 * f1;
  const double f4 = f2 * f2;

  const Mat4 P = quadratic_part(x);
  std::array<Mat4, 4> dP;
  for (int c = 0; c < 4; ++c) dP[c] = quadratic_part_grad(x, c);

  FsDerivatives out;
  out.value = f1 * Mat4::Identity() - f2 * P;

  // d_a f1 = -2 x_a f2, d_a f2 = -4 x_a f3.
  for (int a = 0; a < 4; ++a) {
    out.first[a] =
        (-2.0 * x[a] * f2) * Mat4::Identity() + (4.0 * x[a] * f3) * P -
        f2 * dP[a];
  }

  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      const double dab = (a == b) ? 1.0 : 0.0;
      const double d2f1 = -2.0 * dab * f2 + 8.0 * x[a] * x[b] * f3;
      const double d2f2 = -4.0 * dab * f3 + 24.0 * x[a] * x[b] * f4;
      Mat4 m = d2f1 * Mat4::Identity() - d2f2 * P +
               (4.0 * x[a] * f3) * dP[b] + (4.0 * x[b] * f3) * dP[a] -
               f2 * quadratic_part_hess(a, b);
      out.second[a][b] = m;
      out.second[b][a] = m;
    }
  }
  return out;
}

}  // namespace einstein_gap
