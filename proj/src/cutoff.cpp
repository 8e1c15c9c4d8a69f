#include "einstein_gap/cutoff.hpp"

#include <cmath>

namespace einstein_gap {

namespace {

double binomial(int n, int r) {
  double v = 1.0;
  for (int i = 0; i < r; ++i) {
    v *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return v;
}

}  // namespace

CutoffProfile::CutoffProfile(int degree) : degree_(degree) {
  if (degree < 5 || degree % 2 == 0) {
    throw InvalidInput("CutoffProfile: degree must be odd and >= 5");
  }
  // Generalized smoothstep S_N of degree 2N+1: the unique polynomial with
  // S(0)=0, S(1)=1 and N vanishing derivatives at both ends.
  //   S_N(w) = w^{N+1} * sum_{n=0}^{N} C(N+n, n) C(2N+1, N-n) (-w)^n
  const int N = (degree - 1) / 2;
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int n = 0; n <= N; ++n) {
    const double c = binomial(N + n, n) * binomial(2 * N + 1, N - n) *
                     ((n % 2 == 0) ? 1.0 : -1.0);
    coeffs_[static_cast<std::size_t>(N + 1 + n)] = c;
  }
}

double CutoffProfile::value(double u) const { return eval(u)[0]; }

std::array<double, 3> CutoffProfile::eval(double u) const {
  if (u <= 0.5) return {1.0, 0.0, 0.0};
  if (u >= 1.0) return {0.0, 0.0, 0.0};
  // phi(u) = 1 - S(w) with w = 2u - 1 in (0, 1).
  const double w = 2.0 * u - 1.0;
  double s = 0.0, s1 = 0.0, s2 = 0.0;
  for (std::size_t p = coeffs_.size(); p-- > 0;) {
    s2 = s2 * w + s1 * 2.0;
    s1 = s1 * w + s;
    s = s * w + coeffs_[p];
  }
  return {1.0 - s, -2.0 * s1, -4.0 * s2};
}

}  // namespace einstein_gap
