#pragma once

#include <array>
#include <vector>

#include "einstein_gap/errors.hpp"

namespace einstein_gap {

/// C^2 cutoff: identically 1 on (-inf, 1/2], identically 0 on [1, inf),
/// a monotone polynomial smoothstep of odd degree in between. Degree 5
/// (quintic) gives value 1/2 and slope -15/4 at the midpoint u = 3/4.
class CutoffProfile {
 public:
  explicit CutoffProfile(int degree = 5);

  int degree() const { return degree_; }

  double value(double u) const;

  /// (phi, phi', phi'') at u.
  std::array<double, 3> eval(double u) const;

 private:
  int degree_;
  std::vector<double> coeffs_;  // smoothstep S(w), ascending powers of w
};

}  // namespace einstein_gap
