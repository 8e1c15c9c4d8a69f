#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "einstein_gap/errors.hpp"

namespace einstein_gap {

/// H^2(X # k*CP2bar, R) with its diagonal intersection form. Basis layout:
/// first b_plus_X positive vectors, then b_minus_X negative vectors (the
/// X-block), then the k exceptional classes E_1..E_k, each of square -1.
/// c1X lives in the X-block, so Q(c1X, E_j) = 0 automatically.
class BlowupLattice {
 public:
  std::int64_t c1sq_X = 0;
  int b_plus_X = 0;
  int b_minus_X = 0;
  int k = 0;

  Eigen::VectorXd q_diag;  // entries +1 / -1
  Eigen::VectorXd c1X;

  int dim() const { return b_plus_X + b_minus_X + k; }

  /// Intersection pairing Q(u, v) = sum_i q_i u_i v_i.
  double pair(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;

  /// Poincare dual of the j-th exceptional divisor (0-based), a negative
  /// unit basis vector.
  Eigen::VectorXd exceptional(int j) const;
};

/// Maximal positive-definite subspace, stored as a basis (columns) together
/// with its Q-Gram matrix. Positive definiteness of the Gram matrix is the
/// defining property and is checked on construction.
struct Polarization {
  Eigen::MatrixXd basis;  // dim x b_plus_X
  Eigen::MatrixXd gram;   // basis^T Q basis, positive definite
};

/// Choice of sign per exceptional class: s_j = +1 encodes j in S, so the
/// spin^c class under test is c1X + sum_j s_j E_j.
struct SignPattern {
  std::vector<int> signs;  // entries +1 / -1

  SignPattern negated() const;
};

/// The inequality chain (c_S^+)^2 >= (c1X^+)^2 >= c1sq_X together with the
/// exact expansion lhs = mid + 2*sum(cross_terms) + defect.
struct ChainReport {
  double lhs = 0.0;                  // (c_S^+)^2
  double mid = 0.0;                  // (c1X^+)^2
  double rhs = 0.0;                  // c1sq_X
  std::vector<double> cross_terms;   // c1X^+ . eps_j^+, all >= 0 by the choice of S
  double defect = 0.0;               // (sum eps_j^+)^2
};

enum class EqualityClass { Strict, EqualityCandidate };

/// Default embedding: c1X = (sqrt(c1sq_X), 0, ..., 0).
BlowupLattice build_blowup_lattice(std::int64_t c1sq_X, int b_plus_X,
                                   int b_minus_X, int k);

/// Generic embedding: c1X is placed pseudo-randomly in the X-block with the
/// prescribed square, generically with nonzero negative-block components.
BlowupLattice build_blowup_lattice_generic(std::int64_t c1sq_X, int b_plus_X,
                                           int b_minus_X, int k,
                                           std::uint64_t seed);

/// The coordinate polarization spanned by the first b_plus_X basis vectors.
Polarization standard_polarization(const BlowupLattice& lat);

/// Wraps a basis into a Polarization, checking the Gram matrix.
Polarization make_polarization(const BlowupLattice& lat,
                               const Eigen::MatrixXd& basis);

/// Pushes the standard polarization around by exp(A) for a random Q-skew
/// generator A (A^T Q + Q A = 0) with entries uniform in
/// [-boost_scale, boost_scale]. boost_scale = 0 returns the standard
/// polarization exactly. Deterministic in the seed. Throws
/// DegeneratePolarization if the exponential overflows the working precision.
Polarization random_polarization(const BlowupLattice& lat, std::uint64_t seed,
                                 double boost_scale);

/// Q-orthogonal projection of v onto span(H.basis):
/// v+ = B (B^T Q B)^{-1} B^T Q v.
Eigen::VectorXd orthogonal_projection(const BlowupLattice& lat,
                                      const Eigen::VectorXd& v,
                                      const Polarization& H);

/// Picks s_j with Q(c1X^+, s_j E_j^+) >= 0; ties (zero cross term) go to +1.
SignPattern choose_sign_pattern(const BlowupLattice& lat,
                                const Polarization& H);

/// Evaluates the chain for the sign pattern chosen above.
ChainReport inequality_chain(const BlowupLattice& lat, const Polarization& H);

/// EqualityCandidate iff |lhs - rhs| <= tol; in that case defect and every
/// cross term must also be <= tol, else InternalInconsistency is thrown.
EqualityClass equality_case_detect(const ChainReport& report, double tol);

/// Violations of the chain at relative tolerance tol (empty means clean):
/// lhs >= mid >= rhs, cross terms and defect nonnegative, and the algebraic
/// identity lhs = mid + 2*sum(cross) + defect.
std::vector<std::string> check_chain(const ChainReport& report, double tol);

}  // namespace einstein_gap
