#include "einstein_gap/lattice.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace einstein_gap {

double BlowupLattice::pair(const Eigen::VectorXd& u,
                           const Eigen::VectorXd& v) const {
  return u.dot(q_diag.cwiseProduct(v));
}

Eigen::VectorXd BlowupLattice::exceptional(int j) const {
  if (j < 0 || j >= k) {
    throw InvalidInput("exceptional: index out of range");
  }
  Eigen::VectorXd e = Eigen::VectorXd::Zero(dim());
  e[b_plus_X + b_minus_X + j] = 1.0;
  return e;
}

namespace {

BlowupLattice lattice_shell(std::int64_t c1sq_X, int b_plus_X, int b_minus_X,
                            int k) {
  if (c1sq_X <= 0) {
    throw InvalidInput("build_blowup_lattice: c1sq_X must be > 0");
  }
  if (b_plus_X < 1 || b_minus_X < 0 || k < 0) {
    throw InvalidInput("build_blowup_lattice: need b_plus_X >= 1, "
                       "b_minus_X >= 0, k >= 0");
  }
  BlowupLattice lat;
  lat.c1sq_X = c1sq_X;
  lat.b_plus_X = b_plus_X;
  lat.b_minus_X = b_minus_X;
  lat.k = k;
  lat.q_diag = Eigen::VectorXd::Constant(lat.dim(), -1.0);
  lat.q_diag.head(b_plus_X).setConstant(1.0);
  return lat;
}

}  // namespace

BlowupLattice build_blowup_lattice(std::int64_t c1sq_X, int b_plus_X,
                                   int b_minus_X, int k) {
  BlowupLattice lat = lattice_shell(c1sq_X, b_plus_X, b_minus_X, k);
  lat.c1X = Eigen::VectorXd::Zero(lat.dim());
  lat.c1X[0] = std::sqrt(static_cast<double>(c1sq_X));
  return lat;
}

BlowupLattice build_blowup_lattice_generic(std::int64_t c1sq_X, int b_plus_X,
                                           int b_minus_X, int k,
                                           std::uint64_t seed) {
  BlowupLattice lat = lattice_shell(c1sq_X, b_plus_X, b_minus_X, k);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Negative X-block part first, then scale a random positive direction so
  // that Q(c1X, c1X) = |p|^2 - |m|^2 lands exactly on c1sq_X.
  Eigen::VectorXd neg = Eigen::VectorXd::Zero(b_minus_X);
  for (int i = 0; i < b_minus_X; ++i) neg[i] = 0.5 * gauss(rng);
  Eigen::VectorXd pos(b_plus_X);
  do {
    for (int i = 0; i < b_plus_X; ++i) pos[i] = gauss(rng);
  } while (pos.norm() < 1e-8);
  pos *= std::sqrt(static_cast<double>(c1sq_X) + neg.squaredNorm()) /
         pos.norm();

  lat.c1X = Eigen::VectorXd::Zero(lat.dim());
  lat.c1X.head(b_plus_X) = pos;
  lat.c1X.segment(b_plus_X, b_minus_X) = neg;
  return lat;
}

Polarization standard_polarization(const BlowupLattice& lat) {
  Eigen::MatrixXd basis =
      Eigen::MatrixXd::Identity(lat.dim(), lat.dim()).leftCols(lat.b_plus_X);
  return make_polarization(lat, basis);
}

Polarization make_polarization(const BlowupLattice& lat,
                               const Eigen::MatrixXd& basis) {
  if (basis.rows() != lat.dim() || basis.cols() != lat.b_plus_X) {
    throw InvalidInput("make_polarization: basis must be dim x b_plus_X "
                       "(maximality of the positive subspace)");
  }
  if (!basis.allFinite()) {
    throw DegeneratePolarization("make_polarization: non-finite basis");
  }
  Polarization H;
  H.basis = basis;
  H.gram = basis.transpose() * lat.q_diag.asDiagonal() * basis;
  H.gram = 0.5 * (H.gram + H.gram.transpose().eval());
  Eigen::LLT<Eigen::MatrixXd> llt(H.gram);
  if (llt.info() != Eigen::Success) {
    throw DegeneratePolarization(
        "make_polarization: Gram matrix is not positive definite");
  }
  return H;
}

Polarization random_polarization(const BlowupLattice& lat, std::uint64_t seed,
                                 double boost_scale) {
  if (boost_scale < 0.0) {
    throw InvalidInput("random_polarization: boost_scale must be >= 0");
  }
  const int n = lat.dim();
  if (boost_scale == 0.0) {
    return standard_polarization(lat);
  }

  // Free entries of so(p, q) for diagonal Q: skew within each sign block,
  // symmetric across blocks. Sampled row-major over i < j for determinism.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = boost_scale * uni(rng);
      gen(i, j) = v;
      gen(j, i) = (lat.q_diag[i] == lat.q_diag[j]) ? -v : v;
    }
  }

  const Eigen::MatrixXd iso = gen.exp();
  if (!iso.allFinite()) {
    std::ostringstream what;
    what << "random_polarization: exp(generator) overflowed at boost_scale = "
         << boost_scale;
    throw DegeneratePolarization(what.str());
  }
  return make_polarization(lat, iso.leftCols(lat.b_plus_X));
}

Eigen::VectorXd orthogonal_projection(const BlowupLattice& lat,
                                      const Eigen::VectorXd& v,
                                      const Polarization& H) {
  if (v.size() != lat.dim()) {
    throw InvalidInput("orthogonal_projection: vector has wrong dimension");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(H.gram);
  if (llt.info() != Eigen::Success) {
    throw DegeneratePolarization(
        "orthogonal_projection: Gram matrix is not positive definite");
  }
  const Eigen::VectorXd rhs =
      H.basis.transpose() * lat.q_diag.cwiseProduct(v);
  return H.basis * llt.solve(rhs);
}

SignPattern SignPattern::negated() const {
  SignPattern s = *this;
  for (int& v : s.signs) v = -v;
  return s;
}

SignPattern choose_sign_pattern(const BlowupLattice& lat,
                                const Polarization& H) {
  const Eigen::VectorXd c1_plus = orthogonal_projection(lat, lat.c1X, H);
  SignPattern s;
  s.signs.resize(lat.k);
  for (int j = 0; j < lat.k; ++j) {
    const Eigen::VectorXd ej_plus =
        orthogonal_projection(lat, lat.exceptional(j), H);
    const double cross = lat.pair(c1_plus, ej_plus);
    s.signs[j] = (cross >= 0.0) ? 1 : -1;  // tie at zero goes to +1
  }
  return s;
}

ChainReport inequality_chain(const BlowupLattice& lat, const Polarization& H) {
  const SignPattern s = choose_sign_pattern(lat, H);
  const Eigen::VectorXd c1_plus = orthogonal_projection(lat, lat.c1X, H);

  Eigen::VectorXd c_S = lat.c1X;
  Eigen::VectorXd sum_eps_plus = Eigen::VectorXd::Zero(lat.dim());
  ChainReport rep;
  rep.cross_terms.resize(lat.k);
  for (int j = 0; j < lat.k; ++j) {
    const Eigen::VectorXd eps_j =
        static_cast<double>(s.signs[j]) * lat.exceptional(j);
    c_S += eps_j;
    const Eigen::VectorXd eps_j_plus = orthogonal_projection(lat, eps_j, H);
    sum_eps_plus += eps_j_plus;
    rep.cross_terms[j] = lat.pair(c1_plus, eps_j_plus);
  }

  const Eigen::VectorXd c_S_plus = orthogonal_projection(lat, c_S, H);
  rep.lhs = lat.pair(c_S_plus, c_S_plus);
  rep.mid = lat.pair(c1_plus, c1_plus);
  rep.rhs = static_cast<double>(lat.c1sq_X);
  rep.defect = lat.pair(sum_eps_plus, sum_eps_plus);
  return rep;
}

EqualityClass equality_case_detect(const ChainReport& report, double tol) {
  if (tol < 0.0) {
    throw InvalidInput("equality_case_detect: tol must be >= 0");
  }
  if (std::abs(report.lhs - report.rhs) > tol) {
    return EqualityClass::Strict;
  }
  // Equality collapses the whole chain: every nonnegative term must vanish.
  std::ostringstream what;
  if (report.defect > tol) {
    what << "equality_case_detect: lhs = rhs but defect = " << report.defect
         << " > tol";
    throw InternalInconsistency(what.str());
  }
  for (double c : report.cross_terms) {
    if (std::abs(c) > tol) {
      what << "equality_case_detect: lhs = rhs but a cross term = " << c
           << " exceeds tol";
      throw InternalInconsistency(what.str());
    }
  }
  return EqualityClass::EqualityCandidate;
}

std::vector<std::string> check_chain(const ChainReport& rep, double tol) {
  std::vector<std::string> bad;
  const double scale =
      std::max({std::abs(rep.lhs), std::abs(rep.mid), std::abs(rep.rhs), 1.0});
  const double slack = tol * scale;
  auto complain = [&bad](const std::string& msg) { bad.push_back(msg); };

  std::ostringstream os;
  if (rep.lhs < rep.mid - slack) {
    os << "lhs < mid: " << rep.lhs << " < " << rep.mid;
    complain(os.str());
    os.str("");
  }
  if (rep.mid < rep.rhs - slack) {
    os << "mid < rhs: " << rep.mid << " < " << rep.rhs;
    complain(os.str());
    os.str("");
  }
  for (std::size_t j = 0; j < rep.cross_terms.size(); ++j) {
    if (rep.cross_terms[j] < -slack) {
      os << "cross term " << j << " negative: " << rep.cross_terms[j];
      complain(os.str());
      os.str("");
    }
  }
  if (rep.defect < -slack) {
    os << "defect negative: " << rep.defect;
    complain(os.str());
    os.str("");
  }
  double cross_sum = 0.0;
  for (double c : rep.cross_terms) cross_sum += c;
  const double residual = rep.lhs - (rep.mid + 2.0 * cross_sum + rep.defect);
  if (std::abs(residual) > slack) {
    os << "identity residual " << residual << " exceeds " << slack;
    complain(os.str());
  }
  return bad;
}

}  // namespace einstein_gap
