#include "einstein_gap/geography.hpp"

#include <sstream>

namespace einstein_gap {

SurfaceSpec hypersurface_invariants(std::int64_t m) {
  if (m < 1) {
    throw InvalidInput("hypersurface_invariants: degree m must be >= 1");
  }
  const std::int64_t tau_num = m * (4 - m * m);
  if (tau_num % 3 != 0) {
    // m(4 - m^2) = m(2-m)(2+m) is divisible by 3 for every residue of m.
    throw InternalInconsistency(
        "hypersurface_invariants: m(4 - m^2) not divisible by 3");
  }
  SurfaceSpec s;
  std::ostringstream name;
  name << "fermat_m" << m;
  s.name = name.str();
  s.degree_m = m;
  s.chars = {m * (m * m - 4 * m + 6), tau_num / 3};
  s.c1sq = s.chars.c1sq();
  if (s.c1sq != m * (m - 4) * (m - 4)) {
    throw InternalInconsistency(
        "hypersurface_invariants: 2chi + 3tau != m(m-4)^2");
  }
  s.minimal = true;
  s.simply_connected = true;
  return s;
}

SurfaceSpec make_surface(const std::string& name, std::int64_t chi,
                         std::int64_t tau, bool minimal,
                         bool simply_connected) {
  SurfaceSpec s;
  s.name = name;
  s.chars = {chi, tau};
  s.c1sq = s.chars.c1sq();
  s.minimal = minimal;
  s.simply_connected = simply_connected;
  return s;
}

std::vector<CatalogRow> fermat_family_catalog(std::int64_t j_max) {
  if (j_max < 1) {
    throw InvalidInput("fermat_family_catalog: j_max must be >= 1");
  }
  std::vector<CatalogRow> rows;
  rows.reserve(static_cast<std::size_t>(j_max));
  for (std::int64_t j = 1; j <= j_max; ++j) {
    const SurfaceSpec x = hypersurface_invariants(j + 4);
    CatalogRow row;
    row.j = j;
    row.m = j + 4;
    row.chi_X = x.chars.chi;
    row.tau_X = x.chars.tau;
    row.c1sq = x.c1sq;
    const KRange range = admissible_k_range(x.c1sq);
    row.k_min = range.k_min;
    row.k_max = range.k_max;
    const CharNumbers blown = blow_up_invariants(x.chars, range.k_min);
    row.chi_M = blown.chi;
    row.tau_M = blown.tau;
    row.ht_margin = row.c1sq - row.k_min;
    row.obstructed = einstein_obstructed(x.c1sq, range.k_min).obstructed();
    rows.push_back(row);
  }
  return rows;
}

GeographyVerdict validate_minimal_general_type(const SurfaceSpec& s) {
  GeographyVerdict v;
  std::ostringstream os;
  if (s.c1sq <= 0) {
    os << "c1sq = " << s.c1sq << " is not positive";
    v.failures.push_back(os.str());
    os.str("");
  }
  const std::int64_t chi_plus_tau = s.chars.chi + s.chars.tau;
  if (chi_plus_tau % 4 != 0) {
    os << "chi + tau = " << chi_plus_tau << " is not divisible by 4";
    v.failures.push_back(os.str());
    os.str("");
  } else if (4 * s.c1sq > 9 * chi_plus_tau) {
    os << "Bogomolov-Miyaoka-Yau screen: c1sq = " << s.c1sq << " exceeds 9*"
       << chi_plus_tau / 4;
    v.failures.push_back(os.str());
    os.str("");
  }
  if (!s.minimal) {
    v.failures.push_back("surface is not flagged minimal");
  }
  v.passes = v.failures.empty();
  return v;
}

SymplecticVerdict symplectic_general_type(const SymplecticSpec& s) {
  if (s.lattice == nullptr) {
    throw InvalidInput("symplectic_general_type: missing lattice");
  }
  const BlowupLattice& lat = *s.lattice;
  const double omega_sq = lat.pair(s.omega, s.omega);
  if (omega_sq <= 0.0) {
    std::ostringstream what;
    what << "symplectic_general_type: omega^2 = " << omega_sq
         << " must be positive";
    throw InvalidInput(what.str());
  }
  SymplecticVerdict v;
  const double c1_sq = lat.pair(s.c1, s.c1);
  const double c1_dot_omega = lat.pair(s.c1, s.omega);
  v.cond_a = c1_sq > 0.0;
  v.cond_b = c1_dot_omega < 0.0;
  v.general_type = v.cond_a && v.cond_b;
  std::ostringstream note;
  note << "c1^2 = " << c1_sq << ", c1.omega = " << c1_dot_omega;
  if (s.b_plus > 1) {
    note << "; condition (b) automatic for b+ > 1 (Taubes), evaluated anyway";
  }
  v.note = note.str();
  return v;
}

}  // namespace einstein_gap
