#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "einstein_gap/char_numbers.hpp"
#include "einstein_gap/lattice.hpp"

namespace einstein_gap {

/// A named minimal surface with validated invariants. c1sq is always the
/// derived 2*chi + 3*tau; the minimal flag is asserted by the caller, not
/// proven here.
struct SurfaceSpec {
  std::string name;
  std::optional<std::int64_t> degree_m;  // set for CP^3 hypersurfaces
  CharNumbers chars;
  std::int64_t c1sq = 0;
  bool minimal = false;
  bool simply_connected = false;

  bool general_type() const { return c1sq > 0 && minimal; }
};

/// One member of the infinite family: the degree-(j+4) hypersurface blown up
/// k_min times. c1sq = j^3 + 4j^2; k ranges over [k_min, k_max].
struct CatalogRow {
  std::int64_t j = 0;
  std::int64_t m = 0;  // j + 4
  std::int64_t chi_X = 0;
  std::int64_t tau_X = 0;
  std::int64_t c1sq = 0;
  std::int64_t k_min = 0;
  std::int64_t k_max = 0;
  std::int64_t chi_M = 0;
  std::int64_t tau_M = 0;
  std::int64_t ht_margin = 0;  // c1sq - k_min = 2*chi_M + 3*tau_M
  bool obstructed = false;

  friend bool operator==(const CatalogRow&, const CatalogRow&) = default;
};

struct GeographyVerdict {
  bool passes = false;
  std::vector<std::string> failures;
};

/// First Chern class and symplectic class inside a blow-up lattice.
struct SymplecticSpec {
  Eigen::VectorXd c1;
  Eigen::VectorXd omega;
  const BlowupLattice* lattice = nullptr;
  int b_plus = 1;
};

struct SymplecticVerdict {
  bool general_type = false;
  bool cond_a = false;  // c1^2 > 0
  bool cond_b = false;  // c1 . omega < 0
  std::string note;
};

/// Smooth degree-m hypersurface in CP^3: c1sq = m(m-4)^2,
/// chi = m(m^2 - 4m + 6), tau = m(4 - m^2)/3 (always an integer).
SurfaceSpec hypersurface_invariants(std::int64_t m);

/// Free-form constructor for surfaces the caller knows about.
SurfaceSpec make_surface(const std::string& name, std::int64_t chi,
                         std::int64_t tau, bool minimal,
                         bool simply_connected);

/// Rows j = 1..j_max of the obstruction family, one canonical k = k_min per
/// row with the full range reported as columns.
std::vector<CatalogRow> fermat_family_catalog(std::int64_t j_max);

/// Advisory geography screens (outside the obstruction argument itself):
/// c1sq > 0, (chi + tau) divisible by 4, c1sq <= 9(chi + tau)/4, and the
/// minimal flag. Returns the verdict; never throws.
GeographyVerdict validate_minimal_general_type(const SurfaceSpec& s);

/// (a) c1^2 > 0 and (b) c1 . omega < 0, evaluated in the given lattice.
/// For b_plus > 1 condition (b) is still evaluated but annotated as
/// automatic. Throws InvalidInput when omega^2 <= 0.
SymplecticVerdict symplectic_general_type(const SymplecticSpec& s);

}  // namespace einstein_gap
