#pragma once

#include <cstdint>
#include <string>

#include "einstein_gap/errors.hpp"

namespace einstein_gap {

/// Euler characteristic and signature of a compact oriented 4-manifold.
/// For an almost-complex manifold, c1^2 = 2*chi + 3*tau; that identity is
/// the currency every check below trades in, so it gets a named accessor.
struct CharNumbers {
  std::int64_t chi = 0;
  std::int64_t tau = 0;

  std::int64_t c1sq() const { return 2 * chi + 3 * tau; }

  friend bool operator==(const CharNumbers&, const CharNumbers&) = default;
};

enum class HtVerdict { StrictlySatisfied, Equality, Violated };

const char* to_string(HtVerdict v);

/// Margins of the Hitchin-Thorpe inequality 2*chi >= 3*|tau|, kept as the
/// two exact integers 2*chi + 3*tau and 2*chi - 3*tau.
struct HtStatus {
  std::int64_t margin_plus = 0;   // 2*chi + 3*tau
  std::int64_t margin_minus = 0;  // 2*chi - 3*tau
  HtVerdict verdict = HtVerdict::Violated;
};

/// Scalar-curvature lower bound: integral of s^2 exceeds multiplier * 32*pi^2.
/// The multiplier is stored exactly; the inequality is strict (never attained).
struct SwBound {
  std::int64_t multiplier = 0;
  bool strict = true;

  double value() const;  // 32*pi^2 * multiplier, presentation only
};

struct BettiPair {
  std::int64_t b_plus = 0;
  std::int64_t b_minus = 0;
};

struct ObstructionReport {
  std::int64_t c1sq_X = 0;
  std::int64_t k = 0;
  std::int64_t sw_bound = 0;  // integer multiplier of 32*pi^2; equals c1sq_X
  bool einstein_feasible = true;
  std::string reason;

  bool obstructed() const { return !einstein_feasible; }
};

/// Closed integer interval of admissible blow-up counts; empty when
/// k_min > k_max.
struct KRange {
  std::int64_t k_min = 1;
  std::int64_t k_max = 0;

  bool empty() const { return k_min > k_max; }
  std::int64_t size() const { return empty() ? 0 : k_max - k_min + 1; }
};

/// Blowing up k points: chi -> chi + k, tau -> tau - k (so c1^2 drops by k).
CharNumbers blow_up_invariants(const CharNumbers& x, std::int64_t k);

HtStatus hitchin_thorpe_status(const CharNumbers& x);

/// Betti decomposition b2 = chi - 2 + 2*b1, b± = (b2 ± tau)/2. The default
/// b1 = 0 is the simply connected convention; the explicit-b1 variant is
/// provided for non-simply-connected callers. Throws NonRealizable when
/// parity or positivity fails.
BettiPair betti_from_chi_tau(const CharNumbers& x, std::int64_t b1 = 0);

/// Lower bound for the L^2 norm of scalar curvature on the blow-up M of a
/// minimal general-type surface: multiplier n = 2*chi_M + 3*tau_M + k.
/// Throws InvalidInput when n <= 0 (the minimal model is not general type).
SwBound sw_lower_bound(const CharNumbers& blown_up, std::int64_t k);

/// Non-existence criterion: no Einstein metric on the k-fold blow-up when
/// 3*k >= 2*c1sq_X. Pure integer comparison; no floating point anywhere.
ObstructionReport einstein_obstructed(std::int64_t c1sq_X, std::int64_t k);

/// All k with 3*k >= 2*c1sq_X and k < c1sq_X. Nonempty iff c1sq_X >= 3.
KRange admissible_k_range(std::int64_t c1sq_X);

}  // namespace einstein_gap
