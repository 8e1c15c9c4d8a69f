#include "einstein_gap/char_numbers.hpp"

#include <numbers>
#include <sstream>

namespace einstein_gap {

const char* to_string(HtVerdict v) {
  switch (v) {
    case HtVerdict::StrictlySatisfied:
      return "StrictlySatisfied";
    case HtVerdict::Equality:
      return "Equality";
    case HtVerdict::Violated:
      return "Violated";
  }
  return "?";
}

double SwBound::value() const {
  const double pi = std::numbers::pi;
  return 32.0 * pi * pi * static_cast<double>(multiplier);
}

CharNumbers blow_up_invariants(const CharNumbers& x, std::int64_t k) {
  if (k < 0) {
    throw InvalidInput("blow_up_invariants: k must be >= 0");
  }
  return {x.chi + k, x.tau - k};
}

HtStatus hitchin_thorpe_status(const CharNumbers& x) {
  HtStatus st;
  st.margin_plus = 2 * x.chi + 3 * x.tau;
  st.margin_minus = 2 * x.chi - 3 * x.tau;
  const std::int64_t m = std::min(st.margin_plus, st.margin_minus);
  st.verdict = m > 0   ? HtVerdict::StrictlySatisfied
               : m == 0 ? HtVerdict::Equality
                        : HtVerdict::Violated;
  return st;
}

BettiPair betti_from_chi_tau(const CharNumbers& x, std::int64_t b1) {
  if (b1 < 0) {
    throw InvalidInput("betti_from_chi_tau: b1 must be >= 0");
  }
  const std::int64_t b2 = x.chi - 2 + 2 * b1;
  std::ostringstream what;
  if (b2 < 0) {
    what << "betti_from_chi_tau: b2 = chi - 2 + 2*b1 = " << b2 << " < 0";
    throw NonRealizable(what.str());
  }
  if ((b2 + x.tau) % 2 != 0) {
    what << "betti_from_chi_tau: b2 + tau = " << b2 + x.tau
         << " is odd, no integer Betti split";
    throw NonRealizable(what.str());
  }
  BettiPair b{(b2 + x.tau) / 2, (b2 - x.tau) / 2};
  if (b.b_plus < 0 || b.b_minus < 0) {
    what << "betti_from_chi_tau: |tau| = " << (x.tau < 0 ? -x.tau : x.tau)
         << " exceeds b2 = " << b2;
    throw NonRealizable(what.str());
  }
  return b;
}

SwBound sw_lower_bound(const CharNumbers& blown_up, std::int64_t k) {
  if (k <= 0) {
    throw InvalidInput("sw_lower_bound: k must be > 0");
  }
  const std::int64_t n = blown_up.c1sq() + k;
  if (n <= 0) {
    std::ostringstream what;
    what << "sw_lower_bound: 2*chi + 3*tau + k = " << n
         << " <= 0, the minimal model is not of general type";
    throw InvalidInput(what.str());
  }
  return {n, true};
}

ObstructionReport einstein_obstructed(std::int64_t c1sq_X, std::int64_t k) {
  if (c1sq_X <= 0) {
    throw InvalidInput("einstein_obstructed: c1sq_X must be > 0");
  }
  if (k <= 0) {
    throw InvalidInput("einstein_obstructed: k must be > 0");
  }
  ObstructionReport rep;
  rep.c1sq_X = c1sq_X;
  rep.k = k;
  rep.sw_bound = c1sq_X;  // 2*chi_M + 3*tau_M + k collapses to c1sq_X
  const bool obstructed = 3 * k >= 2 * c1sq_X;
  rep.einstein_feasible = !obstructed;
  std::ostringstream reason;
  if (obstructed) {
    reason << "3k = " << 3 * k << " >= 2c1^2(X) = " << 2 * c1sq_X
           << ": an Einstein metric would force c1^2(X) - k = 2chi + 3tau > "
              "(1/3)c1^2(X), i.e. (2/3)c1^2(X) > k, contradiction";
  } else {
    reason << "3k = " << 3 * k << " < 2c1^2(X) = " << 2 * c1sq_X
           << ": the blow-up criterion does not apply";
  }
  rep.reason = reason.str();
  return rep;
}

KRange admissible_k_range(std::int64_t c1sq_X) {
  if (c1sq_X <= 0) {
    throw InvalidInput("admissible_k_range: c1sq_X must be > 0");
  }
  // ceil(2c/3) without rationals; c > 0 so no sign games.
  const std::int64_t k_min = (2 * c1sq_X + 2) / 3;
  return {k_min, c1sq_X - 1};
}

}  // namespace einstein_gap
