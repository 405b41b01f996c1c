#pragma once

#include "polyrad/problem.hpp"

#include <vector>

namespace polyrad {

/// Exponent bookkeeping of the sublinear non-existence argument: the
/// integrability bootstrap q_0 = 1, 1/q_h = alpha/q_{h-1} - 2m/n, run until
/// the inverse exponent leaves (0, 1], plus the closing inequality that
/// picks the final integrability power q.
///
/// The cutoff index j_star satisfies 1/q_{j_star+1} <= 0 < 1/q_{j_star}.
struct MoserSchedule {
  int n = 0;
  int m = 0;
  Exponent alpha;

  /// 1/q_h for h = 0..j_star+1, exact rationals when alpha is rational.
  std::vector<Rational> inv_q;
  int j_star = 0;

  /// (2 m alpha/(1-alpha) + 2) * alpha^{j_star+1}; the coefficient of q in
  /// the closing exponent E(q) = 2m/(1-alpha) + n - closing_coefficient * q.
  Rational closing_coefficient;

  /// Smallest integer q > 1 with E(q) < 0.
  long q_min = 0;

  /// E(q) exactly.
  Rational closing_exponent(long q) const;

  /// Set when alpha was supplied as a floating value and some computed
  /// quantity landed within 1e-12 of a sign boundary; exact inputs never
  /// trip this.
  bool indeterminate = false;
};

/// Builds the schedule; requires 0 < alpha < 1 (alpha = 0 is handled by the
/// Pizzetti argument, not by iteration). Exact when alpha is rational.
MoserSchedule moser_schedule(int n, int m, const Exponent& alpha);

/// Verifies the absorption identity of the bootstrap step:
/// (n+2m-2) alpha^h - (n/q_h + 2m-2) = (1-alpha^h)[2m/(1-alpha) - 2(m-1)],
/// strictly positive for h >= 1 and exactly 0 at h = 0. The identity is
/// formal in h (1/q_h taken from the closed form), so any h >= 0 is allowed.
struct AbsorptionCheck {
  bool holds = false;
  bool equality_at_h0 = false;
  Rational lhs;  ///< (n+2m-2) alpha^h - (n/q_h + 2m-2)
};
AbsorptionCheck sublinear_absorption_check(int n, int m, const Exponent& alpha, int h);

/// Decay bookkeeping of the superlinear non-existence argument: the cutoff
/// power p = 2 m alpha/(alpha-1) > 2m and the ball-average bound
/// integral_{B_R} u <= C R^{n - 2m/(alpha-1)}, whose exponent is < n, so the
/// o(R^n) Liouville hypothesis is met.
struct DecayCertificate {
  int n = 0;
  int m = 0;
  Exponent alpha;
  Rational cutoff_power;    ///< p = 2 m alpha/(alpha-1)
  Rational decay_exponent;  ///< n - 2m/(alpha-1)
  bool liouville_applicable = false;  ///< decay_exponent < n (always, for alpha > 1)
};

/// Requires alpha > 1.
DecayCertificate decay_certificate(int n, int m, const Exponent& alpha);

}  // namespace polyrad
