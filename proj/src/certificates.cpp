#include "polyrad/certificates.hpp"

#include <cmath>

namespace polyrad {

namespace {

Rational exact_alpha(const Exponent& alpha) {
  // Floating alpha converts exactly (any double is rational); computations
  // below then proceed without rounding, and only sign decisions close to
  // the boundary are flagged for inexact inputs.
  return alpha.exact() ? *alpha.exact() : Rational(alpha.value());
}

bool near_boundary(const Rational& value, bool inexact_input) {
  if (!inexact_input) return false;
  const double v = std::abs(to_double(value));
  return v != 0.0 && v < 1e-12;
}

}  // namespace

Rational MoserSchedule::closing_exponent(long q) const {
  const Rational a = alpha.exact() ? *alpha.exact() : Rational(alpha.value());
  return Rational(2 * m) / (Rational(1) - a) + n - closing_coefficient * q;
}

MoserSchedule moser_schedule(int n, int m, const Exponent& alpha) {
  if (n < 1 || m < 1) throw std::invalid_argument("moser_schedule: n, m must be >= 1");
  if (alpha.compare(0) <= 0)
    throw std::invalid_argument("moser_schedule: requires alpha > 0 (alpha = 0 has its own argument)");
  if (alpha.compare(1) >= 0) throw std::invalid_argument("moser_schedule: requires alpha < 1");

  MoserSchedule s;
  s.n = n;
  s.m = m;
  s.alpha = alpha;

  const bool inexact = !alpha.is_exact();
  const Rational a = exact_alpha(alpha);
  const Rational step(2 * m, n);

  // 1/q_0 = 1; 1/q_{h+1} = alpha * (1/q_h) - 2m/n. The sequence is strictly
  // decreasing with limit -2m/(n(1-alpha)) < 0, so it leaves (0, 1] after
  // finitely many steps.
  s.inv_q.push_back(Rational(1));
  while (s.inv_q.back() > 0) {
    const Rational next = a * s.inv_q.back() - step;
    s.indeterminate = s.indeterminate || near_boundary(next, inexact);
    s.inv_q.push_back(next);
  }
  s.j_star = static_cast<int>(s.inv_q.size()) - 2;

  const Rational alpha_pow = rational_pow(a, s.j_star + 1);
  s.closing_coefficient = (Rational(2 * m) * a / (Rational(1) - a) + 2) * alpha_pow;

  // E(q) = 2m/(1-alpha) + n - closing_coefficient * q is affine and strictly
  // decreasing in q (the coefficient is positive), so the minimal admissible
  // integer exponent exists.
  long q = 2;
  while (s.closing_exponent(q) >= 0) ++q;
  s.q_min = q;
  s.indeterminate = s.indeterminate || near_boundary(s.closing_exponent(q), inexact) ||
                    near_boundary(s.closing_exponent(q - 1), inexact);
  return s;
}

AbsorptionCheck sublinear_absorption_check(int n, int m, const Exponent& alpha, int h) {
  if (n < 1 || m < 1) throw std::invalid_argument("sublinear_absorption_check: n, m must be >= 1");
  if (alpha.compare(0) <= 0 || alpha.compare(1) >= 0)
    throw std::invalid_argument("sublinear_absorption_check: requires 0 < alpha < 1");
  if (h < 0) throw std::out_of_range("sublinear_absorption_check: h must be >= 0");

  // 1/q_h from the closed form; the identity is formal in h, so it is
  // checked for any h >= 0, not only below the cutoff index.
  const Rational a = exact_alpha(alpha);
  const Rational alpha_h = rational_pow(a, h);
  const Rational inv_qh =
      alpha_h - Rational(2 * m) * (Rational(1) - alpha_h) / (Rational(n) * (Rational(1) - a));
  const Rational lhs = Rational(n + 2 * m - 2) * alpha_h - (Rational(n) * inv_qh + 2 * m - 2);
  const Rational rhs =
      (Rational(1) - alpha_h) * (Rational(2 * m) / (Rational(1) - a) - 2 * (m - 1));

  AbsorptionCheck out;
  out.lhs = lhs;
  out.equality_at_h0 = (h == 0);
  out.holds = (lhs == rhs) && (h == 0 ? lhs == 0 : lhs > 0);
  return out;
}

DecayCertificate decay_certificate(int n, int m, const Exponent& alpha) {
  if (n < 1 || m < 1) throw std::invalid_argument("decay_certificate: n, m must be >= 1");
  if (alpha.compare(1) <= 0) throw std::invalid_argument("decay_certificate: requires alpha > 1");

  DecayCertificate c;
  c.n = n;
  c.m = m;
  c.alpha = alpha;
  const Rational a = exact_alpha(alpha);
  c.cutoff_power = Rational(2 * m) * a / (a - 1);
  c.decay_exponent = Rational(n) - Rational(2 * m) / (a - 1);
  c.liouville_applicable = c.decay_exponent < n;
  return c;
}

}  // namespace polyrad
