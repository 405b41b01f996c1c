#pragma once

#include "polyrad/problem.hpp"
#include "polyrad/radial_poly.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace polyrad {

std::vector<double> linear_grid(double lo, double hi, int count);
std::vector<double> geometric_grid(double lo, double hi, int count);

/// A radial function with exact iterated-Laplacian recursions, used both as
/// candidate solutions and as comparison profiles. Every kind computes
/// Delta^i u by exact coefficient algebra; only the final evaluation at a
/// radius is floating point, so residuals isolate modeling error rather than
/// differentiation error.
class ClosedForm {
 public:
  enum class Kind { power, bubble, exp_gaussian, constant, polynomial };

  Kind kind() const { return kind_; }

  /// Dimension the form was built for; 0 means any (constants).
  int dimension() const { return n_; }

  double value(double r) const { return laplacian(0, r); }

  /// Delta^order u at radius r, order >= 0.
  double laplacian(int order, double r) const;

  // Power family u = C r^beta.
  const Rational& power_beta() const;
  const Rational& power_product_constant() const;  ///< K = prod (beta-2j)(beta-2j+n-2)
  double power_amplitude() const;                  ///< C = K^{-1/(1-alpha)}
  /// C as an exact rational when 1/(1-alpha) is an integer.
  const std::optional<Rational>& power_amplitude_exact() const;

  // Bubble family u = (2 lambda / (1 + lambda^2 r^2))^{(n-2m)/2}.
  double bubble_lambda() const;
  const Rational& bubble_decay_exponent() const;  ///< (n-2m)/2

  int half_order() const { return m_; }  ///< m for power/bubble, 0 otherwise

  friend ClosedForm power_family(int n, int m, const Exponent& alpha);
  friend ClosedForm bubble_family(int n, int m, double lambda);
  friend ClosedForm exp_gaussian_form(int n, double amplitude);
  friend ClosedForm constant_form(double c);
  friend ClosedForm polynomial_form(int n, RadialPolynomial p);

 private:
  ClosedForm() = default;

  Kind kind_ = Kind::constant;
  int n_ = 0;
  int m_ = 0;

  // power
  Rational beta_;
  Rational product_constant_;
  double amplitude_ = 0;
  std::optional<Rational> amplitude_exact_;

  // bubble
  double lambda_ = 0;
  Rational decay_s_;

  // constant / exp_gaussian amplitude, polynomial payload
  double scalar_ = 0;
  RadialPolynomial poly_;
};

/// u(r) = C r^beta with beta = 2m/(1-alpha) and C = K^{-1/(1-alpha)}, where
/// K = prod_{j=0}^{m-1} (beta-2j)(beta-2j+n-2); an exact entire solution of
/// Delta^m u = u^alpha for alpha in [0, 1).
ClosedForm power_family(int n, int m, const Exponent& alpha);

/// u(r) = (2 lambda / (1 + lambda^2 r^2))^{(n-2m)/2}, centered at the origin.
/// Requires n > 2m and lambda > 0. Solves (-Delta)^m u = c u^{(n+2m)/(n-2m)}
/// for a positive constant c independent of r and lambda; see eigen_ratio.
ClosedForm bubble_family(int n, int m, double lambda);

/// u(r) = amplitude * e^{r^2/2}; Delta^k u = amplitude * P_k(r) e^{r^2/2}.
ClosedForm exp_gaussian_form(int n, double amplitude);

ClosedForm constant_form(double c);

ClosedForm polynomial_form(int n, RadialPolynomial p);

/// sign * u^alpha under the classical-solution conventions: 0^0 = 1;
/// negative bases only for integer alpha; u = 0 with alpha < 0 is a domain
/// error.
double signed_power(double u, const Exponent& alpha, RhsSign sign);

struct ResidualReport {
  double max_rel = 0;   ///< max over grid of |Delta^m u - sign u^alpha| / max(1, |u^alpha|)
  double max_abs = 0;
  double worst_r = 0;
  std::size_t points = 0;
  double stencil_error = 0;  ///< differentiation error estimate; 0 on exact paths
};

/// Residual of Delta^m u = sign u^alpha for a closed form on a grid of radii.
/// The iterated Laplacian comes from the exact recursion of the form.
ResidualReport residual(const ClosedForm& form, const ProblemSpec& spec,
                        const std::vector<double>& grid);

struct EigenRatioReport {
  double mean = 0;
  double spread = 0;  ///< max |ratio - mean| over the grid
  double min_ratio = 0;
  double max_ratio = 0;
  std::size_t points = 0;
};

/// (-Delta)^m u / u^{(n+2m)/(n-2m)} for the bubble, sampled on a grid.
/// Constant in r and independent of lambda; the constant itself is reported,
/// not asserted, since the display leaves the normalization implicit.
EigenRatioReport eigen_ratio(int n, int m, double lambda, const std::vector<double>& grid);

}  // namespace polyrad
