#pragma once

#include "polyrad/rational.hpp"

#include <vector>

namespace polyrad {

/// Even polynomial in the radial variable, sum of c_j r^{2j} with exact
/// rational coefficients. Only even powers appear: these are the radial
/// polynomials smooth at the origin.
class RadialPolynomial {
 public:
  RadialPolynomial() = default;
  explicit RadialPolynomial(Rational constant) : coeffs_{std::move(constant)} { trim(); }

  /// coeffs[j] is the coefficient of r^{2j}.
  static RadialPolynomial from_even_coeffs(std::vector<Rational> coeffs);

  /// r^{2j}
  static RadialPolynomial monomial(int j, Rational c = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree in r (always even); -1 for the zero polynomial.
  int degree() const { return coeffs_.empty() ? -1 : 2 * static_cast<int>(coeffs_.size() - 1); }

  /// Coefficient of r^{2j}.
  const Rational& coeff(int j) const;
  std::size_t even_terms() const { return coeffs_.size(); }

  Rational eval(const Rational& r) const;
  double eval(double r) const;

  /// d/dr, evaluated at r (the derivative itself is odd, so it is exposed
  /// only pointwise).
  double eval_derivative(double r) const;

  /// Second derivative at 0, i.e. 2 * coeff of r^2.
  Rational second_derivative_at_zero() const;

  RadialPolynomial& operator+=(const RadialPolynomial& rhs);
  friend RadialPolynomial operator+(RadialPolynomial a, const RadialPolynomial& b) {
    a += b;
    return a;
  }
  friend RadialPolynomial operator*(const Rational& c, RadialPolynomial p);

  /// Multiplication by r^2.
  RadialPolynomial shifted_up() const;

  friend bool operator==(const RadialPolynomial& a, const RadialPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact n-dimensional Laplacian restricted to radial polynomials:
/// Delta r^{2j} = 2j(2j+n-2) r^{2j-2}.
RadialPolynomial radial_laplacian_poly(const RadialPolynomial& p, int n);

/// P_k from the recursion P_{k+1} = (r^2+n) P_k + 2r P_k' + Delta P_k with
/// P_0 = 1, so that Delta^k e^{r^2/2} = P_k(r) e^{r^2/2}. Coefficients are
/// non-negative integers and deg P_k = 2k.
RadialPolynomial supersolution_poly(int k, int n);

/// prod_{k=1..p} 2k(n+2k-2), exact. Equals 2^{2p} p! Gamma(p+n/2)/Gamma(n/2).
Rational pizzetti_coeff(int p, int n);

/// Majorant polynomial for functions with Delta^m u <= 0: the spherical
/// average obeys ubar(r) <= Phi(r) with
/// Phi(r) = u(0) + sum_{i=1}^{m-1} Delta^i u(0) r^{2i} / pizzetti_coeff(i, n).
struct PizzettiMajorant {
  int n = 1;
  int m = 1;
  std::vector<double> derivs;  ///< (u(0), Delta u(0), ..., Delta^{m-1} u(0))
  RadialPolynomial poly;       ///< Phi

  double eval(double r) const { return poly.eval(r); }
};

/// Builds the majorant from the iterated-Laplacian values at the origin;
/// derivs must have length m >= 1. Doubles convert to rationals exactly.
PizzettiMajorant pizzetti_majorant(const std::vector<double>& derivs, int n);

}  // namespace polyrad
