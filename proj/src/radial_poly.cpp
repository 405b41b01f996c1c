#include "polyrad/radial_poly.hpp"

#include <sstream>

namespace polyrad {

RadialPolynomial RadialPolynomial::from_even_coeffs(std::vector<Rational> coeffs) {
  RadialPolynomial p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

RadialPolynomial RadialPolynomial::monomial(int j, Rational c) {
  if (j < 0) throw std::invalid_argument("RadialPolynomial::monomial: j must be >= 0");
  RadialPolynomial p;
  p.coeffs_.assign(static_cast<std::size_t>(j) + 1, Rational(0));
  p.coeffs_.back() = std::move(c);
  p.trim();
  return p;
}

const Rational& RadialPolynomial::coeff(int j) const {
  static const Rational zero(0);
  if (j < 0 || static_cast<std::size_t>(j) >= coeffs_.size()) return zero;
  return coeffs_[static_cast<std::size_t>(j)];
}

Rational RadialPolynomial::eval(const Rational& r) const {
  const Rational r2 = r * r;
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r2 + *it;
  return acc;
}

double RadialPolynomial::eval(double r) const {
  const double r2 = r * r;
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r2 + to_double(*it);
  return acc;
}

double RadialPolynomial::eval_derivative(double r) const {
  // d/dr sum c_j r^{2j} = sum 2j c_j r^{2j-1}
  const double r2 = r * r;
  double acc = 0;
  for (std::size_t j = coeffs_.size(); j-- > 1;) acc = acc * r2 + 2.0 * static_cast<double>(j) * to_double(coeffs_[j]);
  return acc * r;
}

Rational RadialPolynomial::second_derivative_at_zero() const {
  return coeffs_.size() > 1 ? Rational(2) * coeffs_[1] : Rational(0);
}

RadialPolynomial& RadialPolynomial::operator+=(const RadialPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  trim();
  return *this;
}

RadialPolynomial operator*(const Rational& c, RadialPolynomial p) {
  for (auto& q : p.coeffs_) q *= c;
  p.trim();
  return p;
}

RadialPolynomial RadialPolynomial::shifted_up() const {
  if (coeffs_.empty()) return {};
  RadialPolynomial p;
  p.coeffs_.assign(coeffs_.size() + 1, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) p.coeffs_[j + 1] = coeffs_[j];
  return p;
}

void RadialPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string RadialPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    os << to_string(coeffs_[j]);
    if (j > 0) os << "*r^" << 2 * j;
    first = false;
  }
  return os.str();
}

RadialPolynomial radial_laplacian_poly(const RadialPolynomial& p, int n) {
  if (n < 1) throw std::invalid_argument("radial_laplacian_poly: n must be >= 1");
  std::vector<Rational> out;
  if (p.even_terms() <= 1) return {};
  out.assign(p.even_terms() - 1, Rational(0));
  for (std::size_t j = 1; j < p.even_terms(); ++j) {
    const long jj = static_cast<long>(j);
    out[j - 1] = Rational(2 * jj * (2 * jj + n - 2)) * p.coeff(static_cast<int>(j));
  }
  return RadialPolynomial::from_even_coeffs(std::move(out));
}

RadialPolynomial supersolution_poly(int k, int n) {
  if (k < 0) throw std::invalid_argument("supersolution_poly: k must be >= 0");
  if (n < 1) throw std::invalid_argument("supersolution_poly: n must be >= 1");
  RadialPolynomial p(Rational(1));
  for (int i = 0; i < k; ++i) {
    // P_{i+1} = (r^2 + n) P_i + 2r P_i' + Delta P_i.
    // In even coefficients: 2r d/dr maps c_j r^{2j} to 4j c_j r^{2j}.
    RadialPolynomial next = p.shifted_up() + Rational(n) * p;
    std::vector<Rational> scaled(p.even_terms(), Rational(0));
    for (std::size_t j = 1; j < p.even_terms(); ++j)
      scaled[j] = Rational(4 * static_cast<long>(j)) * p.coeff(static_cast<int>(j));
    next += RadialPolynomial::from_even_coeffs(std::move(scaled));
    next += radial_laplacian_poly(p, n);
    p = std::move(next);
  }
  return p;
}

Rational pizzetti_coeff(int p, int n) {
  if (p < 1 || n < 1) throw std::invalid_argument("pizzetti_coeff: p, n must be >= 1");
  Rational acc(1);
  for (long k = 1; k <= p; ++k) acc *= Rational(2 * k * (n + 2 * k - 2));
  return acc;
}

PizzettiMajorant pizzetti_majorant(const std::vector<double>& derivs, int n) {
  if (derivs.empty()) throw std::invalid_argument("pizzetti_majorant: derivs must be non-empty");
  if (n < 1) throw std::invalid_argument("pizzetti_majorant: n must be >= 1");
  PizzettiMajorant out;
  out.n = n;
  out.m = static_cast<int>(derivs.size());
  out.derivs = derivs;
  std::vector<Rational> coeffs(derivs.size());
  coeffs[0] = Rational(derivs[0]);
  for (std::size_t i = 1; i < derivs.size(); ++i)
    coeffs[i] = Rational(derivs[i]) / pizzetti_coeff(static_cast<int>(i), n);
  out.poly = RadialPolynomial::from_even_coeffs(std::move(coeffs));
  return out;
}

}  // namespace polyrad
