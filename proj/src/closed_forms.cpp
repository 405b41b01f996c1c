#include "polyrad/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polyrad {

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (count < 2 || !(hi > lo)) throw std::invalid_argument("linear_grid: need hi > lo, count >= 2");
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return g;
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
  if (count < 2 || !(hi > lo) || !(lo > 0))
    throw std::invalid_argument("geometric_grid: need hi > lo > 0, count >= 2");
  std::vector<double> g(static_cast<std::size_t>(count));
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < count; ++i)
    g[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i / (count - 1));
  return g;
}

namespace {

// Dense polynomial in one variable with rational coefficients; scratch type
// for the bubble derivative chain.
struct Poly1 {
  std::vector<Rational> c;  // c[k] t^k

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  double eval(double t) const {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + to_double(*it);
    return acc;
  }
};

Poly1 derivative(const Poly1& p) {
  Poly1 d;
  if (p.c.size() <= 1) return d;
  d.c.resize(p.c.size() - 1);
  for (std::size_t k = 1; k < p.c.size(); ++k) d.c[k - 1] = Rational(static_cast<long>(k)) * p.c[k];
  return d;
}

Poly1 mul_one_plus_t(const Poly1& p) {
  Poly1 q;
  q.c.assign(p.c.size() + 1, Rational(0));
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    q.c[k] += p.c[k];
    q.c[k + 1] += p.c[k];
  }
  q.trim();
  return q;
}

Poly1 mul_t(const Poly1& p) {
  Poly1 q;
  q.c.assign(p.c.size() + 1, Rational(0));
  for (std::size_t k = 0; k < p.c.size(); ++k) q.c[k + 1] = p.c[k];
  return q;
}

Poly1 scale(const Rational& s, Poly1 p) {
  for (auto& v : p.c) v *= s;
  p.trim();
  return p;
}

Poly1 add(Poly1 a, const Poly1& b) {
  if (b.c.size() > a.c.size()) a.c.resize(b.c.size(), Rational(0));
  for (std::size_t k = 0; k < b.c.size(); ++k) a.c[k] += b.c[k];
  a.trim();
  return a;
}

// d/dt of P(t)(1+t)^{-Q} re-expressed over (1+t)^{-Q-1}.
Poly1 shift_derivative(const Poly1& p, const Rational& q) {
  return add(mul_one_plus_t(derivative(p)), scale(-q, p));
}

// Polynomial part of Delta^i applied to (1+t)^{-s}, where t = lambda^2 r^2
// and the radial Laplacian acts as lambda^2 (4t d^2/dt^2 + 2n d/dt):
// Delta^i u = lambda^{2i} (2 lambda)^s P_i(t) (1+t)^{-(s+2i)}.
Poly1 bubble_poly(int n, const Rational& s, int order) {
  Poly1 p;
  p.c = {Rational(1)};
  Rational q = s;
  for (int i = 0; i < order; ++i) {
    Poly1 p1 = shift_derivative(p, q);
    Poly1 p2 = shift_derivative(p1, q + 1);
    p = add(mul_t(scale(Rational(4), p2)), scale(Rational(2 * n), mul_one_plus_t(p1)));
    q += 2;
  }
  return p;
}

}  // namespace

double ClosedForm::laplacian(int order, double r) const {
  if (order < 0) throw std::invalid_argument("ClosedForm::laplacian: order must be >= 0");
  switch (kind_) {
    case Kind::constant:
      return order == 0 ? scalar_ : 0.0;
    case Kind::polynomial: {
      RadialPolynomial p = poly_;
      for (int i = 0; i < order; ++i) p = radial_laplacian_poly(p, n_);
      return p.eval(r);
    }
    case Kind::exp_gaussian: {
      const RadialPolynomial p = supersolution_poly(order, n_);
      return scalar_ * p.eval(r) * std::exp(r * r / 2.0);
    }
    case Kind::power: {
      // Delta^i (C r^beta) = C prod_{j<i} (beta-2j)(beta-2j+n-2) r^{beta-2i}
      Rational coef(1);
      for (int j = 0; j < order; ++j)
        coef *= (beta_ - 2 * j) * (beta_ - 2 * j + n_ - 2);
      const double c = amplitude_ * to_double(coef);
      if (c == 0.0) return 0.0;
      const double e = to_double(beta_) - 2.0 * order;
      if (r == 0.0) return e > 0 ? 0.0 : (e == 0 ? c : std::numeric_limits<double>::infinity());
      return c * std::pow(r, e);
    }
    case Kind::bubble: {
      const Poly1 p = bubble_poly(n_, decay_s_, order);
      const double t = lambda_ * lambda_ * r * r;
      const double q = to_double(decay_s_) + 2.0 * order;
      return std::pow(2.0 * lambda_, to_double(decay_s_)) *
             std::pow(lambda_, 2.0 * order) * p.eval(t) * std::pow(1.0 + t, -q);
    }
  }
  return 0;
}

const Rational& ClosedForm::power_beta() const {
  if (kind_ != Kind::power) throw std::logic_error("power_beta: not a power form");
  return beta_;
}

const Rational& ClosedForm::power_product_constant() const {
  if (kind_ != Kind::power) throw std::logic_error("power_product_constant: not a power form");
  return product_constant_;
}

double ClosedForm::power_amplitude() const {
  if (kind_ != Kind::power) throw std::logic_error("power_amplitude: not a power form");
  return amplitude_;
}

const std::optional<Rational>& ClosedForm::power_amplitude_exact() const {
  if (kind_ != Kind::power) throw std::logic_error("power_amplitude_exact: not a power form");
  return amplitude_exact_;
}

double ClosedForm::bubble_lambda() const {
  if (kind_ != Kind::bubble) throw std::logic_error("bubble_lambda: not a bubble form");
  return lambda_;
}

const Rational& ClosedForm::bubble_decay_exponent() const {
  if (kind_ != Kind::bubble) throw std::logic_error("bubble_decay_exponent: not a bubble form");
  return decay_s_;
}

ClosedForm power_family(int n, int m, const Exponent& alpha) {
  if (n < 1 || m < 1) throw std::invalid_argument("power_family: n, m must be >= 1");
  if (alpha.compare(0) < 0 || alpha.compare(1) >= 0)
    throw std::invalid_argument("power_family: alpha must lie in [0, 1)");

  ClosedForm f;
  f.kind_ = ClosedForm::Kind::power;
  f.n_ = n;
  f.m_ = m;

  // With exact alpha the whole calculus stays rational; a floating alpha is
  // converted exactly (every double is rational), so K is still exact.
  const Rational a = alpha.exact() ? *alpha.exact() : Rational(alpha.value());
  f.beta_ = Rational(2 * m) / (Rational(1) - a);
  Rational k(1);
  for (int j = 0; j < m; ++j) k *= (f.beta_ - 2 * j) * (f.beta_ - 2 * j + n - 2);
  f.product_constant_ = k;

  const Rational inv_exp = Rational(1) / (Rational(1) - a);  // C = K^{-inv_exp}
  if (denominator(inv_exp) == 1) {
    f.amplitude_exact_ = rational_pow(k, -numerator(inv_exp).convert_to<long>());
    f.amplitude_ = to_double(*f.amplitude_exact_);
  } else {
    f.amplitude_ = std::pow(to_double(k), -to_double(inv_exp));
  }
  return f;
}

ClosedForm bubble_family(int n, int m, double lambda) {
  if (m < 1) throw std::invalid_argument("bubble_family: m must be >= 1");
  if (n <= 2 * m) throw std::invalid_argument("bubble_family: requires n > 2m");
  if (!(lambda > 0)) throw std::invalid_argument("bubble_family: lambda must be > 0");
  ClosedForm f;
  f.kind_ = ClosedForm::Kind::bubble;
  f.n_ = n;
  f.m_ = m;
  f.lambda_ = lambda;
  f.decay_s_ = Rational(n - 2 * m, 2);
  return f;
}

ClosedForm exp_gaussian_form(int n, double amplitude) {
  if (n < 1) throw std::invalid_argument("exp_gaussian_form: n must be >= 1");
  ClosedForm f;
  f.kind_ = ClosedForm::Kind::exp_gaussian;
  f.n_ = n;
  f.scalar_ = amplitude;
  return f;
}

ClosedForm constant_form(double c) {
  ClosedForm f;
  f.kind_ = ClosedForm::Kind::constant;
  f.scalar_ = c;
  return f;
}

ClosedForm polynomial_form(int n, RadialPolynomial p) {
  if (n < 1) throw std::invalid_argument("polynomial_form: n must be >= 1");
  ClosedForm f;
  f.kind_ = ClosedForm::Kind::polynomial;
  f.n_ = n;
  f.poly_ = std::move(p);
  return f;
}

double signed_power(double u, const Exponent& alpha, RhsSign sign) {
  const double a = alpha.value();
  double p;
  if (u == 0.0) {
    if (a == 0.0) p = 1.0;  // 0^0 = 1
    else if (a > 0) p = 0.0;
    else throw std::domain_error("signed_power: 0 to a negative power");
  } else if (u > 0.0) {
    p = std::pow(u, a);
  } else {
    if (!alpha.is_integer())
      throw std::domain_error("signed_power: negative base with non-integer exponent");
    p = std::pow(u, a);
  }
  return sign_value(sign) * p;
}

ResidualReport residual(const ClosedForm& form, const ProblemSpec& spec,
                        const std::vector<double>& grid) {
  spec.validate();
  if (grid.empty()) throw std::invalid_argument("residual: empty grid");
  if (form.dimension() != 0 && form.dimension() != spec.n)
    throw std::invalid_argument("residual: form dimension does not match spec");

  ResidualReport rep;
  for (double r : grid) {
    if (r < 0) throw std::invalid_argument("residual: negative radius");
    const double lhs = form.laplacian(spec.m, r);
    const double u = form.value(r);
    const double rhs = signed_power(u, spec.alpha, spec.sign);
    if (!std::isfinite(lhs) || !std::isfinite(rhs))
      throw std::domain_error("residual: non-finite evaluation on grid (singular derivative at r=0?)");
    const double abs_res = std::abs(lhs - rhs);
    const double rel = abs_res / std::max(1.0, std::abs(rhs));
    if (rel > rep.max_rel) {
      rep.max_rel = rel;
      rep.worst_r = r;
    }
    rep.max_abs = std::max(rep.max_abs, abs_res);
  }
  rep.points = grid.size();
  return rep;
}

EigenRatioReport eigen_ratio(int n, int m, double lambda, const std::vector<double>& grid) {
  const ClosedForm f = bubble_family(n, m, lambda);
  if (grid.empty()) throw std::invalid_argument("eigen_ratio: empty grid");

  const double p = static_cast<double>(n + 2 * m) / (n - 2 * m);
  const double parity = (m % 2 == 0) ? 1.0 : -1.0;

  EigenRatioReport rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  rep.max_ratio = -std::numeric_limits<double>::infinity();
  double sum = 0;
  std::vector<double> ratios;
  ratios.reserve(grid.size());
  for (double r : grid) {
    const double u = f.value(r);
    const double ratio = parity * f.laplacian(m, r) / std::pow(u, p);
    ratios.push_back(ratio);
    sum += ratio;
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
  }
  rep.points = grid.size();
  rep.mean = sum / static_cast<double>(grid.size());
  for (double x : ratios) rep.spread = std::max(rep.spread, std::abs(x - rep.mean));
  return rep;
}

}  // namespace polyrad
