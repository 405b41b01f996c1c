#include "polyrad/closed_forms.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace polyrad;

TEST_CASE("power family constants") {
  // n=3, m=1, alpha=0: u = r^2/6, Delta u = 1
  auto f = power_family(3, 1, Exponent(0));
  CHECK(f.power_beta() == Rational(2));
  REQUIRE(f.power_amplitude_exact().has_value());
  CHECK(*f.power_amplitude_exact() == Rational(1, 6));
  CHECK(f.laplacian(1, 2.5) == doctest::Approx(1.0));

  // n=3, m=2, alpha=1/2: beta=8, K=3024, C=3024^-2
  f = power_family(3, 2, Exponent(Rational(1, 2)));
  CHECK(f.power_beta() == Rational(8));
  CHECK(f.power_product_constant() == Rational(3024));
  REQUIRE(f.power_amplitude_exact().has_value());
  CHECK(*f.power_amplitude_exact() == Rational(1) / Rational(3024 * 3024));

  // n=1, m=1, alpha=0: u = r^2/2, u'' = 1
  f = power_family(1, 1, Exponent(0));
  CHECK(f.power_beta() == Rational(2));
  CHECK(*f.power_amplitude_exact() == Rational(1, 2));

  CHECK_THROWS_AS(power_family(3, 1, Exponent(1)), std::invalid_argument);
  CHECK_THROWS_AS(power_family(3, 1, Exponent(-0.5)), std::invalid_argument);
}

TEST_CASE("power family solves its equation exactly") {
  for (auto [n, m, a] : {std::tuple<int, int, Rational>{3, 1, Rational(0)},
                         {3, 2, Rational(1, 2)},
                         {4, 3, Rational(1, 3)},
                         {6, 2, Rational(3, 4)}}) {
    const Exponent alpha(a);
    const auto f = power_family(n, m, alpha);

    // Exponent bookkeeping closes exactly in rational arithmetic:
    // beta - 2m = alpha beta and C K = C^alpha as powers of K.
    const Rational beta = f.power_beta();
    CHECK(beta - 2 * m == a * beta);
    const Rational e = Rational(1) / (Rational(1) - a);
    CHECK(Rational(1) - e == -a * e);

    const ProblemSpec spec{n, m, alpha, RhsSign::plus};
    const auto rep = residual(f, spec, geometric_grid(0.1, 10, 200));
    CHECK(rep.max_rel < 1e-12);
    CHECK(rep.stencil_error == 0);
  }
}

TEST_CASE("bubble family values and preconditions") {
  auto f = bubble_family(3, 1, 1.0);
  CHECK(f.value(0.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(f.value(1.0) == doctest::Approx(1.0));
  CHECK(f.bubble_decay_exponent() == Rational(1, 2));

  f = bubble_family(5, 2, 1.0);
  CHECK(f.bubble_decay_exponent() == Rational(1, 2));
  CHECK(f.value(1.0) == doctest::Approx(1.0));
  CHECK(f.value(3.0) == doctest::Approx(std::pow(2.0 / 10.0, 0.5)));

  CHECK_THROWS_AS(bubble_family(4, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bubble_family(5, 2, 0.0), std::invalid_argument);
}

TEST_CASE("bubble laplacian matches a finite-difference rebuild") {
  for (auto [n, m] : {std::pair<int, int>{3, 1}, {5, 2}}) {
    const auto f = bubble_family(n, m, 1.3);
    for (double r : {0.4, 1.1, 2.7}) {
      const double fd = oracle::fd_radial_laplacian([&](double s) { return f.value(s); }, n, r);
      CHECK(f.laplacian(1, r) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("eigen ratio for second order: n(n-2)/4, lambda-free") {
  const auto grid = geometric_grid(0.1, 10, 100);
  for (int n : {3, 4, 5}) {
    for (double lambda : {0.5, 1.0, 2.0}) {
      const auto rep = eigen_ratio(n, 1, lambda, grid);
      CHECK(rep.spread < 1e-8);
      CHECK(rep.mean == doctest::Approx(n * (n - 2) / 4.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("eigen ratio is constant and lambda-invariant for every n > 2m") {
  const auto grid = geometric_grid(0.1, 10, 100);
  for (int m = 1; m <= 3; ++m)
    for (int n = 2 * m + 1; n <= 9; ++n) {
      double first_mean = 0;
      for (double lambda : {0.5, 1.0, 2.0}) {
        const auto rep = eigen_ratio(n, m, lambda, grid);
        CHECK(rep.spread < 1e-6);
        CHECK(rep.mean > 0);
        if (lambda == 0.5)
          first_mean = rep.mean;
        else
          CHECK(rep.mean == doctest::Approx(first_mean).epsilon(1e-9));
      }
    }
}

TEST_CASE("residual conventions") {
  // u == 0 with alpha = 2: both sides vanish.
  {
    const ProblemSpec spec{3, 1, Exponent(2), RhsSign::plus};
    const auto rep = residual(constant_form(0.0), spec, linear_grid(0.0, 5.0, 20));
    CHECK(rep.max_rel == 0);
  }
  // u = 1 + r^2/(2n) solves Delta u = 1 = u^0 exactly.
  for (int n : {1, 3, 7}) {
    RadialPolynomial p = RadialPolynomial::from_even_coeffs({Rational(1), Rational(1, 2 * n)});
    const ProblemSpec spec{n, 1, Exponent(0), RhsSign::plus};
    const auto rep = residual(polynomial_form(n, p), spec, linear_grid(0.0, 10.0, 50));
    CHECK(rep.max_rel < 1e-12);
  }
  // u == 0 with alpha = 0 is NOT a solution (0^0 = 1): residual is 1.
  {
    const ProblemSpec spec{3, 1, Exponent(0), RhsSign::plus};
    const auto rep = residual(constant_form(0.0), spec, linear_grid(0.0, 5.0, 20));
    CHECK(rep.max_rel == doctest::Approx(1.0));
  }
  // Dimension mismatch is rejected.
  {
    const ProblemSpec spec{5, 1, Exponent(0), RhsSign::plus};
    CHECK_THROWS_AS(residual(power_family(3, 1, Exponent(0)), spec, linear_grid(0.1, 1.0, 5)),
                    std::invalid_argument);
  }
  // A grid touching r = 0 is rejected when the requested derivative order is
  // singular there: u = C r^{8/3} has Delta^2 u ~ r^{-4/3}.
  {
    const auto f = power_family(3, 1, Exponent(Rational(1, 4)));
    const ProblemSpec spec{3, 2, Exponent(Rational(1, 4)), RhsSign::plus};
    CHECK_THROWS_AS(residual(f, spec, linear_grid(0.0, 1.0, 5)), std::domain_error);
    CHECK_NOTHROW(residual(f, spec, linear_grid(0.1, 1.0, 5)));
  }
}

TEST_CASE("exp gaussian form carries the P_k chain") {
  const auto f = exp_gaussian_form(3, 2.0);
  for (double r : {0.0, 0.8, 1.9}) {
    const double e = 2.0 * std::exp(r * r / 2);
    CHECK(f.value(r) == doctest::Approx(e));
    CHECK(f.laplacian(1, r) == doctest::Approx((r * r + 3) * e));
    const double p2 = ((r * r + 10) * r * r + 15) * e;  // P_2 for n=3
    CHECK(f.laplacian(2, r) == doctest::Approx(p2));
  }
}

TEST_CASE("signed power conventions") {
  CHECK(signed_power(0.0, Exponent(0), RhsSign::plus) == 1.0);
  CHECK(signed_power(0.0, Exponent(2), RhsSign::plus) == 0.0);
  CHECK(signed_power(2.0, Exponent(Rational(1, 2)), RhsSign::minus) ==
        doctest::Approx(-std::sqrt(2.0)));
  CHECK(signed_power(-2.0, Exponent(3), RhsSign::plus) == doctest::Approx(-8.0));
  CHECK_THROWS_AS(signed_power(-1.0, Exponent(0.5), RhsSign::plus), std::domain_error);
  CHECK_THROWS_AS(signed_power(0.0, Exponent(-1), RhsSign::plus), std::domain_error);
}

TEST_CASE("grid helpers") {
  const auto lin = linear_grid(0.0, 1.0, 5);
  CHECK(lin.size() == 5);
  CHECK(lin.front() == 0.0);
  CHECK(lin.back() == 1.0);
  const auto geo = geometric_grid(0.1, 10.0, 3);
  CHECK(geo[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(geometric_grid(0.0, 1.0, 5), std::invalid_argument);
}
