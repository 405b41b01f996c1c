#include "polyrad/certificates.hpp"

#include <doctest.h>

using namespace polyrad;

TEST_CASE("moser schedule worked examples") {
  // n=3, m=1, alpha=1/2: 1/q_1 = 1/2 - 2/3 = -1/6, so j* = 0; E(q) = 7 - 2q.
  auto s = moser_schedule(3, 1, Exponent(Rational(1, 2)));
  CHECK(s.j_star == 0);
  REQUIRE(s.inv_q.size() == 2);
  CHECK(s.inv_q[0] == Rational(1));
  CHECK(s.inv_q[1] == Rational(-1, 6));
  CHECK(s.closing_coefficient == Rational(2));
  CHECK(s.closing_exponent(3) == Rational(1));
  CHECK(s.closing_exponent(4) == Rational(-1));
  CHECK(s.q_min == 4);
  CHECK_FALSE(s.indeterminate);

  // n=3, m=2, alpha=1/2: E(q) = 11 - 3q.
  s = moser_schedule(3, 2, Exponent(Rational(1, 2)));
  CHECK(s.j_star == 0);
  CHECK(s.closing_coefficient == Rational(3));
  CHECK(s.closing_exponent(3) == Rational(2));
  CHECK(s.q_min == 4);

  // n=3, m=1, alpha=9/10: 1/q_1 = 7/30 > 0 > 1/q_2, so j* = 1.
  s = moser_schedule(3, 1, Exponent(Rational(9, 10)));
  CHECK(s.j_star == 1);
  CHECK(s.inv_q[1] == Rational(7, 30));
  CHECK(s.inv_q[2] < 0);
  CHECK(s.inv_q[2] == Rational(9, 10) * Rational(7, 30) - Rational(2, 3));

  CHECK_THROWS_AS(moser_schedule(3, 1, Exponent(0)), std::invalid_argument);
  CHECK_THROWS_AS(moser_schedule(3, 1, Exponent(1)), std::invalid_argument);
  CHECK_THROWS_AS(moser_schedule(3, 1, Exponent(Rational(3, 2))), std::invalid_argument);
}

TEST_CASE("closed form of 1/q_h equals the recursion on the rational mesh") {
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int den = 2; den <= 10; ++den)
        for (int num = 1; num < den; ++num) {
          const Rational a(num, den);
          const auto s = moser_schedule(n, m, Exponent(a));

          CHECK(s.j_star >= 0);
          CHECK(s.inv_q.size() == static_cast<std::size_t>(s.j_star) + 2);
          CHECK(s.inv_q[static_cast<std::size_t>(s.j_star)] > 0);
          CHECK(s.inv_q[static_cast<std::size_t>(s.j_star) + 1] <= 0);

          for (std::size_t h = 0; h < s.inv_q.size(); ++h) {
            const Rational ah = rational_pow(a, static_cast<long>(h));
            const Rational closed =
                ah - Rational(2 * m) * (Rational(1) - ah) / (Rational(n) * (Rational(1) - a));
            CHECK(s.inv_q[h] == closed);
            if (h > 0) CHECK(s.inv_q[h] < s.inv_q[h - 1]);
          }

          CHECK(s.q_min >= 2);
          CHECK(s.closing_exponent(s.q_min) < 0);
          CHECK((s.q_min == 2 || s.closing_exponent(s.q_min - 1) >= 0));
          // E is affine and strictly decreasing in q.
          CHECK(s.closing_exponent(5) - s.closing_exponent(4) == -s.closing_coefficient);
          CHECK(s.closing_coefficient > 0);
        }
}

TEST_CASE("floating alpha near a boundary flags indeterminate") {
  // Exact rational input never flags.
  CHECK_FALSE(moser_schedule(4, 1, Exponent(Rational(1, 2))).indeterminate);
  // alpha chosen so 1/q_1 = alpha - 2m/n lands within 1e-12 of zero.
  const double a = 0.5 + 1e-13;
  const auto s = moser_schedule(4, 1, Exponent(a));
  CHECK(s.indeterminate);
}

TEST_CASE("sublinear absorption identity") {
  auto c = sublinear_absorption_check(3, 1, Exponent(Rational(1, 2)), 1);
  CHECK(c.holds);
  CHECK_FALSE(c.equality_at_h0);
  CHECK(c.lhs > 0);

  c = sublinear_absorption_check(5, 2, Exponent(Rational(1, 3)), 0);
  CHECK(c.holds);
  CHECK(c.equality_at_h0);
  CHECK(c.lhs == 0);

  c = sublinear_absorption_check(7, 3, Exponent(Rational(3, 4)), 2);
  CHECK(c.holds);
  CHECK(c.lhs > 0);

  CHECK_THROWS_AS(sublinear_absorption_check(3, 1, Exponent(Rational(1, 2)), -1), std::out_of_range);
}

TEST_CASE("decay certificates") {
  auto c = decay_certificate(3, 1, Exponent(3));
  CHECK(c.cutoff_power == Rational(3));
  CHECK(c.decay_exponent == Rational(2));
  CHECK(c.liouville_applicable);

  c = decay_certificate(5, 2, Exponent(2));
  CHECK(c.cutoff_power == Rational(8));
  CHECK(c.decay_exponent == Rational(1));
  CHECK(c.liouville_applicable);

  CHECK_THROWS_AS(decay_certificate(3, 1, Exponent(1)), std::invalid_argument);

  // p > 2m and decay exponent < n across the superlinear mesh.
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int den = 1; den <= 5; ++den)
        for (int num = den + 1; num <= 8 * den; ++num) {
          const auto cert = decay_certificate(n, m, Exponent(Rational(num, den)));
          CHECK(cert.cutoff_power > 2 * m);
          CHECK(cert.decay_exponent < n);
          CHECK(cert.liouville_applicable);
        }
}
