#pragma once

#include "polyrad/rational.hpp"

#include <optional>
#include <string>

namespace polyrad {

/// Right-hand-side sign of Delta^m u = sign * u^alpha.
enum class RhsSign : int { plus = +1, minus = -1 };

inline int sign_value(RhsSign s) { return static_cast<int>(s); }

/// The exponent alpha, carried in two forms: a double for numerics and an
/// optional exact rational for threshold comparisons. When the rational is
/// present, every comparison against a critical value is exact; otherwise
/// the comparison is a strict floating comparison (tolerance zero), so
/// boundary cases must be supplied exactly.
class Exponent {
 public:
  Exponent() : value_(0), exact_(Rational(0)) {}
  explicit Exponent(double v) : value_(v) {}
  Exponent(Rational q) : value_(to_double(q)), exact_(std::move(q)) {}
  Exponent(int v) : Exponent(Rational(v)) {}

  /// Parses "p/q" or an integer exactly; anything else as a double.
  static Exponent parse(const std::string& text);

  double value() const { return value_; }
  bool is_exact() const { return exact_.has_value(); }
  const std::optional<Rational>& exact() const { return exact_; }

  bool is_integer() const;

  /// Three-way comparison against an exact threshold: -1, 0, +1.
  int compare(const ExtendedRational& rhs) const;
  int compare(const Rational& rhs) const;
  int compare(long rhs) const { return compare(Rational(rhs)); }

  std::string str() const;

 private:
  double value_;
  std::optional<Rational> exact_;
};

/// The problem triple (n, m, alpha) plus the right-hand-side sign:
/// Delta^m u = sign * u^alpha in R^n. Convention 0^0 = 1 when alpha = 0.
struct ProblemSpec {
  int n = 3;                       ///< dimension, n >= 1
  int m = 1;                       ///< operator half-order, Delta^m, m >= 1
  Exponent alpha;                  ///< nonlinearity exponent
  RhsSign sign = RhsSign::minus;   ///< +1 or -1

  /// Throws std::invalid_argument when n < 1 or m < 1.
  void validate() const;
};

/// Sobolev exponent: (n+2m)/(n-2m) when n >= 2m+1, +infinity when n <= 2m.
ExtendedRational sobolev_exponent(int n, int m);

/// Singular threshold -1/(m-1); -infinity for m = 1.
ExtendedRational singular_threshold(int m);

/// Whether the integral over (0, inf) of t(1+t^{2m-2})^alpha dt is finite.
/// False for m = 1 (the integrand grows linearly); for m >= 2 finite exactly
/// when alpha < -1/(m-1).
bool kns_converges(int m, const Exponent& alpha);

}  // namespace polyrad
