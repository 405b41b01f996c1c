#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyrad {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// base^e with an integer exponent, exact. Throws on 0^negative.
Rational rational_pow(const Rational& base, long e);

double to_double(const Rational& q);

/// "p/q" or "p" (decimal strings are rejected; those stay floating).
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// A rational extended with +/-infinity, totally ordered.
///
/// Houses quantities like the Sobolev exponent, which is infinite for
/// n <= 2m, and the singular threshold -1/(m-1), which is -infinity for
/// m = 1. Infinities are explicit states, never sentinel floats.
class ExtendedRational {
 public:
  ExtendedRational() : kind_(Kind::finite), value_(0) {}
  ExtendedRational(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}

  static ExtendedRational plus_infinity() { return ExtendedRational(Kind::plus_inf); }
  static ExtendedRational minus_infinity() { return ExtendedRational(Kind::minus_inf); }

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_plus_infinity() const { return kind_ == Kind::plus_inf; }
  bool is_minus_infinity() const { return kind_ == Kind::minus_inf; }

  /// Finite value; throws if infinite.
  const Rational& value() const {
    if (!is_finite()) throw std::logic_error("ExtendedRational: value() on infinity");
    return value_;
  }

  /// +/-HUGE_VAL for the infinite states.
  double as_double() const;

  /// Three-way comparison: -1, 0, +1.
  int compare(const ExtendedRational& rhs) const;
  int compare(const Rational& rhs) const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    return a.compare(b) == 0;
  }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    return a.compare(b) < 0;
  }
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
    return a.compare(b) <= 0;
  }
  friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) {
    return a.compare(b) > 0;
  }
  friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) {
    return a.compare(b) >= 0;
  }

  std::string str() const;

 private:
  enum class Kind { minus_inf, finite, plus_inf };
  explicit ExtendedRational(Kind k) : kind_(k), value_(0) {}

  Kind kind_;
  Rational value_;
};

}  // namespace polyrad
