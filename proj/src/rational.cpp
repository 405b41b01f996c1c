#include "polyrad/rational.hpp"

#include <charconv>
#include <cmath>

namespace polyrad {

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw std::domain_error("rational_pow: 0 to a negative power");
  Rational acc(1);
  Rational b = base;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1UL) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (e < 0) acc = Rational(1) / acc;
  return acc;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::optional<Rational> parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s, BigInt& out) -> bool {
    if (s.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) return false;
    BigInt v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
      v = v * 10 + (s[i] - '0');
    }
    out = neg ? -v : v;
    return true;
  };

  const auto slash = text.find('/');
  BigInt num, den;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
    return Rational(num);
  }
  if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
  if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double ExtendedRational::as_double() const {
  if (is_plus_infinity()) return HUGE_VAL;
  if (is_minus_infinity()) return -HUGE_VAL;
  return to_double(value_);
}

int ExtendedRational::compare(const ExtendedRational& rhs) const {
  auto rank = [](Kind k) { return k == Kind::minus_inf ? -1 : (k == Kind::plus_inf ? 1 : 0); };
  const int ra = rank(kind_), rb = rank(rhs.kind_);
  if (ra != rb) return ra < rb ? -1 : 1;
  if (kind_ != Kind::finite) return 0;
  return value_ < rhs.value_ ? -1 : (value_ == rhs.value_ ? 0 : 1);
}

int ExtendedRational::compare(const Rational& rhs) const {
  if (is_minus_infinity()) return -1;
  if (is_plus_infinity()) return 1;
  return value_ < rhs ? -1 : (value_ == rhs ? 0 : 1);
}

std::string ExtendedRational::str() const {
  if (is_plus_infinity()) return "inf";
  if (is_minus_infinity()) return "-inf";
  return to_string(value_);
}

}  // namespace polyrad
