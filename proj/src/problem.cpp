#include "polyrad/problem.hpp"

#include <cmath>
#include <sstream>

namespace polyrad {

Exponent Exponent::parse(const std::string& text) {
  if (auto q = parse_rational(text)) return Exponent(*q);
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("Exponent::parse: cannot parse '" + text + "'");
  }
  if (pos != text.size())
    throw std::invalid_argument("Exponent::parse: trailing characters in '" + text + "'");
  return Exponent(v);
}

bool Exponent::is_integer() const {
  if (exact_) return denominator(*exact_) == 1;
  return std::isfinite(value_) && value_ == std::trunc(value_);
}

int Exponent::compare(const ExtendedRational& rhs) const {
  if (rhs.is_plus_infinity()) return -1;
  if (rhs.is_minus_infinity()) return 1;
  return compare(rhs.value());
}

int Exponent::compare(const Rational& rhs) const {
  if (exact_) return *exact_ < rhs ? -1 : (*exact_ == rhs ? 0 : 1);
  const double r = to_double(rhs);
  return value_ < r ? -1 : (value_ == r ? 0 : 1);
}

std::string Exponent::str() const {
  if (exact_) return to_string(*exact_);
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

void ProblemSpec::validate() const {
  if (n < 1) throw std::invalid_argument("ProblemSpec: n must be >= 1");
  if (m < 1) throw std::invalid_argument("ProblemSpec: m must be >= 1");
}

ExtendedRational sobolev_exponent(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("sobolev_exponent: n, m must be >= 1");
  if (n <= 2 * m) return ExtendedRational::plus_infinity();
  return ExtendedRational(Rational(n + 2 * m, n - 2 * m));
}

ExtendedRational singular_threshold(int m) {
  if (m < 1) throw std::invalid_argument("singular_threshold: m must be >= 1");
  if (m == 1) return ExtendedRational::minus_infinity();
  return ExtendedRational(Rational(-1, m - 1));
}

bool kns_converges(int m, const Exponent& alpha) {
  if (m < 1) throw std::invalid_argument("kns_converges: m must be >= 1");
  if (m == 1) return false;
  return alpha.compare(singular_threshold(m)) < 0;
}

}  // namespace polyrad
