#pragma once

#include <functional>
#include <vector>

namespace polyrad {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int points);

/// Integral of f over [a, b] with a single application of the rule.
double integrate(const GaussRule& rule, const std::function<double(double)>& f, double a, double b);

}  // namespace polyrad
