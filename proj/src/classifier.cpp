#include "polyrad/classifier.hpp"

namespace polyrad {

const char* citation_tag(Citation c) {
  switch (c) {
    case Citation::theorem1_i: return "Theorem1-i";
    case Citation::theorem1_ii: return "Theorem1-ii";
    case Citation::theorem2_i: return "Theorem2-i";
    case Citation::theorem2_ii: return "Theorem2-ii";
    case Citation::prop_a: return "PropA";
    case Citation::prop_b_i: return "PropB-i";
    case Citation::prop_b_ii: return "PropB-ii";
    case Citation::prop_n12: return "Prop-n12";
    case Citation::prop_neg: return "Prop-neg";
    case Citation::prop_sub: return "Prop-sub";
    case Citation::prop_super: return "Prop-super";
    case Citation::prop_compare_minus: return "Prop-CompareMinus";
    case Citation::prop_compare_plus: return "Prop-ComparePlus";
  }
  return "?";
}

namespace {

ExistenceVerdict verdict(bool exists, Citation c, std::string text) {
  return ExistenceVerdict{exists, c, std::move(text)};
}

// Boundary conventions are the tables' own: alpha >= p_s closed,
// alpha < -1/(m-1) open, [-1/(m-1), 0) closed-open, [0, 1] closed.
// When n <= 2m, p_s = infinity and "alpha >= p_s" is false for every
// finite alpha.
ExistenceVerdict exists_positive_minus(const ProblemSpec& spec) {
  const auto& alpha = spec.alpha;
  const auto threshold = singular_threshold(spec.m);
  const auto ps = sobolev_exponent(spec.n, spec.m);

  if (spec.n <= 2)
    return verdict(false, Citation::prop_n12,
                   "n <= 2: Delta^m u <= 0 forces Delta^m u == 0; no positive solution for any alpha");
  if (alpha.compare(threshold) < 0)
    return verdict(true, Citation::prop_a, "n >= 3 and alpha < -1/(m-1): singular existence regime");
  if (alpha.compare(0) < 0)
    return verdict(false, Citation::prop_neg, "n >= 3 and -1/(m-1) <= alpha < 0: no positive solution");
  if (alpha.compare(1) <= 0)
    return verdict(false, Citation::prop_sub, "0 <= alpha <= 1: no non-trivial non-negative solution");
  // alpha > 1
  if (spec.m % 2 == 1 && alpha.compare(ps) >= 0)
    return verdict(true, Citation::theorem1_i, "m odd and alpha >= p_s(m): positive solutions exist");
  if (spec.m % 2 == 0)
    return verdict(false, Citation::prop_super,
                   "m even and alpha > 1: (-Delta)^m u = -u^alpha has no non-trivial non-negative solution");
  return verdict(false, Citation::prop_b_i, "m odd and 1 < alpha < p_s(m): subcritical non-existence");
}

ExistenceVerdict exists_positive_plus(const ProblemSpec& spec) {
  const auto& alpha = spec.alpha;
  const auto ps = sobolev_exponent(spec.n, spec.m);

  if (alpha.compare(1) <= 0)
    return verdict(true, Citation::theorem2_i, "alpha <= 1: positive radial solutions exist for every n, m");
  if (spec.m % 2 == 0 && alpha.compare(ps) >= 0)
    return verdict(true, Citation::theorem2_i, "m even and alpha >= p_s(m): positive solutions exist");
  if (spec.m % 2 == 1)
    return verdict(false, Citation::prop_super,
                   "m odd and alpha > 1: (-Delta)^m u = -u^alpha has no non-trivial non-negative solution");
  return verdict(false, Citation::prop_b_i, "m even and 1 < alpha < p_s(m): subcritical non-existence");
}

}  // namespace

ExistenceVerdict exists_positive(const ProblemSpec& spec) {
  spec.validate();
  return spec.sign == RhsSign::minus ? exists_positive_minus(spec) : exists_positive_plus(spec);
}

ExistenceVerdict exists_nonneg_nontrivial(const ProblemSpec& spec) {
  spec.validate();
  if (spec.alpha.compare(0) < 0)
    throw std::invalid_argument(
        "exists_nonneg_nontrivial: alpha must be >= 0 (classical non-negative solutions are positive below)");

  const auto& alpha = spec.alpha;
  const auto ps = sobolev_exponent(spec.n, spec.m);

  if (spec.sign == RhsSign::minus) {
    if (spec.m % 2 == 1 && alpha.compare(ps) >= 0)
      return verdict(true, Citation::theorem1_ii, "m odd and alpha >= p_s(m): non-negative solutions exist");
    if (alpha.compare(1) <= 0)
      return verdict(false, Citation::prop_sub, "0 <= alpha <= 1: no non-trivial non-negative solution");
    if (spec.m % 2 == 0)
      return verdict(false, Citation::prop_super,
                     "m even and alpha > 1: (-Delta)^m u = -u^alpha has no non-trivial non-negative solution");
    return verdict(false, Citation::prop_b_i, "m odd and 1 < alpha < p_s(m): subcritical non-existence");
  }

  if (alpha.compare(1) <= 0)
    return verdict(true, Citation::theorem2_ii, "0 <= alpha <= 1: non-negative solutions exist");
  if (spec.m % 2 == 0 && alpha.compare(ps) >= 0)
    return verdict(true, Citation::theorem2_ii, "m even and alpha >= p_s(m): non-negative solutions exist");
  if (spec.m % 2 == 1)
    return verdict(false, Citation::prop_super,
                   "m odd and alpha > 1: (-Delta)^m u = -u^alpha has no non-trivial non-negative solution");
  return verdict(false, Citation::prop_b_i, "m even and 1 < alpha < p_s(m): subcritical non-existence");
}

bool nonneg_positivity_gap(const ProblemSpec& spec) {
  spec.validate();
  if (spec.alpha.compare(0) < 0)
    throw std::invalid_argument("nonneg_positivity_gap: alpha must be >= 0");
  if (spec.sign == RhsSign::minus) return false;
  const bool sublinear = spec.alpha.compare(1) <= 0;
  const bool excluded = spec.m == 1 && spec.alpha.compare(1) == 0;
  return sublinear && !excluded;
}

Citation positivity_gap_citation(const ProblemSpec& spec) {
  return spec.sign == RhsSign::minus ? Citation::prop_compare_minus : Citation::prop_compare_plus;
}

}  // namespace polyrad
