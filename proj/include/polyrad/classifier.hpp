#pragma once

#include "polyrad/problem.hpp"

#include <string>

namespace polyrad {

/// Source tag naming the statement that decides a cell of the existence
/// tables. Each tag maps to exactly one polarity per parameter region.
enum class Citation {
  theorem1_i,        ///< minus sign, positive solutions
  theorem1_ii,       ///< minus sign, non-negative solutions
  theorem2_i,        ///< plus sign, positive solutions
  theorem2_ii,       ///< plus sign, non-negative solutions
  prop_a,            ///< singular existence, n >= 3, alpha < -1/(m-1)
  prop_b_i,          ///< subcritical non-existence, 1 < alpha < p_s
  prop_b_ii,         ///< supercritical existence, alpha >= p_s
  prop_n12,          ///< low-dimension non-existence, n <= 2
  prop_neg,          ///< singular non-existence, alpha in [-1/(m-1), 0)
  prop_sub,          ///< sublinear non-existence, alpha in [0, 1]
  prop_super,        ///< superlinear non-existence for (-Delta)^m u = -u^alpha
  prop_compare_minus,///< positivity of non-negative solutions, minus sign
  prop_compare_plus, ///< positivity gap characterization, plus sign
};

const char* citation_tag(Citation c);

/// Outcome of an existence query, with the rule that fired.
struct ExistenceVerdict {
  bool exists = false;
  Citation citation = Citation::theorem1_i;
  std::string condition_text;  ///< human-readable rule, e.g. "n >= 3 and alpha < -1/(m-1)"
};

/// Does Delta^m u = sign*u^alpha possess an entire positive classical
/// solution? Total over valid specs.
///
/// sign = -1: yes iff (n >= 3 and alpha < -1/(m-1)) or (m odd and
/// alpha >= p_s). sign = +1: yes iff alpha <= 1 or (m even and alpha >= p_s).
ExistenceVerdict exists_positive(const ProblemSpec& spec);

/// Does Delta^m u = sign*u^alpha possess an entire non-trivial non-negative
/// classical solution? Requires alpha >= 0 (below zero, classical solutions
/// are positive and the question collapses to exists_positive).
///
/// sign = -1: yes iff m odd and alpha >= p_s. sign = +1: yes iff
/// 0 <= alpha <= 1 or (m even and alpha >= p_s).
ExistenceVerdict exists_nonneg_nontrivial(const ProblemSpec& spec);

/// Is there an entire non-trivial non-negative solution that is NOT strictly
/// positive? Requires alpha >= 0. For sign = +1 this happens exactly when
/// alpha is in [0, 1] and (alpha, m) != (1, 1); for sign = -1 never.
bool nonneg_positivity_gap(const ProblemSpec& spec);

/// Citation justifying the nonneg_positivity_gap answer for this spec.
Citation positivity_gap_citation(const ProblemSpec& spec);

}  // namespace polyrad
