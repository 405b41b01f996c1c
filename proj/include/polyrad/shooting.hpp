#pragma once

#include "polyrad/closed_forms.hpp"
#include "polyrad/problem.hpp"
#include "polyrad/radial_poly.hpp"

#include <string>
#include <vector>

namespace polyrad {

/// Terminal event of a radial shot.
struct ShootOutcome {
  enum class Kind {
    survived,        ///< reached r_max with no event
    zero_touch,      ///< u reached 0 (or the positivity band when u^alpha is singular there)
    blow_up,         ///< |u| crossed the blow-up threshold, or the step underflowed while |u| grew
    step_underflow,  ///< step size underflowed without growth of |u|
  };
  Kind kind = Kind::survived;
  double r_event = 0;  ///< r_max for survived, event radius otherwise

  std::string str() const;
};

const char* outcome_kind_name(ShootOutcome::Kind k);

struct IntegratorStats {
  double tol = 0;
  std::size_t rhs_evals = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  double zero_band = 0;         ///< positivity floor used for singular powers (0 when unused)
  bool left_positivity = false; ///< some emitted node has u < 0
  ShootOutcome outcome;
};

/// Sampled radial run: levels v_i = Delta^i u for i < m, with radial slopes,
/// on a strictly increasing grid starting at 0. Nodes are the accepted step
/// endpoints plus geometric refinement; immutable after creation.
struct RadialProfile {
  ProblemSpec spec;
  std::vector<double> grid;
  std::vector<std::vector<double>> values;  ///< values[i][j] = v_i(r_j)
  std::vector<std::vector<double>> slopes;  ///< slopes[i][j] = v_i'(r_j)
  IntegratorStats meta;

  std::size_t nodes() const { return grid.size(); }
  double r_last() const { return grid.empty() ? 0.0 : grid.back(); }

  /// C1 piecewise-cubic (Hermite) evaluation of level i at radius r.
  double eval(int level, double r) const;
  double eval_slope(int level, double r) const;
};

struct SolveOptions {
  double r_max = 30;
  double tol = 1e-9;              ///< rtol = atol = tol
  double blow_up_threshold = 1e8;
  double underflow_factor = 1e-13;
  double origin_radius = 1e-4;    ///< series start hand-off radius
  double grid_growth = 1.05;      ///< geometric output refinement ratio
  std::size_t max_nodes = 20000;
  bool stop_at_zero = true;       ///< integer alpha may continue past 0 when false
};

struct ShootResult {
  RadialProfile profile;
  ShootOutcome outcome;
};

/// Integrates the radial system equivalent to Delta^m u = sign u^alpha:
/// v_i'' + ((n-1)/r) v_i' = v_{i+1} for i < m-1 and
/// v_{m-1}'' + ((n-1)/r) v_{m-1}' = sign u^alpha, from initial iterated
/// Laplacians init = (a_0, ..., a_{m-1}), slopes zero. The origin
/// singularity is crossed by an exact series step on [0, origin_radius].
/// Stops at the first event or at r_max.
ShootResult solve_ivp(const ProblemSpec& spec, const std::vector<double>& init,
                      const SolveOptions& opts = {});

/// Samples a closed form as a profile (levels are the exact iterated
/// Laplacians of the form), for comparisons against shot profiles.
RadialProfile profile_from_closed_form(const ClosedForm& form, const ProblemSpec& spec,
                                       const std::vector<double>& grid);

/// Bisection on one initial value between two outcome kinds.
struct SearchResult {
  double lo = 0, hi = 0;  ///< final bracket, width <= resolution
  ShootResult run_lo, run_hi;
  int iterations = 0;
};

/// Bisects init[vary_index] on [lo, hi] until the bracket is narrower than
/// resolution, classifying midpoints by outcome kind against the lo endpoint.
/// Throws std::invalid_argument when the endpoint outcomes share a kind or
/// the bracket is degenerate.
SearchResult shoot_search(const ProblemSpec& spec, std::vector<double> init, int vary_index,
                          double lo, double hi, double resolution, const SolveOptions& opts = {});

/// Discrete comparison-principle check: super.u >= sub.u - tolerance on the
/// union of both grids over the shared radius range. Requires matching n, m.
struct CompareReport {
  bool ok = false;
  double min_margin = 0;  ///< min of super.u - sub.u
  double argmin_r = 0;
  double tolerance = 0;
};
CompareReport compare_check(const RadialProfile& super, const RadialProfile& sub,
                            double tolerance = 1e-7);

/// Sign-cascade report: when a run keeps u > 0 with Delta^m u < 0 (minus
/// sign), entire solutions must have Delta^{m-1} u > 0. Finite runs witness
/// this only while they behave like entire solutions, so the report carries
/// the per-level minima and flags whether the run survived positive.
struct SignCascadeReport {
  bool hypothesis = false;         ///< sign = -1 and u > 0 at every node
  bool survived_positive = false;  ///< outcome survived with u > 0 throughout
  std::vector<double> level_min;   ///< min over nodes of v_i, i = 0..m-1
  double top_level_min = 0;        ///< min of v_{m-1}
  bool cascade_holds = false;      ///< top_level_min > 0
};
SignCascadeReport sign_cascade_check(const RadialProfile& p);

/// Pizzetti majorant check: along a run with Delta^m u <= 0 and u >= 0, the
/// profile must satisfy u(r) <= Phi(r) built from the origin data. This is a
/// ball-local consequence of the comparison principle, so it applies to
/// truncated runs as well.
struct PizzettiReport {
  bool applicable = false;
  double min_slack_rel = 0;  ///< min over nodes of (Phi - u)/max(1, |Phi|)
  double argmin_r = 0;
  bool ok = false;           ///< min_slack_rel >= -tolerance
};
PizzettiReport pizzetti_check(const RadialProfile& p, double tolerance = 1e-9);

/// F(R) = |S^{n-1}| integral_0^R u r^{n-1} dr at dyadic radii, normalized by
/// R^n; the growth sequence feeding the Liouville hypothesis inspection.
struct GrowthPoint {
  double radius = 0;
  double integral = 0;    ///< F(R)
  double normalized = 0;  ///< F(R)/R^n
};
std::vector<GrowthPoint> growth_series(const RadialProfile& p);

/// Residual of the top-level equation on the profile's own nodes, with the
/// iterated Laplacian reconstructed by finite differences of the stored
/// slopes; stencil_error reports the observed one-sided spread.
ResidualReport residual(const RadialProfile& p);

/// Per-level deviation of the discrete Laplacian chain: finite-difference
/// Delta v_i against v_{i+1} (and sign u^alpha at the top), max over
/// interior nodes.
struct ConsistencyReport {
  std::vector<double> max_dev;
  std::vector<double> max_rel_dev;
  double stencil_error = 0;
};
ConsistencyReport discrete_consistency(const RadialProfile& p);

/// Surface measure of the unit sphere in R^n.
double sphere_surface_measure(int n);

}  // namespace polyrad
