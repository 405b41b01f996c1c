#include "polyrad/shooting.hpp"

#include "polyrad/dopri5.hpp"
#include "polyrad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace polyrad {

const char* outcome_kind_name(ShootOutcome::Kind k) {
  switch (k) {
    case ShootOutcome::Kind::survived: return "Survived";
    case ShootOutcome::Kind::zero_touch: return "ZeroTouch";
    case ShootOutcome::Kind::blow_up: return "BlowUp";
    case ShootOutcome::Kind::step_underflow: return "StepUnderflow";
  }
  return "?";
}

std::string ShootOutcome::str() const {
  std::ostringstream os;
  os.precision(12);
  os << outcome_kind_name(kind) << "(" << r_event << ")";
  return os.str();
}

double sphere_surface_measure(int n) {
  if (n < 1) throw std::invalid_argument("sphere_surface_measure: n must be >= 1");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

namespace {

// u^alpha with finite surrogates outside the classical domain, so stage
// evaluations that overshoot an event stay arithmetic. Events stop the run
// before a surrogate can contaminate an accepted state.
double rhs_power(double u, double alpha, bool integer_alpha, int sgn) {
  if (u > 0) return sgn * std::pow(u, alpha);
  if (alpha == 0) return sgn * 1.0;  // 0^0 = 1 convention, and u^0 = 1 for u < 0
  if (u < 0 && integer_alpha) return sgn * std::pow(u, alpha);
  if (alpha > 0) return 0.0;
  return sgn * 1e30;
}

// Positivity floor for singular powers: u^alpha blows up as u -> 0+, so the
// touch is declared at a small positive band. When the singularity is too
// strong to integrate down to the band, the step-underflow handler below
// classifies the stall as the same event.
double zero_band_for(double alpha, double a0) {
  if (alpha >= 0) return 0.0;
  return 1e-6 * std::max(1.0, std::abs(a0));
}

struct NodeSnapshot {
  double r;
  std::vector<double> state;  // (v_0, v_0', v_1, v_1', ...)
};

// Exact series start on [0, r0]: v_i(r) = sum_p w_{i+p} r^{2p}/pc(p, n) with
// w_j the initial iterated Laplacians and w_m = sign a_0^alpha from the
// equation; the truncation error is O(r0^4) at worst (top level).
std::vector<double> series_state(const ProblemSpec& spec, const std::vector<double>& init,
                                 double r, double rhs0) {
  const int m = spec.m;
  std::vector<double> w(init.begin(), init.end());
  w.push_back(rhs0);

  std::vector<double> y(2 * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    double val = w[static_cast<std::size_t>(i)];
    double slope = 0;
    double rpow = 1;  // r^{2p-1} tracked incrementally below
    for (int p = 1; i + p <= m; ++p) {
      const double pc = to_double(pizzetti_coeff(p, spec.n));
      rpow *= (p == 1) ? r : r * r;
      // rpow = r^{2p-1}
      val += w[static_cast<std::size_t>(i + p)] * rpow * r / pc;
      slope += w[static_cast<std::size_t>(i + p)] * 2.0 * p * rpow / pc;
    }
    y[2 * static_cast<std::size_t>(i)] = val;
    y[2 * static_cast<std::size_t>(i) + 1] = slope;
  }
  return y;
}

}  // namespace

ShootResult solve_ivp(const ProblemSpec& spec, const std::vector<double>& init,
                      const SolveOptions& opts) {
  spec.validate();
  const int m = spec.m;
  const int n = spec.n;
  if (init.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("solve_ivp: init must supply a_0..a_{m-1}");
  for (double a : init)
    if (!std::isfinite(a)) throw std::invalid_argument("solve_ivp: non-finite initial value");
  if (!(opts.tol > 0)) throw std::invalid_argument("solve_ivp: tol must be > 0");
  if (!(opts.r_max > 2 * opts.origin_radius))
    throw std::invalid_argument("solve_ivp: r_max too small");

  const double alpha = spec.alpha.value();
  const bool integer_alpha = spec.alpha.is_integer();
  const int sgn = sign_value(spec.sign);
  const bool needs_positive_base = alpha < 0 || !integer_alpha;
  if (alpha < 0 && !(init[0] > 0))
    throw std::invalid_argument("solve_ivp: a_0 must be > 0 for negative powers");
  if (!integer_alpha && init[0] < 0)
    throw std::invalid_argument("solve_ivp: a_0 must be >= 0 for real powers");

  const double band = zero_band_for(alpha, init[0]);
  const bool watch_zero = needs_positive_base || opts.stop_at_zero;

  const auto dim = static_cast<std::size_t>(2 * m);
  OdeRhs rhs = [n, m, alpha, integer_alpha, sgn](double r, const double* y, double* dy) {
    const double cr = (n - 1) / r;
    for (int i = 0; i < m; ++i) {
      const auto vi = static_cast<std::size_t>(2 * i);
      const double source =
          (i < m - 1) ? y[vi + 2] : rhs_power(y[0], alpha, integer_alpha, sgn);
      dy[vi] = y[vi + 1];
      dy[vi + 1] = source - cr * y[vi + 1];
    }
  };

  Dopri5Options iopts;
  iopts.rtol = opts.tol;
  iopts.atol = opts.tol;
  iopts.h_initial = opts.origin_radius / 2;
  iopts.underflow_factor = opts.underflow_factor;
  Dopri5 stepper(2 * m, rhs, iopts);

  const double rhs0 = rhs_power(init[0], alpha, integer_alpha, sgn);
  const double r0 = opts.origin_radius;
  std::vector<double> y0 = series_state(spec, init, r0, rhs0);
  stepper.start(r0, y0);

  std::vector<NodeSnapshot> nodes;
  nodes.reserve(1024);
  {
    NodeSnapshot origin{0.0, std::vector<double>(dim, 0.0)};
    for (int i = 0; i < m; ++i) origin.state[2 * static_cast<std::size_t>(i)] = init[static_cast<std::size_t>(i)];
    nodes.push_back(std::move(origin));
    nodes.push_back(NodeSnapshot{r0, y0});
  }

  auto emit = [&](double r, const std::vector<double>& state) {
    if (!nodes.empty() && !(r > nodes.back().r * (1 + 1e-15)))
      nodes.back() = NodeSnapshot{r, state};
    else if (nodes.size() < opts.max_nodes)
      nodes.push_back(NodeSnapshot{r, state});
    else
      nodes.back() = NodeSnapshot{r, state};
  };
  auto emit_dense = [&](double r) {
    std::vector<double> state(dim);
    for (std::size_t c = 0; c < dim; ++c) state[c] = stepper.dense(static_cast<int>(c), r);
    emit(r, state);
  };

  // Bisection for g(r) = 0 on the dense output of the last step, g(ra) > 0
  // >= g(rb); resolves the crossing to ~1% of the integrator tolerance.
  // keep_positive_side returns the last radius with g > 0, so zero touches
  // report a node with u still (barely) non-negative.
  auto bisect = [&](double ra, double rb, const std::function<double(double)>& g,
                    bool keep_positive_side) {
    const double width_target = std::max(1e-15 * std::max(1.0, rb), 0.01 * opts.tol);
    for (int it = 0; it < 200 && rb - ra > width_target; ++it) {
      const double mid = 0.5 * (ra + rb);
      if (g(mid) > 0)
        ra = mid;
      else
        rb = mid;
    }
    return keep_positive_side ? ra : 0.5 * (ra + rb);
  };

  double next_geo = r0 * opts.grid_growth;
  ShootOutcome outcome;
  outcome.kind = ShootOutcome::Kind::survived;
  outcome.r_event = opts.r_max;

  // Data already at or below the floor and not climbing: the touch is at the
  // start, and the crossing scan below (which needs u > band on the left)
  // would never see it.
  const bool touched_at_start = watch_zero && y0[0] <= band && y0[1] <= 0;
  if (touched_at_start) {
    outcome.kind = ShootOutcome::Kind::zero_touch;
    outcome.r_event = r0;
  }

  const double r_end = opts.r_max;
  while (!touched_at_start) {
    if (stepper.r() >= r_end * (1 - 1e-14)) break;

    const auto status = stepper.advance(r_end);
    if (status == Dopri5::Status::step_underflow) {
      const double u = stepper.y()[0];
      const double du = stepper.y()[1];
      if (u * du > 0)
        outcome.kind = ShootOutcome::Kind::blow_up;
      else if (watch_zero && u > 0 && u < 1e-3 * std::max(1.0, std::abs(init[0])) && du < 0)
        outcome.kind = ShootOutcome::Kind::zero_touch;  // stalled on the singular tail of u^alpha
      else
        outcome.kind = ShootOutcome::Kind::step_underflow;
      outcome.r_event = stepper.r();
      emit(stepper.r(), stepper.y());
      break;
    }

    const double ra = stepper.prev_r();
    const double rb = stepper.r();
    const double ua = stepper.y_prev()[0];
    const double ub = stepper.y()[0];

    double r_event = std::numeric_limits<double>::infinity();
    ShootOutcome::Kind event_kind = ShootOutcome::Kind::survived;

    if (std::abs(ub) >= opts.blow_up_threshold && std::abs(ua) < opts.blow_up_threshold) {
      const double bu = opts.blow_up_threshold;
      r_event = bisect(ra, rb, [&](double r) { return bu - std::abs(stepper.dense(0, r)); }, false);
      event_kind = ShootOutcome::Kind::blow_up;
    } else if (watch_zero && ua > band) {
      // Scan the dense output for the first crossing of the positivity
      // floor; a plain endpoint test could miss a dip inside a long step.
      constexpr int scan = 8;
      double prev_r = ra, prev_g = ua - band;
      for (int k = 1; k <= scan; ++k) {
        const double r = ra + (rb - ra) * k / scan;
        const double g = (k == scan ? ub : stepper.dense(0, r)) - band;
        if (prev_g > 0 && g <= 0) {
          r_event = bisect(prev_r, r, [&](double rr) { return stepper.dense(0, rr) - band; }, true);
          event_kind = ShootOutcome::Kind::zero_touch;
          break;
        }
        prev_r = r;
        prev_g = g;
      }
    }

    const bool fillers_ok = nodes.size() + 16 < opts.max_nodes;
    const double r_stop = std::min(rb, r_event);
    while (fillers_ok && next_geo < r_stop * (1 - 1e-12)) {
      if (next_geo > ra) emit_dense(next_geo);
      next_geo *= opts.grid_growth;
    }

    if (event_kind != ShootOutcome::Kind::survived) {
      emit_dense(r_event);
      outcome.kind = event_kind;
      outcome.r_event = r_event;
      break;
    }
    emit(rb, stepper.y());
  }

  RadialProfile profile;
  profile.spec = spec;
  profile.meta.tol = opts.tol;
  profile.meta.rhs_evals = stepper.rhs_evaluations();
  profile.meta.accepted = stepper.accepted_steps();
  profile.meta.rejected = stepper.rejected_steps();
  profile.meta.zero_band = band;
  profile.meta.outcome = outcome;

  profile.grid.resize(nodes.size());
  profile.values.assign(static_cast<std::size_t>(m), std::vector<double>(nodes.size()));
  profile.slopes.assign(static_cast<std::size_t>(m), std::vector<double>(nodes.size()));
  bool left_positivity = false;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    profile.grid[j] = nodes[j].r;
    for (int i = 0; i < m; ++i) {
      profile.values[static_cast<std::size_t>(i)][j] = nodes[j].state[2 * static_cast<std::size_t>(i)];
      profile.slopes[static_cast<std::size_t>(i)][j] = nodes[j].state[2 * static_cast<std::size_t>(i) + 1];
    }
    left_positivity = left_positivity || nodes[j].state[0] < 0;
  }
  profile.meta.left_positivity = left_positivity;

  return ShootResult{std::move(profile), outcome};
}

namespace {

std::size_t locate_interval(const std::vector<double>& grid, double r) {
  if (grid.size() < 2) throw std::out_of_range("profile: too few nodes");
  if (r < grid.front() - 1e-12 || r > grid.back() * (1 + 1e-12) + 1e-300)
    throw std::out_of_range("profile: radius outside sampled range");
  const auto it = std::upper_bound(grid.begin(), grid.end(), r);
  std::size_t j = static_cast<std::size_t>(it - grid.begin());
  if (j == 0) return 0;
  if (j >= grid.size()) return grid.size() - 2;
  return j - 1;
}

}  // namespace

double RadialProfile::eval(int level, double r) const {
  const auto& v = values.at(static_cast<std::size_t>(level));
  const auto& s = slopes.at(static_cast<std::size_t>(level));
  const std::size_t j = locate_interval(grid, r);
  const double h = grid[j + 1] - grid[j];
  const double t = (r - grid[j]) / h;
  const double t1 = 1 - t;
  return v[j] * t1 * t1 * (1 + 2 * t) + s[j] * h * t * t1 * t1 + v[j + 1] * t * t * (3 - 2 * t) -
         s[j + 1] * h * t * t * t1;
}

double RadialProfile::eval_slope(int level, double r) const {
  const auto& v = values.at(static_cast<std::size_t>(level));
  const auto& s = slopes.at(static_cast<std::size_t>(level));
  const std::size_t j = locate_interval(grid, r);
  const double h = grid[j + 1] - grid[j];
  const double t = (r - grid[j]) / h;
  const double dv = (v[j + 1] - v[j]) / h;
  return 6 * t * (1 - t) * dv + (1 - 4 * t + 3 * t * t) * s[j] + t * (3 * t - 2) * s[j + 1];
}

RadialProfile profile_from_closed_form(const ClosedForm& form, const ProblemSpec& spec,
                                       const std::vector<double>& grid) {
  spec.validate();
  if (grid.size() < 2 || grid.front() != 0)
    throw std::invalid_argument("profile_from_closed_form: grid must start at 0 with >= 2 nodes");
  if (form.dimension() != 0 && form.dimension() != spec.n)
    throw std::invalid_argument("profile_from_closed_form: dimension mismatch");

  const int m = spec.m;
  RadialProfile p;
  p.spec = spec;
  p.grid = grid;
  p.values.assign(static_cast<std::size_t>(m), std::vector<double>(grid.size()));
  p.slopes.assign(static_cast<std::size_t>(m), std::vector<double>(grid.size()));
  p.meta.outcome.kind = ShootOutcome::Kind::survived;
  p.meta.outcome.r_event = grid.back();

  // Slopes by a centered difference of the exact level values; the levels
  // themselves are exact, so slope error is O(h^2) and only affects
  // interpolation between nodes.
  const double eps = 1e-6;
  for (int i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double r = grid[j];
      p.values[static_cast<std::size_t>(i)][j] = form.laplacian(i, r);
      if (r == 0) {
        p.slopes[static_cast<std::size_t>(i)][j] = 0;
      } else {
        const double h = eps * std::max(r, 1.0);
        const double lo = std::max(r - h, 0.0);
        p.slopes[static_cast<std::size_t>(i)][j] =
            (form.laplacian(i, r + h) - form.laplacian(i, lo)) / (r + h - lo);
      }
    }
  }
  return p;
}

SearchResult shoot_search(const ProblemSpec& spec, std::vector<double> init, int vary_index,
                          double lo, double hi, double resolution, const SolveOptions& opts) {
  if (vary_index < 0 || vary_index >= spec.m)
    throw std::invalid_argument("shoot_search: vary_index out of range");
  if (!(hi > lo)) throw std::invalid_argument("shoot_search: degenerate bracket");
  if (!(resolution > 0)) throw std::invalid_argument("shoot_search: resolution must be > 0");

  auto run_at = [&](double a) {
    init[static_cast<std::size_t>(vary_index)] = a;
    return solve_ivp(spec, init, opts);
  };

  SearchResult res;
  res.lo = lo;
  res.hi = hi;
  res.run_lo = run_at(lo);
  res.run_hi = run_at(hi);
  if (res.run_lo.outcome.kind == res.run_hi.outcome.kind)
    throw std::invalid_argument("shoot_search: identical outcome kinds at bracket endpoints");

  while (res.hi - res.lo > resolution && res.iterations < 200) {
    const double mid = 0.5 * (res.lo + res.hi);
    auto run = run_at(mid);
    if (run.outcome.kind == res.run_lo.outcome.kind) {
      res.lo = mid;
      res.run_lo = std::move(run);
    } else {
      res.hi = mid;
      res.run_hi = std::move(run);
    }
    ++res.iterations;
  }
  return res;
}

CompareReport compare_check(const RadialProfile& super, const RadialProfile& sub,
                            double tolerance) {
  if (super.spec.n != sub.spec.n || super.spec.m != sub.spec.m)
    throw std::invalid_argument("compare_check: incompatible grids (n or m differ)");
  if (super.grid.size() < 2 || sub.grid.size() < 2)
    throw std::invalid_argument("compare_check: profiles too short");

  const double r_hi = std::min(super.r_last(), sub.r_last());
  std::vector<double> shared;
  shared.reserve(super.grid.size() + sub.grid.size());
  for (double r : super.grid)
    if (r <= r_hi) shared.push_back(r);
  for (double r : sub.grid)
    if (r <= r_hi) shared.push_back(r);
  std::sort(shared.begin(), shared.end());
  shared.erase(std::unique(shared.begin(), shared.end()), shared.end());

  CompareReport rep;
  rep.tolerance = tolerance;
  rep.min_margin = std::numeric_limits<double>::infinity();
  for (double r : shared) {
    const double margin = super.eval(0, r) - sub.eval(0, r);
    if (margin < rep.min_margin) {
      rep.min_margin = margin;
      rep.argmin_r = r;
    }
  }
  rep.ok = rep.min_margin >= -tolerance;
  return rep;
}

SignCascadeReport sign_cascade_check(const RadialProfile& p) {
  const int m = p.spec.m;
  SignCascadeReport rep;
  rep.level_min.assign(static_cast<std::size_t>(m), std::numeric_limits<double>::infinity());

  // Positivity span: the longest prefix of nodes with u > 0.
  std::size_t span = 0;
  while (span < p.nodes() && p.values[0][span] > 0) ++span;
  const bool all_positive = span == p.nodes();
  const bool all_but_event = span + 1 == p.nodes();

  rep.hypothesis = p.spec.sign == RhsSign::minus && span > 0 && (all_positive || all_but_event);
  rep.survived_positive =
      p.meta.outcome.kind == ShootOutcome::Kind::survived && all_positive;

  for (std::size_t j = 0; j < span; ++j)
    for (int i = 0; i < m; ++i)
      rep.level_min[static_cast<std::size_t>(i)] =
          std::min(rep.level_min[static_cast<std::size_t>(i)], p.values[static_cast<std::size_t>(i)][j]);

  rep.top_level_min = rep.level_min[static_cast<std::size_t>(m - 1)];
  rep.cascade_holds = span > 0 && rep.top_level_min > 0;
  return rep;
}

PizzettiReport pizzetti_check(const RadialProfile& p, double tolerance) {
  PizzettiReport rep;
  double min_u = std::numeric_limits<double>::infinity();
  for (double u : p.values[0]) min_u = std::min(min_u, u);
  // Event truncation can leave the final node a hair below zero; that does
  // not void the u >= 0 hypothesis.
  rep.applicable = p.spec.sign == RhsSign::minus && min_u >= -1e-8 * std::max(1.0, std::abs(p.values[0][0]));
  if (!rep.applicable) return rep;

  std::vector<double> derivs(static_cast<std::size_t>(p.spec.m));
  for (int i = 0; i < p.spec.m; ++i) derivs[static_cast<std::size_t>(i)] = p.values[static_cast<std::size_t>(i)][0];
  const PizzettiMajorant phi = pizzetti_majorant(derivs, p.spec.n);

  rep.min_slack_rel = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < p.nodes(); ++j) {
    const double f = phi.eval(p.grid[j]);
    const double slack = (f - p.values[0][j]) / std::max(1.0, std::abs(f));
    if (slack < rep.min_slack_rel) {
      rep.min_slack_rel = slack;
      rep.argmin_r = p.grid[j];
    }
  }
  rep.ok = rep.min_slack_rel >= -tolerance;
  return rep;
}

std::vector<GrowthPoint> growth_series(const RadialProfile& p) {
  if (p.nodes() < 4) throw std::invalid_argument("growth_series: profile too short");
  const int n = p.spec.n;
  const double surface = sphere_surface_measure(n);
  static const GaussRule rule = gauss_legendre(6);

  auto integrand = [&](double r) { return p.eval(0, r) * std::pow(r, n - 1); };

  // Prefix integrals over the profile intervals, then partial tail to R.
  std::vector<double> prefix(p.nodes(), 0.0);
  for (std::size_t j = 0; j + 1 < p.nodes(); ++j)
    prefix[j + 1] = prefix[j] + integrate(rule, integrand, p.grid[j], p.grid[j + 1]);

  auto integral_to = [&](double R) {
    const std::size_t j = locate_interval(p.grid, R);
    return prefix[j] + integrate(rule, integrand, p.grid[j], R);
  };

  const double r_last = p.r_last();
  const double r_min = std::max(r_last / 1024.0, p.grid[1] * 8);
  std::vector<double> radii;
  for (double R = r_last; R >= r_min && radii.size() < 24; R /= 2) radii.push_back(R);
  std::reverse(radii.begin(), radii.end());

  std::vector<GrowthPoint> out;
  out.reserve(radii.size());
  for (double R : radii) {
    GrowthPoint g;
    g.radius = R;
    g.integral = surface * integral_to(R);
    g.normalized = g.integral / std::pow(R, n);
    out.push_back(g);
  }
  return out;
}

namespace {

struct LaplacianAtNode {
  double value;
  double stencil;
};

LaplacianAtNode discrete_laplacian(const RadialProfile& p, int level, std::size_t j) {
  const auto& s = p.slopes[static_cast<std::size_t>(level)];
  const double h1 = p.grid[j] - p.grid[j - 1];
  const double h2 = p.grid[j + 1] - p.grid[j];
  const double d1 = (s[j] - s[j - 1]) / h1;
  const double d2 = (s[j + 1] - s[j]) / h2;
  const double second = (h2 * d1 + h1 * d2) / (h1 + h2);
  const double lap = second + (p.spec.n - 1) / p.grid[j] * s[j];
  return {lap, std::abs(d2 - d1)};
}

}  // namespace

ConsistencyReport discrete_consistency(const RadialProfile& p) {
  const int m = p.spec.m;
  ConsistencyReport rep;
  rep.max_dev.assign(static_cast<std::size_t>(m), 0.0);
  rep.max_rel_dev.assign(static_cast<std::size_t>(m), 0.0);
  if (p.nodes() < 3) return rep;

  for (std::size_t j = 1; j + 1 < p.nodes(); ++j) {
    if (!(p.grid[j] > 0)) continue;
    for (int i = 0; i < m; ++i) {
      const auto [lap, stencil] = discrete_laplacian(p, i, j);
      const double target =
          (i < m - 1) ? p.values[static_cast<std::size_t>(i) + 1][j]
                      : rhs_power(p.values[0][j], p.spec.alpha.value(), p.spec.alpha.is_integer(),
                                  sign_value(p.spec.sign));
      const double dev = std::abs(lap - target);
      rep.max_dev[static_cast<std::size_t>(i)] = std::max(rep.max_dev[static_cast<std::size_t>(i)], dev);
      rep.max_rel_dev[static_cast<std::size_t>(i)] =
          std::max(rep.max_rel_dev[static_cast<std::size_t>(i)], dev / std::max(1.0, std::abs(target)));
      rep.stencil_error = std::max(rep.stencil_error, stencil);
    }
  }
  return rep;
}

ResidualReport residual(const RadialProfile& p) {
  ResidualReport rep;
  if (p.nodes() < 3) return rep;
  const int top = p.spec.m - 1;
  for (std::size_t j = 1; j + 1 < p.nodes(); ++j) {
    if (!(p.grid[j] > 0)) continue;
    const auto [lap, stencil] = discrete_laplacian(p, top, j);
    const double rhs = rhs_power(p.values[0][j], p.spec.alpha.value(), p.spec.alpha.is_integer(),
                                 sign_value(p.spec.sign));
    const double dev = std::abs(lap - rhs);
    const double rel = dev / std::max(1.0, std::abs(rhs));
    if (rel > rep.max_rel) {
      rep.max_rel = rel;
      rep.worst_r = p.grid[j];
    }
    rep.max_abs = std::max(rep.max_abs, dev);
    rep.stencil_error = std::max(rep.stencil_error, stencil);
    ++rep.points;
  }
  return rep;
}

}  // namespace polyrad
