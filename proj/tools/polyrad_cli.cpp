// polyrad command line: classification, shooting, verification, certificate
// emission, table reproduction, and parameter sweeps for the radial model
// problems Delta^m u = +/- u^alpha in R^n.
//
// Exit codes: 0 ok, 2 usage/invalid parameters, 3 sweep agreement failure,
// 4 numeric failure (step underflow without blow-up).

#include "polyrad/certificates.hpp"
#include "polyrad/classifier.hpp"
#include "polyrad/closed_forms.hpp"
#include "polyrad/profile_io.hpp"
#include "polyrad/shooting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using nlohmann::json;
using namespace polyrad;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_disagreement = 3;
constexpr int exit_numeric = 4;

struct SpecArgs {
  int n = 3;
  int m = 1;
  std::string alpha = "1";
  std::string sign = "-";

  ProblemSpec to_spec() const {
    if (sign != "+" && sign != "-") throw std::invalid_argument("sign must be '+' or '-'");
    ProblemSpec spec{n, m, Exponent::parse(alpha), sign == "+" ? RhsSign::plus : RhsSign::minus};
    spec.validate();
    return spec;
  }
};

void add_spec_options(CLI::App* cmd, SpecArgs& args) {
  cmd->add_option("--n", args.n, "dimension")->required();
  cmd->add_option("--m", args.m, "operator half-order (Delta^m)")->required();
  cmd->add_option("--alpha", args.alpha, "exponent, decimal or exact p/q")->required();
  cmd->add_option("--sign", args.sign, "right-hand-side sign, + or -")->required();
}

json alpha_json(const Exponent& a) {
  json j;
  j["value"] = a.value();
  if (a.is_exact())
    j["exact"] = to_string(*a.exact());
  else
    j["inexact"] = true;
  return j;
}

json spec_json(const ProblemSpec& spec) {
  return json{{"n", spec.n},
              {"m", spec.m},
              {"alpha", alpha_json(spec.alpha)},
              {"sign", spec.sign == RhsSign::plus ? "+" : "-"}};
}

json extended_json(const ExtendedRational& x) {
  json j;
  j["str"] = x.str();
  j["value"] = x.as_double();
  return j;
}

json verdict_json(const ExistenceVerdict& v) {
  return json{{"value", v.exists}, {"citation", citation_tag(v.citation)}, {"condition", v.condition_text}};
}

json outcome_json(const ShootOutcome& o) {
  return json{{"kind", outcome_kind_name(o.kind)}, {"r_event", o.r_event}};
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path);
  os << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- classify

int cmd_classify(const SpecArgs& args) {
  const ProblemSpec spec = args.to_spec();
  json out;
  out["schema"] = "polyrad/classify/v1";
  out["spec"] = spec_json(spec);
  out["thresholds"] = {{"sobolev_exponent", extended_json(sobolev_exponent(spec.n, spec.m))},
                       {"singular_threshold", extended_json(singular_threshold(spec.m))}};
  out["exists_positive"] = verdict_json(exists_positive(spec));
  if (spec.alpha.compare(0) >= 0) {
    out["exists_nonneg"] = verdict_json(exists_nonneg_nontrivial(spec));
    out["positivity_gap"] = {{"value", nonneg_positivity_gap(spec)},
                             {"citation", citation_tag(positivity_gap_citation(spec))}};
  } else {
    out["exists_nonneg"] = nullptr;
    out["positivity_gap"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return exit_ok;
}

// ------------------------------------------------------------------- table

struct TableRegion {
  std::string label;
  Rational representative;
  bool has_nonneg;  // region lies in alpha >= 0
};

std::vector<TableRegion> table_regions(int n, int m) {
  std::vector<TableRegion> regions;
  const auto thr = singular_threshold(m);
  const auto ps = sobolev_exponent(n, m);

  if (m >= 2) {
    const Rational t = thr.value();
    regions.push_back({"alpha < " + to_string(t), t - 1, false});
    regions.push_back({to_string(t) + " <= alpha < 0", t, false});
  } else {
    regions.push_back({"alpha < 0", Rational(-1), false});
  }
  regions.push_back({"0 <= alpha <= 1", Rational(1, 2), true});
  if (ps.is_finite()) {
    const Rational p = ps.value();
    regions.push_back({"1 < alpha < " + to_string(p), (Rational(1) + p) / 2, true});
    regions.push_back({"alpha >= " + to_string(p), p, true});
  } else {
    regions.push_back({"alpha > 1", Rational(2), true});
  }
  return regions;
}

int cmd_table(const SpecArgs& args, const std::string& csv_path) {
  ProblemSpec spec = args.to_spec();
  const auto regions = table_regions(spec.n, spec.m);
  const char* op = spec.sign == RhsSign::plus ? "u^alpha" : "-u^alpha";

  std::cout << "Existence for Delta^" << spec.m << " u = " << op << " in R^" << spec.n << "\n";
  std::cout << "  p_s = " << sobolev_exponent(spec.n, spec.m).str()
            << ", -1/(m-1) = " << singular_threshold(spec.m).str() << "\n\n";
  std::printf("  %-24s %-6s %-18s %-8s %s\n", "region", "u>0", "citation", "u>=0", "citation");

  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw std::runtime_error("cannot open " + csv_path);
    csv << "n,m,sign,region,representative_alpha,query,exists,citation\n";
  }

  for (const auto& region : regions) {
    spec.alpha = Exponent(region.representative);
    const auto pos = exists_positive(spec);
    std::string nn_cell = "-", nn_cite = "(grey: classical solutions are positive)";
    if (region.has_nonneg) {
      const auto nn = exists_nonneg_nontrivial(spec);
      nn_cell = nn.exists ? "YES" : "NO";
      nn_cite = citation_tag(nn.citation);
    }
    std::printf("  %-24s %-6s %-18s %-8s %s\n", region.label.c_str(), pos.exists ? "YES" : "NO",
                citation_tag(pos.citation), nn_cell.c_str(), nn_cite.c_str());
    if (csv.is_open()) {
      const std::string base = std::to_string(spec.n) + "," + std::to_string(spec.m) + "," +
                               args.sign + ",\"" + region.label + "\"," +
                               to_string(region.representative);
      csv << base << ",positive," << (pos.exists ? "YES" : "NO") << "," << citation_tag(pos.citation)
          << "\n";
      if (region.has_nonneg) {
        const auto nn = exists_nonneg_nontrivial(spec);
        csv << base << ",nonneg," << (nn.exists ? "YES" : "NO") << "," << citation_tag(nn.citation)
            << "\n";
      }
    }
  }
  return exit_ok;
}

// ------------------------------------------------------------------- shoot

struct ShootArgs {
  SpecArgs spec;
  std::vector<double> init;
  double r_max = 30;
  double tol = 1e-9;
  std::string profile_path = "profile.csv";
  std::string json_path;
};

int cmd_shoot(const ShootArgs& args) {
  const ProblemSpec spec = args.spec.to_spec();
  if (args.init.size() != static_cast<std::size_t>(spec.m))
    throw std::invalid_argument("--init must supply exactly m values a_0..a_{m-1}");
  SolveOptions opts;
  opts.r_max = args.r_max;
  opts.tol = args.tol;
  const auto res = solve_ivp(spec, args.init, opts);

  if (!args.profile_path.empty()) write_profile_csv(res.profile, args.profile_path);

  json out;
  out["schema"] = "polyrad/shoot/v1";
  out["spec"] = spec_json(spec);
  out["init"] = args.init;
  out["outcome"] = outcome_json(res.outcome);
  out["stats"] = {{"rhs_evals", res.profile.meta.rhs_evals},
                  {"accepted_steps", res.profile.meta.accepted},
                  {"rejected_steps", res.profile.meta.rejected},
                  {"nodes", res.profile.nodes()},
                  {"tol", res.profile.meta.tol},
                  {"zero_band", res.profile.meta.zero_band},
                  {"left_positivity", res.profile.meta.left_positivity}};
  if (!args.profile_path.empty()) out["profile_csv"] = args.profile_path;
  std::cout << out.dump(2) << "\n";
  emit(out, args.json_path);

  return res.outcome.kind == ShootOutcome::Kind::step_underflow ? exit_numeric : exit_ok;
}

// ------------------------------------------------------------------ search

struct SearchArgs {
  SpecArgs spec;
  std::vector<double> init;
  int vary = 0;
  double lo = 0, hi = 1;
  double resolution = 1e-8;
  double r_max = 30;
  double tol = 1e-9;
  std::string out_prefix = "search";
  std::string json_path;
};

int cmd_search(const SearchArgs& args) {
  const ProblemSpec spec = args.spec.to_spec();
  if (args.init.size() != static_cast<std::size_t>(spec.m))
    throw std::invalid_argument("--init must supply exactly m values a_0..a_{m-1}");
  SolveOptions opts;
  opts.r_max = args.r_max;
  opts.tol = args.tol;

  json out;
  out["schema"] = "polyrad/search/v1";
  out["spec"] = spec_json(spec);
  out["vary_index"] = args.vary;

  try {
    const auto res = shoot_search(spec, args.init, args.vary, args.lo, args.hi, args.resolution, opts);
    out["status"] = "bracketed";
    out["bracket"] = {{"lo", res.lo}, {"hi", res.hi}, {"iterations", res.iterations}};
    out["outcome_lo"] = outcome_json(res.run_lo.outcome);
    out["outcome_hi"] = outcome_json(res.run_hi.outcome);
    const std::string lo_csv = args.out_prefix + "_lo.csv";
    const std::string hi_csv = args.out_prefix + "_hi.csv";
    write_profile_csv(res.run_lo.profile, lo_csv);
    write_profile_csv(res.run_hi.profile, hi_csv);
    out["profiles"] = {lo_csv, hi_csv};
  } catch (const std::invalid_argument& err) {
    const std::string what = err.what();
    if (what.find("identical outcome kinds") == std::string::npos) throw;
    // Both endpoints behave alike: no bracket exists. Reported as a result,
    // since a one-kind family is itself evidence (e.g. of non-existence).
    out["status"] = "identical_outcomes";
    out["detail"] = what;
  }
  std::cout << out.dump(2) << "\n";
  emit(out, args.json_path);
  return exit_ok;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string family = "power";
  int n = 3;
  int m = 1;
  std::string alpha = "0";
  double lambda = 1.0;
  double amplitude = 1.0;
  double grid_lo = 0.1, grid_hi = 10.0;
  int grid_points = 200;
  std::string json_path;
};

int cmd_verify(const VerifyArgs& args) {
  const auto grid = geometric_grid(args.grid_lo, args.grid_hi, args.grid_points);
  json out;
  out["schema"] = "polyrad/verify/v1";
  out["family"] = args.family;
  out["n"] = args.n;
  out["m"] = args.m;

  auto residual_json = [](const ResidualReport& rep) {
    return json{{"max_rel", rep.max_rel},
                {"max_abs", rep.max_abs},
                {"worst_r", rep.worst_r},
                {"points", rep.points},
                {"stencil_error", rep.stencil_error}};
  };

  if (args.family == "power") {
    const Exponent alpha = Exponent::parse(args.alpha);
    const auto f = power_family(args.n, args.m, alpha);
    const ProblemSpec spec{args.n, args.m, alpha, RhsSign::plus};
    out["alpha"] = alpha_json(alpha);
    out["beta"] = to_string(f.power_beta());
    out["K"] = to_string(f.power_product_constant());
    out["C"] = f.power_amplitude();
    if (f.power_amplitude_exact()) out["C_exact"] = to_string(*f.power_amplitude_exact());
    out["residual"] = residual_json(residual(f, spec, grid));
  } else if (args.family == "bubble") {
    const auto f = bubble_family(args.n, args.m, args.lambda);
    out["lambda"] = args.lambda;
    out["decay_exponent"] = to_string(f.bubble_decay_exponent());
    const auto rep = eigen_ratio(args.n, args.m, args.lambda, grid);
    out["eigen_ratio"] = {{"mean", rep.mean},
                          {"spread", rep.spread},
                          {"min", rep.min_ratio},
                          {"max", rep.max_ratio},
                          {"points", rep.points}};
    if (args.m == 1) out["second_order_reference"] = args.n * (args.n - 2) / 4.0;
  } else if (args.family == "expgauss") {
    const Exponent alpha = Exponent::parse(args.alpha);
    const auto f = exp_gaussian_form(args.n, args.amplitude);
    out["alpha"] = alpha_json(alpha);
    out["amplitude"] = args.amplitude;
    // Super-solution margin: Delta^m u* - (u*)^alpha, non-negative for
    // alpha <= 1 and amplitude >= 1.
    double min_margin = HUGE_VAL;
    for (double r : grid)
      min_margin = std::min(min_margin,
                            f.laplacian(args.m, r) - signed_power(f.value(r), alpha, RhsSign::plus));
    out["supersolution_margin_min"] = min_margin;
  } else if (args.family == "const") {
    const Exponent alpha = Exponent::parse(args.alpha);
    const ProblemSpec spec{args.n, args.m, alpha, RhsSign::plus};
    out["alpha"] = alpha_json(alpha);
    out["value"] = args.amplitude;
    out["residual"] = residual_json(residual(constant_form(args.amplitude), spec, grid));
  } else {
    throw std::invalid_argument("unknown family '" + args.family + "'");
  }

  std::cout << out.dump(2) << "\n";
  emit(out, args.json_path);
  return exit_ok;
}

// ------------------------------------------------------------- certificate

int cmd_certificate(const std::string& kind, const SpecArgs& args, const std::string& json_path) {
  const Exponent alpha = Exponent::parse(args.alpha);
  json out;
  out["schema"] = "polyrad/certificate/v1";
  out["kind"] = kind;
  out["n"] = args.n;
  out["m"] = args.m;
  out["alpha"] = alpha_json(alpha);

  if (kind == "moser") {
    const auto s = moser_schedule(args.n, args.m, alpha);
    json inv = json::array();
    for (const auto& q : s.inv_q) inv.push_back(to_string(q));
    out["inv_q"] = inv;
    out["j_star"] = s.j_star;
    out["closing_coefficient"] = to_string(s.closing_coefficient);
    out["q_min"] = s.q_min;
    out["E_at_q_min"] = to_string(s.closing_exponent(s.q_min));
    out["indeterminate"] = s.indeterminate;
  } else if (kind == "decay") {
    const auto c = decay_certificate(args.n, args.m, alpha);
    out["cutoff_power"] = to_string(c.cutoff_power);
    out["decay_exponent"] = to_string(c.decay_exponent);
    out["liouville_applicable"] = c.liouville_applicable;
  } else {
    throw std::invalid_argument("certificate kind must be 'moser' or 'decay'");
  }

  std::cout << out.dump(2) << "\n";
  emit(out, json_path);
  return exit_ok;
}

// ------------------------------------------------------------------- sweep

struct SweepArgs {
  SpecArgs spec;  // alpha unused
  double alpha_lo = -2, alpha_hi = 2;
  int steps = 9;
  bool with_shoot = false;
  std::vector<double> init;
  double r_max = 30;  // evidence horizon
  double tol = 1e-8;
  std::string out_path = "sweep.csv";
  int jobs = 0;
};

struct SweepRow {
  double alpha = 0;
  bool exists = false;
  std::string citation;
  std::string outcome;
  double r_event = 0;
  std::string agreement;
  bool underflow = false;
};

int default_jobs() {
  if (const char* env = std::getenv("POLYRAD_JOBS")) {
    const int j = std::atoi(env);
    if (j >= 1) return j;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int cmd_sweep(const SweepArgs& args) {
  SpecArgs sargs = args.spec;
  sargs.alpha = "0";
  ProblemSpec base = sargs.to_spec();
  if (args.steps < 2) throw std::invalid_argument("--steps must be >= 2");

  std::vector<double> alphas(static_cast<std::size_t>(args.steps));
  for (int i = 0; i < args.steps; ++i)
    alphas[static_cast<std::size_t>(i)] =
        args.alpha_lo + (args.alpha_hi - args.alpha_lo) * i / (args.steps - 1);

  std::vector<double> init = args.init;
  if (init.empty()) init.assign(static_cast<std::size_t>(base.m), 1.0);
  if (init.size() != static_cast<std::size_t>(base.m))
    throw std::invalid_argument("--init must supply exactly m values");

  std::vector<SweepRow> rows(alphas.size());
  std::atomic<std::size_t> cursor{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= alphas.size()) return;
      SweepRow& row = rows[i];
      row.alpha = alphas[i];
      ProblemSpec spec = base;
      spec.alpha = Exponent(alphas[i]);

      const auto verdict = exists_positive(spec);
      row.exists = verdict.exists;
      row.citation = citation_tag(verdict.citation);

      if (args.with_shoot) {
        if (spec.alpha.value() < 0 && !(init[0] > 0)) {
          row.outcome = "skipped";
        } else {
          SolveOptions opts;
          opts.r_max = args.r_max;
          opts.tol = args.tol;
          const auto res = solve_ivp(spec, init, opts);
          row.outcome = outcome_kind_name(res.outcome.kind);
          row.r_event = res.outcome.r_event;
          row.underflow = res.outcome.kind == ShootOutcome::Kind::step_underflow;

          // Agreement: a NO verdict contradicted by survival past the
          // horizon, and the Keller-Osserman regime (second order, plus
          // sign, superlinear) where blow-up is mandatory.
          const bool survived = res.outcome.kind == ShootOutcome::Kind::survived &&
                                res.outcome.r_event >= args.r_max * (1 - 1e-12);
          const bool blowup_mandatory =
              spec.sign == RhsSign::plus && spec.m == 1 && spec.alpha.value() > 1 && init[0] > 0;
          bool disagree = !row.exists && survived;
          if (blowup_mandatory && res.outcome.kind != ShootOutcome::Kind::blow_up) disagree = true;
          row.agreement = disagree ? "disagree" : "ok";
        }
      }
    }
  };

  const int jobs = args.jobs >= 1 ? args.jobs : default_jobs();
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ofstream csv(args.out_path);
  if (!csv) throw std::runtime_error("cannot open " + args.out_path);
  csv << "n,m,sign,alpha,exists_positive,citation,outcome,r_event,agreement\n";
  bool any_disagree = false, any_underflow = false;
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%.17g", row.alpha);
    csv << base.n << "," << base.m << "," << args.spec.sign << "," << buf << ","
        << (row.exists ? "YES" : "NO") << "," << row.citation << "," << row.outcome << ",";
    if (!row.outcome.empty() && row.outcome != "skipped") {
      std::snprintf(buf, sizeof buf, "%.17g", row.r_event);
      csv << buf;
    }
    csv << "," << row.agreement << "\n";
    any_disagree = any_disagree || row.agreement == "disagree";
    any_underflow = any_underflow || row.underflow;
  }

  json out;
  out["schema"] = "polyrad/sweep/v1";
  out["rows"] = rows.size();
  out["csv"] = args.out_path;
  out["jobs"] = jobs;
  out["evidence_horizon"] = args.r_max;
  out["note"] = "Survived is evidence at the horizon, not a proof of existence";
  out["disagreements"] = any_disagree;
  std::cout << out.dump(2) << "\n";

  if (any_disagree) return exit_disagreement;
  if (any_underflow) return exit_numeric;
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radial laboratory for Delta^m u = +/- u^alpha in R^n"};
  app.require_subcommand(1);

  SpecArgs classify_args;
  auto* classify = app.add_subcommand("classify", "existence verdicts for one parameter point");
  add_spec_options(classify, classify_args);

  SpecArgs table_args;
  std::string table_csv;
  auto* table = app.add_subcommand("table", "alpha-axis existence table for fixed n, m, sign");
  table->add_option("--n", table_args.n)->required();
  table->add_option("--m", table_args.m)->required();
  table->add_option("--sign", table_args.sign)->required();
  table->add_option("--csv", table_csv, "write a machine-readable twin");

  ShootArgs shoot_args;
  auto* shoot = app.add_subcommand("shoot", "integrate the radial initial-value problem");
  add_spec_options(shoot, shoot_args.spec);
  shoot->add_option("--init", shoot_args.init, "a_0..a_{m-1}")->required()->delimiter(',');
  shoot->add_option("--rmax", shoot_args.r_max);
  shoot->add_option("--tol", shoot_args.tol);
  shoot->add_option("--profile", shoot_args.profile_path, "profile CSV path ('' to skip)");
  shoot->add_option("--json", shoot_args.json_path, "also write outcome JSON here");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "bisect one initial value between outcome kinds");
  add_spec_options(search, search_args.spec);
  search->add_option("--init", search_args.init, "a_0..a_{m-1} template")->required()->delimiter(',');
  search->add_option("--vary", search_args.vary, "index of the varied a_i")->required();
  search->add_option("--lo", search_args.lo)->required();
  search->add_option("--hi", search_args.hi)->required();
  search->add_option("--resolution", search_args.resolution);
  search->add_option("--rmax", search_args.r_max);
  search->add_option("--tol", search_args.tol);
  search->add_option("--out-prefix", search_args.out_prefix);
  search->add_option("--json", search_args.json_path);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "closed-form residuals and bubble eigen-ratio");
  verify->add_option("--family", verify_args.family, "power | bubble | expgauss | const")->required();
  verify->add_option("--n", verify_args.n)->required();
  verify->add_option("--m", verify_args.m)->required();
  verify->add_option("--alpha", verify_args.alpha);
  verify->add_option("--lambda", verify_args.lambda);
  verify->add_option("--amplitude", verify_args.amplitude);
  verify->add_option("--grid-lo", verify_args.grid_lo);
  verify->add_option("--grid-hi", verify_args.grid_hi);
  verify->add_option("--grid-points", verify_args.grid_points);
  verify->add_option("--json", verify_args.json_path);

  std::string cert_kind;
  SpecArgs cert_args;
  std::string cert_json;
  auto* cert = app.add_subcommand("certificate", "Moser schedule or decay certificate");
  cert->add_option("kind", cert_kind, "moser | decay")->required();
  cert->add_option("--n", cert_args.n)->required();
  cert->add_option("--m", cert_args.m)->required();
  cert->add_option("--alpha", cert_args.alpha)->required();
  cert->add_option("--json", cert_json);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "alpha sweep with optional shooting evidence");
  sweep->add_option("--n", sweep_args.spec.n)->required();
  sweep->add_option("--m", sweep_args.spec.m)->required();
  sweep->add_option("--sign", sweep_args.spec.sign)->required();
  sweep->add_option("--alpha-lo", sweep_args.alpha_lo)->required();
  sweep->add_option("--alpha-hi", sweep_args.alpha_hi)->required();
  sweep->add_option("--steps", sweep_args.steps)->required();
  sweep->add_flag("--shoot", sweep_args.with_shoot, "attach shooting evidence per grid point");
  sweep->add_option("--init", sweep_args.init)->delimiter(',');
  sweep->add_option("--rmax", sweep_args.r_max, "evidence horizon");
  sweep->add_option("--tol", sweep_args.tol);
  sweep->add_option("--out", sweep_args.out_path)->required();
  sweep->add_option("--jobs", sweep_args.jobs, "worker count (default: POLYRAD_JOBS or hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return exit_usage;
  }

  try {
    if (classify->parsed()) return cmd_classify(classify_args);
    if (table->parsed()) return cmd_table(table_args, table_csv);
    if (shoot->parsed()) return cmd_shoot(shoot_args);
    if (search->parsed()) return cmd_search(search_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (cert->parsed()) return cmd_certificate(cert_kind, cert_args, cert_json);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_numeric;
  }
  return exit_usage;
}
