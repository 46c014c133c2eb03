#include "ptrec/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ptrec/cli/csv.hpp"
#include "ptrec/cli/report.hpp"
#include "ptrec/errors.hpp"
#include "ptrec/estimators.hpp"
#include "ptrec/minimax.hpp"
#include "ptrec/records.hpp"
#include "ptrec/risk.hpp"
#include "ptrec/sim.hpp"

namespace ptrec::cli {

namespace {

const std::vector<double> kDefaultTheta2{0.1, 0.3, 0.5, 0.8, 1.0, 1.2, 1.5, 2.0, 2.5, 3.0};

struct Common {
  std::string variant = "known";
  std::string convention = "derived";
  std::string format = "csv";
  std::string out_path;
  double delta_floor = SearchOptions{}.delta_floor;
  int threads = 0;

  SearchOptions search() const {
    SearchOptions s;
    s.delta_floor = delta_floor;
    s.convention = parse_convention(convention);
    return s;
  }
};

void add_output(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out_path, "Write output to this file instead of stdout");
}

void add_model(CLI::App* cmd, Common& c) {
  cmd->add_option("--variant", c.variant, "Record model")->check(CLI::IsMember({"known", "locscale"}));
  cmd->add_option("--convention", c.convention, "Acceptance-bound convention")
      ->check(CLI::IsMember({"paper", "derived"}));
}

void add_search(CLI::App* cmd, Common& c) {
  cmd->add_option("--delta-floor", c.delta_floor, "Lower end of the delta_L search window")
      ->check(CLI::PositiveNumber);
}

// Output sink: the --out file when given, otherwise the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::vector<double> delta_grid(double lo, double hi, int steps) {
  if (steps < 1) throw InputError("--delta-steps must be >= 1");
  if (!(lo > 0.0) || !(hi >= lo)) throw InputError("delta range must satisfy 0 < delta-min <= delta-max");
  if (steps == 1) return {lo};
  std::vector<double> g(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
  return g;
}

int cmd_estimate(const Common& c, const std::string& input, const std::vector<std::string>& columns,
                 double alpha, std::optional<double> k, bool extract, std::ostream& out) {
  const Variant variant = parse_variant(c.variant);
  const SeriesTable table = read_series_csv_file(input);
  if (table.names.size() < 2 && columns.empty()) throw InputError(input + ": need two series columns");
  const std::size_t i1 = columns.empty() ? 0 : table.index_of(columns.at(0));
  const std::size_t i2 = columns.empty() ? 1 : table.index_of(columns.at(1));
  auto load = [&](std::size_t i) {
    const std::vector<double>& v = table.series[i];
    if (extract) return extract_upper_records(v, variant);
    if (v.empty()) throw InputError(input + ": column '" + table.names[i] + "' is empty");
    try {
      return RecordSample(v, variant);
    } catch (const InputError& e) {
      throw InputError(input + ": column '" + table.names[i] + "': " + e.what());
    }
  };
  const RecordSample x = load(i1);
  const RecordSample y = load(i2);
  const DesignPair design(x.n(), y.n(), variant);
  const EstimationInput est{mle_scale(x), mle_scale(y), design};
  const CriticalValues cv = critical_values(design, alpha);

  EstimateReport r{variant, x.values(), y.values(), est.theta1_hat, est.theta2_hat, pooled(est),
                   alpha, lr_test(est, cv), preliminary_test(est, cv, Target::Theta1).value,
                   preliminary_test(est, cv, Target::Theta2).value, k, std::nullopt};
  if (k) r.theta_s = shrinkage(est, cv, *k, Target::Theta1).value;
  Sink sink(c.out_path, out);
  write_estimate(sink.get(), r, parse_format(c.format));
  return 0;
}

int cmd_risk_curve(const Common& c, int n1, int n2, const std::vector<double>& alphas,
                   const std::vector<double>& ks, double dmin, double dmax, int steps,
                   std::ostream& out) {
  const DesignPair design(n1, n2, parse_variant(c.variant));
  const BoundConvention conv = parse_convention(c.convention);
  const std::vector<double> grid = delta_grid(dmin, dmax, steps);
  if (alphas.empty() || ks.empty()) throw InputError("need at least one --alpha and one --k");
  std::vector<CurvePoint> points;
  for (double alpha : alphas) {
    const RiskModel model(design, alpha, conv);
    for (double k : ks) {
      for (double d : grid) {
        points.push_back({d, model.risk(d, k), k == 1.0 ? "pt" : "shrink", alpha, k});
      }
    }
  }
  for (double d : grid) points.push_back({d, boundary_risks(design, d).r0, "pooled", {}, {}});
  for (double d : grid) points.push_back({d, boundary_risks(design, d).r1, "mle", {}, {}});
  Sink sink(c.out_path, out);
  write_risk_curve(sink.get(), points, parse_format(c.format));
  return 0;
}

int cmd_tables(const Common& c, int which, double alpha, const std::string& layout,
               const std::vector<int>& n_values, std::ostream& out, std::ostream& err) {
  TableOptions opts;
  opts.n_values = n_values;
  opts.fixed_alpha = alpha;
  opts.variant = parse_variant(c.variant);
  opts.search = c.search();
  opts.threads = c.threads;
  const TableCase tc =
      which == 1 ? TableCase::Alpha : which == 2 ? TableCase::KFixedAlpha : TableCase::KOptimalAlpha;
  const std::vector<TableCell> cells = generate_tables(tc, opts);
  Sink sink(c.out_path, out);
  write_table(sink.get(), cells, tc, parse_layout(layout), parse_format(c.format));
  int status = 0;
  for (const auto& cell : cells) {
    if (!cell.error.empty()) {
      err << "error: cell (" << cell.n1 << ", " << cell.n2 << "): " << cell.error << '\n';
      status = 1;
    }
  }
  return status;
}

int cmd_optimal_alpha(const Common& c, int n1, int n2, std::ostream& out) {
  const DesignPair design(n1, n2, parse_variant(c.variant));
  const RegretSolution s = optimal_alpha(design, c.search());
  Sink sink(c.out_path, out);
  write_solution(sink.get(), design, "alpha_star", std::nullopt, s, parse_format(c.format));
  return 0;
}

int cmd_optimal_k(const Common& c, int n1, int n2, double alpha, bool use_alpha_star,
                  std::ostream& out) {
  const DesignPair design(n1, n2, parse_variant(c.variant));
  const SearchOptions search = c.search();
  if (use_alpha_star) alpha = optimal_alpha(design, search).tuned_value;
  const RegretSolution s = optimal_k(design, alpha, search);
  Sink sink(c.out_path, out);
  write_solution(sink.get(), design, "k_star", alpha, s, parse_format(c.format));
  return 0;
}

int cmd_simulate(const Common& c, int n1, int n2, double alpha, std::optional<double> k,
                 bool use_alpha_star, double theta1, const std::vector<double>& theta2,
                 std::int64_t reps, std::uint64_t seed, std::ostream& out) {
  const DesignPair design(n1, n2, parse_variant(c.variant));
  const SearchOptions search = c.search();
  if (use_alpha_star) alpha = optimal_alpha(design, search).tuned_value;
  const double k_used = k ? *k : optimal_k(design, alpha, search).tuned_value;
  const SimConfig cfg{design, theta1, theta2, alpha, k_used, reps, seed, c.threads};
  Sink sink(c.out_path, out);
  write_mc(sink.get(), mc_compare(cfg), parse_format(c.format));
  return 0;
}

int cmd_validate(const Common& c, std::int64_t reps, std::uint64_t seed, std::ostream& out,
                 std::ostream& err) {
  const Variant variant = parse_variant(c.variant);
  const std::vector<std::pair<int, int>> designs{{2, 2}, {5, 6}, {10, 7}};
  const std::vector<double> deltas{0.5, 1.0, 2.0};
  const std::vector<double> alphas{0.16, 0.38};
  const std::vector<double> ks{0.21, 1.0};
  std::vector<ValidationCell> cells;
  std::uint64_t cell_seed = seed;
  for (const auto& [n1, n2] : designs) {
    const DesignPair design(n1, n2, variant);
    for (double alpha : alphas) {
      const RiskModel derived(design, alpha, BoundConvention::DerivedRatio);
      const RiskModel linear(design, alpha, BoundConvention::PaperLinear);
      for (double delta : deltas) {
        for (double k : ks) {
          const OracleEstimate o = mc_oracle_risk(design, delta, alpha, k, reps, cell_seed++, c.threads);
          cells.push_back({n1, n2, delta, alpha, k, o.risk, o.se, derived.risk(delta, k),
                           linear.risk(delta, k)});
        }
      }
    }
  }
  auto passes = [&](BoundConvention conv) {
    for (const auto& cell : cells) {
      const double closed = conv == BoundConvention::DerivedRatio ? cell.closed_derived : cell.closed_paper;
      if (!(std::fabs(closed - cell.oracle) <= 3.0 * cell.oracle_se)) return false;
    }
    return true;
  };
  const bool derived_ok = passes(BoundConvention::DerivedRatio);
  const bool linear_ok = passes(BoundConvention::PaperLinear);
  std::optional<BoundConvention> selected;
  if (derived_ok) {
    selected = BoundConvention::DerivedRatio;
  } else if (linear_ok) {
    selected = BoundConvention::PaperLinear;
  }
  Sink sink(c.out_path, out);
  write_validation(sink.get(), cells, selected, reps, seed, parse_format(c.format));
  const BoundConvention required = parse_convention(c.convention);
  const bool ok = required == BoundConvention::DerivedRatio ? derived_ok : linear_ok;
  if (!ok) {
    err << "validation failed: " << to_string(required)
        << " convention disagrees with the oracle beyond 3 SE in at least one cell\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Preliminary-test and shrinkage estimation of exponential scales from upper records"};
  app.name("ptrec");
  app.require_subcommand(1);
  Common common;

  // estimate
  std::string input;
  std::vector<std::string> columns;
  double est_alpha = 0.16;
  std::optional<double> est_k;
  bool extract = false;
  auto* estimate = app.add_subcommand("estimate", "Estimate theta1 from two record series in a CSV file");
  estimate->add_option("input,--input", input, "CSV file, one column per series")->required()->check(CLI::ExistingFile);
  estimate->add_option("--columns", columns, "Names of the two series columns")->expected(2)->delimiter(',');
  estimate->add_option("--alpha", est_alpha, "Test level")->check(CLI::Range(0.0, 1.0));
  estimate->add_option("--k", est_k, "Shrinkage coefficient")->check(CLI::Range(0.0, 1.0));
  estimate->add_flag("--extract-records", extract, "Columns hold raw streams; keep upper records only");
  add_model(estimate, common);
  add_output(estimate, common);

  // risk-curve
  int n1 = 0;
  int n2 = 0;
  std::vector<double> curve_alphas{0.16};
  std::vector<double> curve_ks{1.0};
  double dmin = 0.05;
  double dmax = 4.0;
  int steps = 80;
  auto* curve = app.add_subcommand("risk-curve", "Risk as a function of delta = theta2/theta1");
  curve->add_option("--n1", n1)->required()->check(CLI::PositiveNumber);
  curve->add_option("--n2", n2)->required()->check(CLI::PositiveNumber);
  curve->add_option("--alpha", curve_alphas, "Test levels (comma separated)")->delimiter(',');
  curve->add_option("--k", curve_ks, "Shrinkage coefficients (comma separated)")->delimiter(',');
  curve->add_option("--delta-min", dmin);
  curve->add_option("--delta-max", dmax);
  curve->add_option("--delta-steps", steps);
  add_model(curve, common);
  add_output(curve, common);

  // tables
  int which = 1;
  double table_alpha = 0.16;
  std::string layout = "long";
  std::vector<int> n_values = TableOptions{}.n_values;
  auto* tables = app.add_subcommand("tables", "Minimax-regret alpha* / K* over a grid of designs");
  tables->add_option("--which", which, "1: alpha*, 2: K* at fixed alpha, 3: alpha* and K* at alpha*")
      ->required()
      ->check(CLI::Range(1, 3));
  tables->add_option("--alpha", table_alpha, "Fixed test level for --which 2")->check(CLI::Range(0.0, 1.0));
  tables->add_option("--layout", layout, "long or matrix")->check(CLI::IsMember({"long", "matrix"}));
  tables->add_option("--n-values", n_values, "Record counts for both axes")->delimiter(',');
  tables->add_option("--threads", common.threads, "Worker threads (0: all cores)");
  add_model(tables, common);
  add_search(tables, common);
  add_output(tables, common);

  // optimal-alpha
  auto* opt_alpha = app.add_subcommand("optimal-alpha", "Minimax-regret test level for one design");
  opt_alpha->add_option("--n1", n1)->required()->check(CLI::PositiveNumber);
  opt_alpha->add_option("--n2", n2)->required()->check(CLI::PositiveNumber);
  add_model(opt_alpha, common);
  add_search(opt_alpha, common);
  add_output(opt_alpha, common);

  // optimal-k
  double k_alpha = 0.16;
  bool k_alpha_star = false;
  auto* opt_k = app.add_subcommand("optimal-k", "Minimax-regret shrinkage coefficient for one design");
  opt_k->add_option("--n1", n1)->required()->check(CLI::PositiveNumber);
  opt_k->add_option("--n2", n2)->required()->check(CLI::PositiveNumber);
  opt_k->add_option("--alpha", k_alpha, "Test level")->check(CLI::Range(0.0, 1.0));
  opt_k->add_flag("--alpha-star", k_alpha_star, "Use the design's minimax-regret alpha*");
  add_model(opt_k, common);
  add_search(opt_k, common);
  add_output(opt_k, common);

  // simulate
  double sim_alpha = 0.16;
  std::optional<double> sim_k;
  bool sim_alpha_star = false;
  double theta1 = 1.0;
  std::vector<double> theta2 = kDefaultTheta2;
  std::int64_t sim_reps = 100000;
  std::uint64_t sim_seed = 20240101;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo comparison of MLE, PT and shrinkage estimators");
  simulate->add_option("--n1", n1)->required()->check(CLI::PositiveNumber);
  simulate->add_option("--n2", n2)->required()->check(CLI::PositiveNumber);
  simulate->add_option("--alpha", sim_alpha, "Test level")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--k", sim_k, "Shrinkage coefficient (default: K* at the test level)")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_flag("--alpha-star", sim_alpha_star, "Use the design's minimax-regret alpha*");
  simulate->add_option("--theta1", theta1)->check(CLI::PositiveNumber);
  simulate->add_option("--theta2", theta2, "Grid of theta2 values (comma separated)")->delimiter(',');
  simulate->add_option("--reps", sim_reps, "Replicates per theta2")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_seed);
  simulate->add_option("--threads", common.threads, "Worker threads (0: all cores)");
  add_model(simulate, common);
  add_search(simulate, common);
  add_output(simulate, common);

  // validate
  std::int64_t val_reps = 200000;
  std::uint64_t val_seed = 7;
  auto* validate = app.add_subcommand("validate", "Closed-form risk against the Monte Carlo oracle");
  validate->add_option("--reps", val_reps, "Oracle replicates per cell")->check(CLI::PositiveNumber);
  validate->add_option("--seed", val_seed);
  validate->add_option("--threads", common.threads, "Worker threads (0: all cores)");
  add_model(validate, common);
  add_output(validate, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*estimate) return cmd_estimate(common, input, columns, est_alpha, est_k, extract, out);
    if (*curve) return cmd_risk_curve(common, n1, n2, curve_alphas, curve_ks, dmin, dmax, steps, out);
    if (*tables) return cmd_tables(common, which, table_alpha, layout, n_values, out, err);
    if (*opt_alpha) return cmd_optimal_alpha(common, n1, n2, out);
    if (*opt_k) return cmd_optimal_k(common, n1, n2, k_alpha, k_alpha_star, out);
    if (*simulate) {
      return cmd_simulate(common, n1, n2, sim_alpha, sim_k, sim_alpha_star, theta1, theta2, sim_reps,
                          sim_seed, out);
    }
    if (*validate) return cmd_validate(common, val_reps, val_seed, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace ptrec::cli
