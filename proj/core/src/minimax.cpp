#include "ptrec/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "parallel.hpp"
#include "ptrec/errors.hpp"

namespace ptrec {

namespace {

using Curve = std::function<double(double)>;

struct Peak {
  double delta;
  double value;
};

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / (n - 1);
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = std::exp(a + step * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

Peak golden_max(const Curve& f, double a, double b, double tol) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 < f2 ? Peak{x2, f2} : Peak{x1, f1};
}

struct ScanResult {
  Peak peak;
  std::size_t index;
  std::size_t size;
};

// Grid scan followed by golden-section refinement around the best grid point.
ScanResult scan_max(const Curve& f, double lo, double hi, const SearchOptions& opts) {
  const std::vector<double> grid = log_grid(lo, hi, std::max(opts.grid_points, 3));
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double a = grid[best == 0 ? 0 : best - 1];
  const double b = grid[std::min(best + 1, grid.size() - 1)];
  Peak peak = golden_max(f, a, b, opts.delta_tolerance);
  if (peak.value < best_value) peak = {grid[best], best_value};
  return {peak, best, grid.size()};
}

Peak search_lower(const Curve& f, double split, const SearchOptions& opts) {
  if (!(split > opts.delta_floor)) {
    std::ostringstream msg;
    msg << "lower regret window is empty: delta2 = " << split << " <= floor " << opts.delta_floor;
    throw SearchError(msg.str());
  }
  return scan_max(f, opts.delta_floor, split, opts).peak;
}

Peak search_upper(const Curve& f, double split, const SearchOptions& opts) {
  double hi = opts.expand_start * split;
  for (int expansion = 0; expansion <= opts.max_expansions; ++expansion) {
    const ScanResult r = scan_max(f, split, hi, opts);
    if (r.index + 1 < r.size || !(r.peak.value > 0.0)) return r.peak;
    hi *= 2.0;
  }
  std::ostringstream msg;
  msg << "upper regret maximum not bracketed: window [" << split << ", " << hi
      << "] still peaks at its right end after " << opts.max_expansions << " expansions";
  throw SearchError(msg.str());
}

SupRegret sup_of(const Curve& f, double split, const SearchOptions& opts) {
  const Peak lower = search_lower(f, split, opts);
  const Peak upper = search_upper(f, split, opts);
  return {lower.delta, lower.value, upper.delta, upper.value};
}

double regret_pt_model(const RiskModel& model, const DeltaCrossings& cross, double delta) {
  const BoundaryRisks br = boundary_risks(model.design(), delta);
  const double best = (delta > cross.delta1 && delta < cross.delta2) ? br.r0 : br.r1;
  return model.risk(delta, 1.0) - best;
}

double regret_k_model(const RiskModel& model, double delta, double k) {
  const KQuadratic q = model.coefficients(delta);
  return std::max(0.0, q.at(k) - minimize_k(q).risk);
}

SupRegret sup_pt_model(const RiskModel& model, const DeltaCrossings& cross,
                       const SearchOptions& opts) {
  return sup_of([&](double d) { return regret_pt_model(model, cross, d); }, cross.delta2, opts);
}

SupRegret sup_k_model(const RiskModel& model, double k, double split, const SearchOptions& opts) {
  return sup_of([&](double d) { return regret_k_model(model, d, k); }, split, opts);
}

RegretSolution make_solution(double value, const DeltaCrossings& cross, const SupRegret& s,
                             bool fallback) {
  return {value, std::max(cross.delta1, 0.0), cross.delta2, s.delta_L, s.delta_U, s.regret_L,
          s.regret_U, fallback};
}

// Equalizes sup_L(t) and sup_U(t) over the tuning parameter t: scan for sign
// changes of the difference, root-find each bracket and keep the root with
// the smallest worst-case regret.  Without a sign change, minimizes the max.
template <class Sup>
std::pair<double, SupRegret> equalize(const Sup& sup, const SearchOptions& opts, bool& fallback) {
  const int n = std::max(opts.scan_points, 2);
  std::vector<double> ts(static_cast<std::size_t>(n));
  std::vector<SupRegret> sups(ts.size());
  for (int i = 0; i < n; ++i) {
    ts[static_cast<std::size_t>(i)] = opts.scan_min + (opts.scan_max - opts.scan_min) * i / (n - 1);
    sups[static_cast<std::size_t>(i)] = sup(ts[static_cast<std::size_t>(i)]);
  }
  auto gap = [](const SupRegret& s) { return s.regret_L - s.regret_U; };
  auto level = [](const SupRegret& s) { return std::max(s.regret_L, s.regret_U); };

  std::optional<std::pair<double, SupRegret>> best;
  auto consider = [&](double t, const SupRegret& s) {
    if (!best || level(s) < level(best->second)) best = std::make_pair(t, s);
  };
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double gi = gap(sups[i]);
    if (gi == 0.0) {
      consider(ts[i], sups[i]);
      continue;
    }
    if (i + 1 == ts.size()) break;
    const double gj = gap(sups[i + 1]);
    if (gj == 0.0 || (gi > 0.0) == (gj > 0.0)) continue;
    std::uintmax_t iters = 200;
    const auto bracket = boost::math::tools::toms748_solve(
        [&](double t) { return gap(sup(t)); }, ts[i], ts[i + 1], gi, gj,
        boost::math::tools::eps_tolerance<double>(45), iters);
    const double root = 0.5 * (bracket.first + bracket.second);
    consider(root, sup(root));
  }
  if (best) {
    fallback = false;
    return *best;
  }
  fallback = true;
  std::size_t arg = 0;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (level(sups[i]) < level(sups[arg])) arg = i;
  }
  const double lo = ts[arg == 0 ? 0 : arg - 1];
  const double hi = ts[std::min(arg + 1, ts.size() - 1)];
  const auto minimum = boost::math::tools::brent_find_minima(
      [&](double t) { return level(sup(t)); }, lo, hi, 40);
  if (minimum.second < level(sups[arg])) return {minimum.first, sup(minimum.first)};
  return {ts[arg], sups[arg]};
}

}  // namespace

DeltaCrossings delta_intersections(const DesignPair& design) {
  const double m1 = design.shape1();
  const double m2 = design.shape2();
  const double n = design.n1() + design.n2();
  const double r1 = boundary_risks(design, 1.0).r1;
  // n^2 (R0 - R1) = qa delta^2 + qb delta + qc
  const double qa = m2 + m2 * m2;
  const double qb = 2.0 * m2 * (m1 - n);
  const double qc = m1 + (m1 - n) * (m1 - n) - n * n * r1;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (!(disc > 0.0)) {
    throw DegenerateDesignError("pooled risk never drops below the MLE risk for design (" +
                                std::to_string(design.n1()) + ", " + std::to_string(design.n2()) +
                                ")");
  }
  const double root = std::sqrt(disc);
  // Stable pairing: the larger-magnitude root first, the other from the product.
  const double big = qb <= 0.0 ? (-qb + root) / (2.0 * qa) : (-qb - root) / (2.0 * qa);
  const double small = qc / (qa * big);
  DeltaCrossings c{std::min(big, small), std::max(big, small)};
  if (!(c.delta2 > 0.0)) {
    throw DegenerateDesignError("no positive crossing of pooled and MLE risks");
  }
  return c;
}

double regret_pt(const DesignPair& design, double delta, double alpha, BoundConvention convention) {
  return regret_pt_model(RiskModel(design, alpha, convention), delta_intersections(design), delta);
}

SupRegret sup_regret_pt(const DesignPair& design, double alpha, const SearchOptions& opts) {
  return sup_pt_model(RiskModel(design, alpha, opts.convention), delta_intersections(design), opts);
}

RegretSolution optimal_alpha(const DesignPair& design, const SearchOptions& opts) {
  const DeltaCrossings cross = delta_intersections(design);
  auto sup = [&](double alpha) {
    return sup_pt_model(RiskModel(design, alpha, opts.convention), cross, opts);
  };
  bool fallback = false;
  const auto [alpha, s] = equalize(sup, opts, fallback);
  return make_solution(alpha, cross, s, fallback);
}

KMinimum minimize_k(const KQuadratic& q) {
  KMinimum best{0.0, q.at(0.0)};
  if (q.h2 > 0.0) {
    const double k0 = -q.h1 / (2.0 * q.h2);
    if (k0 > 0.0 && k0 < 1.0) {
      const double r = q.at(k0);
      if (r < best.risk) best = {k0, r};
    }
  }
  const double r1 = q.at(1.0);
  if (r1 < best.risk) best = {1.0, r1};
  return best;
}

KMinimum inf_k_risk(const DesignPair& design, double delta, double alpha,
                    BoundConvention convention) {
  return minimize_k(RiskModel(design, alpha, convention).coefficients(delta));
}

double regret_k(const DesignPair& design, double delta, double alpha, double k,
                BoundConvention convention) {
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("k must lie in [0, 1], got " + std::to_string(k));
  return regret_k_model(RiskModel(design, alpha, convention), delta, k);
}

DeltaCrossings pt_mle_crossings(const DesignPair& design, double alpha, const SearchOptions& opts) {
  const DeltaCrossings pooled = delta_intersections(design);
  const RiskModel model(design, alpha, opts.convention);
  // R_alpha(delta) - R1 = h1 + h2.
  auto excess = [&](double d) {
    const KQuadratic q = model.coefficients(d);
    return q.h1 + q.h2;
  };
  const std::vector<double> grid =
      log_grid(opts.delta_floor, 100.0 * pooled.delta2, 2 * std::max(opts.grid_points, 3));
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = excess(grid[i]);

  auto root_in = [&](std::size_t i) {
    std::uintmax_t iters = 200;
    const auto r = boost::math::tools::toms748_solve(excess, grid[i], grid[i + 1], values[i],
                                                     values[i + 1],
                                                     boost::math::tools::eps_tolerance<double>(50),
                                                     iters);
    return 0.5 * (r.first + r.second);
  };
  std::optional<std::size_t> up;
  for (std::size_t i = grid.size() - 1; i-- > 0;) {
    if (values[i] < 0.0 && values[i + 1] > 0.0) {
      up = i;
      break;
    }
  }
  if (!up) return pooled;
  DeltaCrossings out{0.0, root_in(*up)};
  for (std::size_t i = *up; i-- > 0;) {
    if (values[i] > 0.0 && values[i + 1] < 0.0) {
      out.delta1 = root_in(i);
      break;
    }
  }
  return out;
}

SupRegret sup_regret_k(const DesignPair& design, double alpha, double k, const SearchOptions& opts) {
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("k must lie in [0, 1], got " + std::to_string(k));
  const DeltaCrossings split = pt_mle_crossings(design, alpha, opts);
  return sup_k_model(RiskModel(design, alpha, opts.convention), k, split.delta2, opts);
}

RegretSolution optimal_k(const DesignPair& design, double alpha, const SearchOptions& opts) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("optimal_k needs 0 < alpha < 1, got " + std::to_string(alpha));
  }
  const DeltaCrossings split = pt_mle_crossings(design, alpha, opts);
  const RiskModel model(design, alpha, opts.convention);
  auto sup = [&](double k) { return sup_k_model(model, k, split.delta2, opts); };
  bool fallback = false;
  const auto [k, s] = equalize(sup, opts, fallback);
  return make_solution(k, split, s, fallback);
}

std::vector<TableCell> generate_tables(TableCase which, const TableOptions& opts) {
  std::vector<TableCell> cells;
  for (int n2 : opts.n_values) {
    for (int n1 : opts.n_values) cells.push_back(TableCell{n1, n2, {}, {}, 0.0, 0.0, 0.0, false, {}});
  }
  detail::parallel_for(cells.size(), opts.threads, [&](std::size_t i) {
    TableCell& cell = cells[i];
    try {
      const DesignPair design(cell.n1, cell.n2, opts.variant);
      RegretSolution sol{};
      switch (which) {
        case TableCase::Alpha:
          sol = optimal_alpha(design, opts.search);
          cell.alpha = sol.tuned_value;
          break;
        case TableCase::KFixedAlpha:
          sol = optimal_k(design, opts.fixed_alpha, opts.search);
          cell.alpha = opts.fixed_alpha;
          cell.k = sol.tuned_value;
          break;
        case TableCase::KOptimalAlpha: {
          const RegretSolution a = optimal_alpha(design, opts.search);
          cell.alpha = a.tuned_value;
          sol = optimal_k(design, a.tuned_value, opts.search);
          cell.k = sol.tuned_value;
          cell.fallback = a.fallback;
          break;
        }
      }
      cell.regret_level = std::max(sol.regret_at_L, sol.regret_at_U);
      cell.delta_L = sol.delta_L;
      cell.delta_U = sol.delta_U;
      cell.fallback = cell.fallback || sol.fallback;
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
  });
  return cells;
}

}  // namespace ptrec
