#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptrec/design.hpp"
#include "ptrec/risk.hpp"

namespace ptrec {

/// Tuning for the regret searches.
struct SearchOptions {
  double delta_floor = 1e-6;     // lower end of the delta_L search window
  int grid_points = 200;         // log-spaced scan points per window
  double delta_tolerance = 1e-6; // golden-section stopping width
  double expand_start = 4.0;     // delta_U window starts at [delta2, expand_start * delta2]
  int max_expansions = 40;       // doublings of the delta_U window
  double scan_min = 0.01;        // alpha / K bracket scan
  double scan_max = 0.99;
  int scan_points = 99;
  double equalization_tol = 1e-5;
  BoundConvention convention = kDefaultConvention;
};

/// Roots of R0(delta) = R1 (pooled vs MLE risk), ascending.
struct DeltaCrossings {
  double delta1;
  double delta2;
};

/// Closed-form roots of the quadratic R0 - R1 = 0.  The lower root may be
/// negative.  Throws DegenerateDesignError if the roots are complex or delta2 <= 0.
DeltaCrossings delta_intersections(const DesignPair& design);

/// Reg(delta, alpha) = R_alpha(delta) - (R0 inside (delta1, delta2), R1 outside).
double regret_pt(const DesignPair& design, double delta, double alpha,
                 BoundConvention convention = kDefaultConvention);

/// The two local regret maxima, below and above delta2.
struct SupRegret {
  double delta_L;
  double regret_L;
  double delta_U;
  double regret_U;
};

SupRegret sup_regret_pt(const DesignPair& design, double alpha, const SearchOptions& opts = {});

struct RegretSolution {
  double tuned_value;  // alpha* or K*
  double delta1;       // lower split point, max(delta1, 0)
  double delta2;
  double delta_L;
  double delta_U;
  double regret_at_L;
  double regret_at_U;
  bool fallback = false;  // no sign change: min-max instead of equalization
};

/// alpha* with Reg(delta_L, alpha*) = Reg(delta_U, alpha*).
RegretSolution optimal_alpha(const DesignPair& design, const SearchOptions& opts = {});

struct KMinimum {
  double k;
  double risk;
};

/// min over k in [0, 1] of h0 + h1 k + h2 k^2; ties go to the smallest k.
KMinimum minimize_k(const KQuadratic& q);

KMinimum inf_k_risk(const DesignPair& design, double delta, double alpha,
                    BoundConvention convention = kDefaultConvention);

/// Reg(delta, K) = R_alpha(delta, K) - inf_K R_alpha(delta, K).
double regret_k(const DesignPair& design, double delta, double alpha, double k,
                BoundConvention convention = kDefaultConvention);

/// Crossings of the PT risk R_alpha(delta) with R1; the split point for the
/// K family.  Falls back to delta_intersections when no crossing is bracketed.
DeltaCrossings pt_mle_crossings(const DesignPair& design, double alpha,
                                const SearchOptions& opts = {});

SupRegret sup_regret_k(const DesignPair& design, double alpha, double k,
                       const SearchOptions& opts = {});

/// K* with Reg(delta_L, K*) = Reg(delta_U, K*) at the given alpha.
RegretSolution optimal_k(const DesignPair& design, double alpha, const SearchOptions& opts = {});

enum class TableCase { Alpha, KFixedAlpha, KOptimalAlpha };

struct TableCell {
  int n1;
  int n2;
  std::optional<double> alpha;  // alpha* (Alpha, KOptimalAlpha) or the fixed alpha
  std::optional<double> k;      // K* (K cases)
  double regret_level = 0.0;
  double delta_L = 0.0;
  double delta_U = 0.0;
  bool fallback = false;
  std::string error;  // non-empty when the cell's optimizer threw
};

struct TableOptions {
  std::vector<int> n_values{2, 3, 4, 5, 7, 10};
  double fixed_alpha = 0.16;
  Variant variant = Variant::KnownLocation;
  SearchOptions search{};
  int threads = 0;  // 0: hardware concurrency
};

/// One cell per (n1, n2), ordered by n2 then n1.  Cells run concurrently;
/// errors are recorded per cell.
std::vector<TableCell> generate_tables(TableCase which, const TableOptions& opts = {});

}  // namespace ptrec
