#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ptrec/estimators.hpp"
#include "ptrec/minimax.hpp"
#include "ptrec/sim.hpp"

namespace ptrec::cli {

enum class Format { Csv, Json };
enum class Layout { Long, Matrix };

Format parse_format(std::string_view text);
Layout parse_layout(std::string_view text);

/// 6 significant digits, as used in every CSV cell.
std::string csv_number(double value);

struct EstimateReport {
  Variant variant;
  std::vector<double> records1;
  std::vector<double> records2;
  double theta1_hat;
  double theta2_hat;
  double pooled;
  double alpha;
  TestDecision decision;
  double theta_pt;
  double theta_pt_star;  // estimator of theta2
  std::optional<double> k;
  std::optional<double> theta_s;
};

void write_estimate(std::ostream& out, const EstimateReport& r, Format format);

struct CurvePoint {
  double delta;
  double risk;
  std::string family;  // pt | shrink | pooled | mle
  std::optional<double> alpha;
  std::optional<double> k;
};

void write_risk_curve(std::ostream& out, const std::vector<CurvePoint>& points, Format format);

void write_table(std::ostream& out, const std::vector<TableCell>& cells, TableCase which,
                 Layout layout, Format format);

void write_solution(std::ostream& out, const DesignPair& design, std::string_view tuned_name,
                    std::optional<double> alpha, const RegretSolution& s, Format format);

void write_mc(std::ostream& out, const McReport& report, Format format);

struct ValidationCell {
  int n1;
  int n2;
  double delta;
  double alpha;
  double k;
  double oracle;
  double oracle_se;
  double closed_derived;
  double closed_paper;
};

void write_validation(std::ostream& out, const std::vector<ValidationCell>& cells,
                      std::optional<BoundConvention> selected, std::int64_t replicates,
                      std::uint64_t seed, Format format);

}  // namespace ptrec::cli
