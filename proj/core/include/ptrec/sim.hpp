#pragma once

#include <cstdint>
#include <vector>

#include "ptrec/design.hpp"

namespace ptrec {

struct SimConfig {
  DesignPair design;
  double theta1 = 1.0;
  std::vector<double> theta2_grid;
  double alpha = 0.16;
  double k = 1.0;
  std::int64_t replicates = 100000;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency; results do not depend on it

  /// Throws DomainError / InputError on invalid fields.
  void validate() const;
};

/// Monte Carlo summary of one estimator at one theta2.  Efficiency is
/// MSE(theta1_hat) / MSE(estimator); its SE uses the delta method on the
/// paired replicate errors.
struct EstimatorStats {
  double bias = 0.0;
  double bias_se = 0.0;
  double mse = 0.0;
  double mse_se = 0.0;
  double efficiency = 1.0;
  double efficiency_se = 0.0;
};

struct McRow {
  double theta2;
  EstimatorStats mle;
  EstimatorStats pt;
  EstimatorStats shrink;
};

struct McReport {
  SimConfig config;
  std::vector<McRow> rows;
};

/// Simulates record samples for both series at every theta2 and compares
/// theta1_hat, the preliminary-test and the shrinkage estimators of theta1.
/// Bit-identical for identical config regardless of thread count.
McReport mc_compare(const SimConfig& config);

struct OracleEstimate {
  double risk;
  double se;
};

/// Weighted-loss risk of the shrinkage estimator (k = 1: preliminary test)
/// by simulating n_i theta_hat_i / theta_i as Gamma(shape_i) sums of
/// exponentials, with theta1 = 1 and theta2 = delta.
OracleEstimate mc_oracle_risk(const DesignPair& design, double delta, double alpha, double k,
                              std::int64_t replicates, std::uint64_t seed, int threads = 0);

}  // namespace ptrec
