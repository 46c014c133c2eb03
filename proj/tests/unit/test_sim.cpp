#include <gtest/gtest.h>

#include <cmath>

#include "ptrec/errors.hpp"
#include "ptrec/risk.hpp"
#include "ptrec/sim.hpp"

namespace ptrec {
namespace {

SimConfig small_config(int threads) {
  return SimConfig{DesignPair(3, 4), 1.0, {0.5, 1.0, 2.0}, 0.16, 0.4, 20000, 99, threads};
}

void expect_identical(const EstimatorStats& a, const EstimatorStats& b) {
  EXPECT_EQ(a.bias, b.bias);
  EXPECT_EQ(a.mse, b.mse);
  EXPECT_EQ(a.mse_se, b.mse_se);
  EXPECT_EQ(a.efficiency, b.efficiency);
  EXPECT_EQ(a.efficiency_se, b.efficiency_se);
}

TEST(McCompare, IdenticalAcrossThreadCounts) {
  const McReport one = mc_compare(small_config(1));
  const McReport four = mc_compare(small_config(4));
  ASSERT_EQ(one.rows.size(), 3u);
  ASSERT_EQ(four.rows.size(), 3u);
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    EXPECT_EQ(one.rows[i].theta2, four.rows[i].theta2);
    expect_identical(one.rows[i].mle, four.rows[i].mle);
    expect_identical(one.rows[i].pt, four.rows[i].pt);
    expect_identical(one.rows[i].shrink, four.rows[i].shrink);
  }
}

TEST(McCompare, SeedChangesDraws) {
  SimConfig a = small_config(1);
  SimConfig b = small_config(1);
  b.seed = 100;
  EXPECT_NE(mc_compare(a).rows[0].mle.mse, mc_compare(b).rows[0].mle.mse);
}

TEST(McCompare, ZeroKMatchesMleExactly) {
  SimConfig cfg = small_config(1);
  cfg.k = 0.0;
  for (const McRow& row : mc_compare(cfg).rows) {
    EXPECT_EQ(row.shrink.efficiency, 1.0);
    EXPECT_EQ(row.shrink.mse, row.mle.mse);
    EXPECT_EQ(row.mle.efficiency, 1.0);
  }
}

TEST(McCompare, AgreesWithClosedForm) {
  SimConfig cfg = small_config(1);
  cfg.replicates = 100000;
  for (const McRow& row : mc_compare(cfg).rows) {
    const RiskParams p{cfg.design, row.theta2, cfg.alpha, cfg.k};
    const Moments shrink = shrink_moments(p);
    EXPECT_NEAR(row.shrink.bias, shrink.bias, 3.0 * row.shrink.bias_se) << row.theta2;
    EXPECT_NEAR(row.shrink.mse, shrink.mse, 3.0 * row.shrink.mse_se) << row.theta2;
    EXPECT_NEAR(row.mle.mse, 1.0 / 3.0, 3.0 * row.mle.mse_se);
  }
}

TEST(McCompare, ScalesWithTheta1) {
  SimConfig cfg = small_config(1);
  cfg.theta1 = 2.0;
  cfg.theta2_grid = {2.0};
  const McReport r = mc_compare(cfg);
  // Bias and MSE are reported in the units of theta1.
  const Moments m = shrink_moments({cfg.design, 1.0, cfg.alpha, cfg.k, 2.0});
  EXPECT_NEAR(r.rows[0].shrink.bias, m.bias, 3.0 * r.rows[0].shrink.bias_se);
  EXPECT_NEAR(r.rows[0].shrink.mse, m.mse, 3.0 * r.rows[0].shrink.mse_se);
}

TEST(SimConfig, Validation) {
  SimConfig cfg = small_config(1);
  cfg.theta2_grid.clear();
  EXPECT_THROW(mc_compare(cfg), InputError);
  cfg = small_config(1);
  cfg.replicates = 0;
  EXPECT_THROW(mc_compare(cfg), DomainError);
  cfg = small_config(1);
  cfg.k = 2.0;
  EXPECT_THROW(mc_compare(cfg), DomainError);
  cfg = small_config(1);
  cfg.theta2_grid = {-1.0};
  EXPECT_THROW(mc_compare(cfg), DomainError);
}

TEST(McOracle, AlphaOneAndZeroKGiveMleRisk) {
  const DesignPair design(4, 6);
  const OracleEstimate a = mc_oracle_risk(design, 1.3, 1.0, 1.0, 100000, 5, 1);
  EXPECT_NEAR(a.risk, 0.25, 3.0 * a.se);
  const OracleEstimate b = mc_oracle_risk(design, 1.3, 0.16, 0.0, 100000, 5, 1);
  EXPECT_EQ(a.risk, b.risk);
}

TEST(McOracle, IndependentOfThreads) {
  const DesignPair design(3, 3);
  const OracleEstimate a = mc_oracle_risk(design, 0.8, 0.16, 0.5, 10000, 11, 1);
  const OracleEstimate b = mc_oracle_risk(design, 0.8, 0.16, 0.5, 10000, 11, 3);
  EXPECT_EQ(a.risk, b.risk);
  EXPECT_EQ(a.se, b.se);
}

TEST(McOracle, AgreesWithRecordSimulation) {
  // Gamma sums against full record samples, independent draws.
  const DesignPair design(3, 3);
  const OracleEstimate oracle = mc_oracle_risk(design, 1.0, 0.16, 1.0, 100000, 12, 1);
  const McReport records = mc_compare({design, 1.0, {1.0}, 0.16, 1.0, 100000, 13, 1});
  const double se = std::hypot(oracle.se, records.rows[0].pt.mse_se);
  EXPECT_NEAR(oracle.risk, records.rows[0].pt.mse, 3.0 * se);
  EXPECT_NEAR(oracle.risk, pt_risk(design, 1.0, 0.16), 3.0 * oracle.se);
}

}  // namespace
}  // namespace ptrec
