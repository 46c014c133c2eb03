#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include <boost/math/special_functions/beta.hpp>

#include "generators.hpp"
#include "ptrec/errors.hpp"
#include "ptrec/specfun.hpp"
#include "quadrature.hpp"

namespace ptrec {
namespace {

// Frozen values from tests/oracles/specfun_oracle.py (50-digit quadrature).
constexpr double kLogBeta_2p5_3p5 = -3.3018352699620526098;
constexpr double kRegBeta_0p3_2p5_3p5 = 0.29675298929566639864;
constexpr double kInvRegBeta_0p25_5_6 = 0.3506808141562440844;
constexpr double kFQuantile_0p95_10_12 = 2.7533867688358544551;

TEST(LogBeta, ClosedForms) {
  EXPECT_DOUBLE_EQ(log_beta(1.0, 1.0), 0.0);
  EXPECT_NEAR(log_beta(2.0, 3.0), std::log(1.0 / 12.0), 1e-14);
}

TEST(LogBeta, MatchesOracle) { EXPECT_NEAR(log_beta(2.5, 3.5), kLogBeta_2p5_3p5, 1e-14); }

TEST(LogBeta, TwelveDigitsForLargeArguments) {
  struct Case {
    double a, b, expected;
  };
  const Case cases[] = {{1e4, 1.0, -9.2103403719761827361},
                        {1e4, 1e4, -13866.28325676140964},
                        {0.5, 1e4, -4.0327927430633964893},
                        {3000.5, 7.25, -51.002732816388862609},
                        {12.5, 10.25, -15.591804602753803842},
                        {9.5, 0.75, -1.4754092992474824414}};
  for (const Case& c : cases) {
    EXPECT_NEAR(log_beta(c.a, c.b), c.expected, 1e-12 * std::fabs(c.expected)) << c.a << ", " << c.b;
    EXPECT_EQ(log_beta(c.a, c.b), log_beta(c.b, c.a));
  }
}

TEST(LogBeta, RejectsNonPositiveShapes) {
  EXPECT_THROW(log_beta(0.0, 1.0), DomainError);
  EXPECT_THROW(log_beta(1.0, -2.0), DomainError);
}

TEST(RegIncBeta, Endpoints) {
  EXPECT_EQ(reg_inc_beta(0.0, 2.0, 3.0), 0.0);
  EXPECT_EQ(reg_inc_beta(1.0, 2.0, 3.0), 1.0);
  EXPECT_EQ(reg_inc_beta_upper(0.0, 2.0, 3.0), 1.0);
  EXPECT_EQ(reg_inc_beta_upper(1.0, 2.0, 3.0), 0.0);
}

TEST(RegIncBeta, SymmetricShapesAtHalf) {
  for (double a : {0.5, 1.0, 3.0, 17.5, 200.0}) EXPECT_NEAR(reg_inc_beta(0.5, a, a), 0.5, 1e-14) << a;
}

TEST(RegIncBeta, UnitShapeClosedForm) {
  EXPECT_NEAR(reg_inc_beta(0.3, 1.0, 4.0), 1.0 - std::pow(0.7, 4), 1e-15);
}

TEST(RegIncBeta, MatchesOracle) {
  EXPECT_NEAR(reg_inc_beta(0.3, 2.5, 3.5), kRegBeta_0p3_2p5_3p5, 1e-14);
  EXPECT_NEAR(reg_inc_beta(BetaArgs{0.3, 2.5, 3.5}), kRegBeta_0p3_2p5_3p5, 1e-14);
}

TEST(RegIncBeta, SmallTailsKeepRelativeAccuracy) {
  EXPECT_NEAR(reg_inc_beta(1e-3, 3.0, 40.0) / 1.1149261952348718306e-5, 1.0, 1e-12);
  EXPECT_NEAR(reg_inc_beta_upper(0.999, 40.0, 3.0) / 1.1149261952348718306e-5, 1.0, 1e-10);
  EXPECT_NEAR(reg_inc_beta(1e-10, 0.5, 0.5) / 6.3661977237819167262e-6, 1.0, 1e-12);
}

TEST(RegIncBeta, AgreesWithQuadratureOnRandomGrid) {
  for (const auto& c : testing::beta_cases(300, 11)) {
    const double x = std::clamp(c.x, 1e-6, 1.0 - 1e-6);
    EXPECT_NEAR(reg_inc_beta(x, c.a, c.b), testing::quad_reg_inc_beta(x, c.a, c.b), 1e-12)
        << "x=" << x << " a=" << c.a << " b=" << c.b;
  }
}

TEST(RegIncBeta, AgreesWithBoostOnRandomGrid) {
  for (const auto& c : testing::beta_cases(2000, 12, 0.5, 500.0)) {
    EXPECT_NEAR(reg_inc_beta(c.x, c.a, c.b), boost::math::ibeta(c.a, c.b, c.x), 1e-12)
        << "x=" << c.x << " a=" << c.a << " b=" << c.b;
    EXPECT_NEAR(reg_inc_beta_upper(c.x, c.a, c.b), boost::math::ibetac(c.a, c.b, c.x), 1e-12);
  }
}

TEST(RegIncBeta, ValidatesArguments) {
  EXPECT_THROW(reg_inc_beta(-0.1, 1.0, 1.0), DomainError);
  EXPECT_THROW(reg_inc_beta(1.1, 1.0, 1.0), DomainError);
  EXPECT_THROW(reg_inc_beta(0.5, 0.0, 1.0), DomainError);
  EXPECT_THROW(reg_inc_beta(std::nan(""), 1.0, 1.0), DomainError);
  EXPECT_THROW(BetaArgs({0.5, 1.0, -1.0}).validate(), DomainError);
}

TEST(RegIncBetaProperty, Symmetry) {
  for (const auto& c : testing::beta_cases(2000, 21)) {
    EXPECT_NEAR(reg_inc_beta(c.x, c.a, c.b) + reg_inc_beta(1.0 - c.x, c.b, c.a), 1.0, 1e-12)
        << "x=" << c.x << " a=" << c.a << " b=" << c.b;
  }
}

TEST(RegIncBetaProperty, StrictlyIncreasingOnGrids) {
  int checked = 0;
  for (const auto& c : testing::beta_cases(60, 31)) {
    double prev = reg_inc_beta(0.0, c.a, c.b);
    for (int i = 1; i < 50; ++i) {
      const double x = i / 50.0;
      const double v = reg_inc_beta(x, c.a, c.b);
      // Strict increase wherever the value is not saturated at 0 or 1.
      if (prev > 0.0 && v < 1.0) {
        EXPECT_GT(v, prev) << "x=" << x << " a=" << c.a << " b=" << c.b;
      } else {
        EXPECT_GE(v, prev);
      }
      prev = v;
      ++checked;
    }
  }
  EXPECT_GE(checked, 1000);
}

TEST(InvRegIncBeta, ClosedForms) {
  EXPECT_EQ(inv_reg_inc_beta(0.0, 2.0, 3.0), 0.0);
  EXPECT_EQ(inv_reg_inc_beta(1.0, 2.0, 3.0), 1.0);
  EXPECT_NEAR(inv_reg_inc_beta(0.5, 3.0, 3.0), 0.5, 1e-14);
  EXPECT_NEAR(inv_reg_inc_beta(0.7599, 1.0, 4.0), 0.3, 1e-12);
}

TEST(InvRegIncBeta, MatchesOracle) {
  EXPECT_NEAR(inv_reg_inc_beta(0.25, 5.0, 6.0), kInvRegBeta_0p25_5_6, 1e-13);
}

TEST(InvRegIncBeta, ComplementIsAccurateNearOne) {
  const UnitPoint pt = inv_reg_inc_beta_point(0.5, 400.0, 0.5);
  EXPECT_NEAR(pt.x + pt.one_minus_x, 1.0, 1e-15);
  EXPECT_NEAR(reg_inc_beta_upper(pt.x, 400.0, 0.5), 0.5, 1e-12);
  EXPECT_GT(pt.one_minus_x, 0.0);
}

TEST(InvRegIncBeta, ResidualWithinTolerance) {
  for (const auto& c : testing::beta_cases(2000, 41)) {
    const double p = c.x;
    const double x = inv_reg_inc_beta(p, c.a, c.b);
    EXPECT_LE(std::fabs(reg_inc_beta(x, c.a, c.b) - p), 1e-10) << "p=" << p << " a=" << c.a << " b=" << c.b;
  }
}

TEST(InvRegIncBeta, RejectsProbabilityOutsideUnitInterval) {
  EXPECT_THROW(inv_reg_inc_beta(-0.01, 2.0, 2.0), DomainError);
  EXPECT_THROW(inv_reg_inc_beta(1.01, 2.0, 2.0), DomainError);
}

// x is recoverable from p = I_x(a,b) only where a double-precision p pins x
// down: ulp(p) / density(x) must be well below the 1e-8 target.
TEST(InvRegIncBetaProperty, RoundTripOnWellConditionedCases) {
  int checked = 0;
  for (const auto& c : testing::beta_cases(4000, 51)) {
    const double x = 1e-6 + c.x * (1.0 - 2e-6);
    const double p = reg_inc_beta(x, c.a, c.b);
    const double ulp = std::nextafter(p, 2.0) - p;
    const double density = beta_density(x, c.a, c.b);
    if (!(density > 0.0) || ulp / density > 1e-9 || p <= 0.0 || p >= 1.0) continue;
    EXPECT_NEAR(inv_reg_inc_beta(p, c.a, c.b), x, 1e-8) << "x=" << x << " a=" << c.a << " b=" << c.b;
    ++checked;
  }
  EXPECT_GE(checked, 1000);
}

TEST(FQuantile, MedianOfEqualDegreesIsOne) {
  for (double d : {1.0, 4.0, 10.0, 37.0}) EXPECT_NEAR(f_quantile(0.5, d, d), 1.0, 1e-13) << d;
}

TEST(FQuantile, MatchesOracle) {
  EXPECT_NEAR(f_quantile(0.95, 10.0, 12.0) / kFQuantile_0p95_10_12, 1.0, 1e-13);
  EXPECT_NEAR(testing::quad_f_cdf(f_quantile(0.95, 10.0, 12.0), 10.0, 12.0), 0.95, 1e-12);
}

TEST(FQuantile, InvertsCdf) {
  for (double p : {1e-6, 0.01, 0.08, 0.5, 0.92, 0.999}) {
    EXPECT_NEAR(f_cdf(f_quantile(p, 7.0, 9.0), 7.0, 9.0), p, 1e-12 + 1e-10 * p) << p;
  }
}

TEST(FQuantile, RejectsClosedEndpoints) {
  EXPECT_THROW(f_quantile(0.0, 2.0, 2.0), DomainError);
  EXPECT_THROW(f_quantile(1.0, 2.0, 2.0), DomainError);
  EXPECT_THROW(f_quantile(0.5, 0.0, 2.0), DomainError);
}

TEST(FQuantileProperty, ReciprocalIdentity) {
  for (const auto& c : testing::f_cases(2000, 61)) {
    const double q = f_quantile(c.p, c.d1, c.d2);
    const double r = 1.0 / f_quantile(1.0 - c.p, c.d2, c.d1);
    EXPECT_NEAR(q / r, 1.0, 1e-9) << "p=" << c.p << " d1=" << c.d1 << " d2=" << c.d2;
  }
}

TEST(BetaDensity, IntegratesToCdfIncrement) {
  const double h = 1e-6;
  const double x = 0.37;
  const double numeric = (reg_inc_beta(x + h, 2.5, 4.0) - reg_inc_beta(x - h, 2.5, 4.0)) / (2 * h);
  EXPECT_NEAR(beta_density(x, 2.5, 4.0), numeric, 1e-6);
}

}  // namespace
}  // namespace ptrec
