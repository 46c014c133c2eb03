#pragma once

#include <string_view>

#include "ptrec/design.hpp"
#include "ptrec/estimators.hpp"

namespace ptrec {

/// How the acceptance event c1 < theta1_hat/theta2_hat < c2 is mapped onto
/// the Beta(m1, m2) variable B = G1 / (G1 + G2).
///
/// DerivedRatio: d_i = c_i n1 delta / (c_i n1 delta + n2), the exact image of
/// the event.  PaperLinear: d_i = 1 - n2 / (c_i n1 delta), clamped to [0, 1];
/// its first-order expansion for large c_i n1 delta / n2, kept for comparison.
enum class BoundConvention { PaperLinear, DerivedRatio };

inline constexpr BoundConvention kDefaultConvention = BoundConvention::DerivedRatio;

std::string_view to_string(BoundConvention convention);

/// "paper" / "derived" (and the enumerator names).  Throws InputError.
BoundConvention parse_convention(std::string_view text);

/// Bounds of the acceptance event on the Beta scale, with complements.
struct IntegrationBounds {
  double d1;
  double d2;
  double one_minus_d1;
  double one_minus_d2;
  BoundConvention convention;
};

IntegrationBounds d_bounds(const DesignPair& design, double delta, double c1, double c2,
                           BoundConvention convention = kDefaultConvention);

struct RiskParams {
  DesignPair design;
  double delta;  // theta2 / theta1
  double alpha;
  double k = 1.0;
  double theta1 = 1.0;
  BoundConvention convention = kDefaultConvention;

  /// Throws DomainError on delta <= 0, alpha outside (0,1], k outside [0,1]
  /// or theta1 <= 0.
  void validate() const;
};

struct Moments {
  double bias;
  double mse;
};

/// Bias and MSE of the preliminary-test estimator of theta1.  Requires k == 1.
Moments pt_moments(const RiskParams& params);

/// Bias and MSE of the shrinkage estimator of theta1.
Moments shrink_moments(const RiskParams& params);

/// Weighted-loss risk E[(T - theta1)^2] / theta1^2, a function of delta only.
double pt_risk(const DesignPair& design, double delta, double alpha,
               BoundConvention convention = kDefaultConvention);
double shrink_risk(const DesignPair& design, double delta, double alpha, double k,
                   BoundConvention convention = kDefaultConvention);

/// r0: risk of the pooled estimator; r1: risk of theta1_hat (1/n1 for
/// known-location records).
struct BoundaryRisks {
  double r0;
  double r1;
};

BoundaryRisks boundary_risks(const DesignPair& design, double delta);

/// Risk as a polynomial in k: h0 + h1 k + h2 k^2, with h2 >= 0.
struct KQuadratic {
  double h0;
  double h1;
  double h2;

  double at(double k) const { return h0 + k * (h1 + k * h2); }
};

/// Risk evaluator for one (design, alpha, convention); caches the critical values.
class RiskModel {
 public:
  RiskModel(DesignPair design, double alpha, BoundConvention convention = kDefaultConvention);

  const DesignPair& design() const { return design_; }
  double alpha() const { return alpha_; }
  BoundConvention convention() const { return convention_; }
  const CriticalValues& critical() const { return cv_; }

  KQuadratic coefficients(double delta) const;
  Moments moments(double delta, double k, double theta1 = 1.0) const;
  double risk(double delta, double k = 1.0) const;

 private:
  struct Terms {
    double a1, a2, b11, b22, b12;
  };
  Terms terms(double delta) const;

  DesignPair design_;
  double alpha_;
  BoundConvention convention_;
  CriticalValues cv_;
};

}  // namespace ptrec
