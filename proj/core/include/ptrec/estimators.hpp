#pragma once

#include "ptrec/design.hpp"

namespace ptrec {

/// The two record MLEs and the design they came from.
struct EstimationInput {
  double theta1_hat;
  double theta2_hat;
  DesignPair design;

  /// Throws InputError unless both estimates are positive and finite.
  void validate() const;
};

/// Acceptance region (c1, c2) of the ratio test of H0: theta1 = theta2.
struct CriticalValues {
  double c1;
  double c2;
};

struct TestDecision {
  double c1;
  double c2;
  double ratio;   // theta1_hat / theta2_hat
  bool accepted;  // c1 < ratio < c2, strictly
};

enum class Target { Theta1, Theta2 };

struct Estimate {
  double value;
  TestDecision decision;
};

/// c1 = F^-1(alpha/2), c2 = F^-1(1 - alpha/2) on (df1, df2).  alpha = 1 gives
/// c1 = c2 and an empty acceptance region.  Throws DomainError unless 0 < alpha <= 1.
CriticalValues critical_values(const DesignPair& design, double alpha);

TestDecision lr_test(const EstimationInput& input, const CriticalValues& cv);
TestDecision lr_test(const EstimationInput& input, double alpha);

/// (n1 theta1_hat + n2 theta2_hat) / (n1 + n2).
double pooled(const EstimationInput& input);

/// Pooled estimate when H0 is accepted, otherwise the target's own MLE.
Estimate preliminary_test(const EstimationInput& input, double alpha, Target target = Target::Theta1);
Estimate preliminary_test(const EstimationInput& input, const CriticalValues& cv,
                          Target target = Target::Theta1);

/// k * pooled + (1 - k) * own MLE when accepted, own MLE otherwise.
/// Throws DomainError unless 0 <= k <= 1.
Estimate shrinkage(const EstimationInput& input, double alpha, double k,
                   Target target = Target::Theta1);
Estimate shrinkage(const EstimationInput& input, const CriticalValues& cv, double k,
                   Target target = Target::Theta1);

}  // namespace ptrec
