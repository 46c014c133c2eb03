#include "ptrec/estimators.hpp"

#include <cmath>
#include <string>

#include "ptrec/errors.hpp"
#include "ptrec/specfun.hpp"

namespace ptrec {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
}

void require_k(double k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw DomainError("k must lie in [0, 1], got " + std::to_string(k));
  }
}

double own(const EstimationInput& input, Target target) {
  return target == Target::Theta1 ? input.theta1_hat : input.theta2_hat;
}

}  // namespace

void EstimationInput::validate() const {
  if (!(theta1_hat > 0.0) || !(theta2_hat > 0.0) || !std::isfinite(theta1_hat) ||
      !std::isfinite(theta2_hat)) {
    throw InputError("scale estimates must be positive and finite");
  }
}

CriticalValues critical_values(const DesignPair& design, double alpha) {
  require_alpha(alpha);
  return {f_quantile(0.5 * alpha, design.df1(), design.df2()),
          f_quantile(1.0 - 0.5 * alpha, design.df1(), design.df2())};
}

TestDecision lr_test(const EstimationInput& input, const CriticalValues& cv) {
  input.validate();
  const double ratio = input.theta1_hat / input.theta2_hat;
  return {cv.c1, cv.c2, ratio, cv.c1 < ratio && ratio < cv.c2};
}

TestDecision lr_test(const EstimationInput& input, double alpha) {
  return lr_test(input, critical_values(input.design, alpha));
}

double pooled(const EstimationInput& input) {
  input.validate();
  const int n1 = input.design.n1();
  const int n2 = input.design.n2();
  return (n1 * input.theta1_hat + n2 * input.theta2_hat) / (n1 + n2);
}

Estimate preliminary_test(const EstimationInput& input, const CriticalValues& cv, Target target) {
  const TestDecision decision = lr_test(input, cv);
  return {decision.accepted ? pooled(input) : own(input, target), decision};
}

Estimate preliminary_test(const EstimationInput& input, double alpha, Target target) {
  return preliminary_test(input, critical_values(input.design, alpha), target);
}

Estimate shrinkage(const EstimationInput& input, const CriticalValues& cv, double k, Target target) {
  require_k(k);
  const TestDecision decision = lr_test(input, cv);
  const double mle = own(input, target);
  if (!decision.accepted) return {mle, decision};
  if (k == 1.0) return {pooled(input), decision};
  return {k * pooled(input) + (1.0 - k) * mle, decision};
}

Estimate shrinkage(const EstimationInput& input, double alpha, double k, Target target) {
  return shrinkage(input, critical_values(input.design, alpha), k, target);
}

}  // namespace ptrec
