#pragma once

// Special functions behind the critical values and the closed-form risks:
// log Beta, the regularized incomplete beta function, its inverse and the
// F-distribution quantile.  All functions are pure and reentrant.

namespace ptrec {

/// Arguments of the regularized incomplete beta I_x(a, b).
struct BetaArgs {
  double x;
  double a;
  double b;

  /// Throws DomainError unless 0 <= x <= 1, a > 0, b > 0.
  void validate() const;
};

/// ln B(a, b).  Throws DomainError for a <= 0 or b <= 0.
double log_beta(double a, double b);

/// I_x(a, b) = B(a,b)^-1 * integral_0^x t^(a-1) (1-t)^(b-1) dt.
double reg_inc_beta(const BetaArgs& args);
double reg_inc_beta(double x, double a, double b);

/// 1 - I_x(a, b), computed without cancellation when I_x(a, b) is near 1.
double reg_inc_beta_upper(const BetaArgs& args);
double reg_inc_beta_upper(double x, double a, double b);

/// Beta(a, b) density at x.
double beta_density(double x, double a, double b);

/// A point of [0,1] carried together with its complement, so that values
/// close to 1 keep full relative precision in 1 - x.
struct UnitPoint {
  double x;
  double one_minus_x;
};

/// Solves I_x(a, b) = p for x.  Returns 0 at p = 0 and 1 at p = 1.
/// Throws DomainError when p is outside [0, 1] or a shape is non-positive.
double inv_reg_inc_beta(double p, double a, double b);

/// Same as inv_reg_inc_beta but also returns an accurate 1 - x.
UnitPoint inv_reg_inc_beta_point(double p, double a, double b);

/// P(F <= q) for F ~ F(d1, d2).
double f_cdf(double q, double d1, double d2);

/// Quantile of F(d1, d2): the q with P(F <= q) = p, for 0 < p < 1.
double f_quantile(double p, double d1, double d2);

}  // namespace ptrec
