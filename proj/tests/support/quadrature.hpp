#pragma once

// Independent references for the special functions, by tanh-sinh quadrature
// of the defining integral.

#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>

namespace ptrec::testing {

/// int_0^x t^(p-1) (1-t)^(q-1) dt; both endpoint singularities sit at 0 so
/// that t is exact where the integrand is steep.
inline double incomplete_beta_integral(double x, double p, double q) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double t, double) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return std::pow(t, p - 1.0) * std::pow(1.0 - t, q - 1.0);
  };
  return integrator.integrate(f, 0.0, x, 1e-15);
}

/// I_x(a, b), integrating whichever tail lies below 1/2.
inline double quad_reg_inc_beta(double x, double a, double b) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double total = boost::math::beta(a, b);
  if (x < 0.5) return incomplete_beta_integral(x, a, b) / total;
  return 1.0 - incomplete_beta_integral(1.0 - x, b, a) / total;
}

/// P(F <= q) for F(d1, d2) through the quadrature beta.
inline double quad_f_cdf(double q, double d1, double d2) {
  return quad_reg_inc_beta(d1 * q / (d1 * q + d2), 0.5 * d1, 0.5 * d2);
}

}  // namespace ptrec::testing
