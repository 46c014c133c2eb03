#include "ptrec/risk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptrec/errors.hpp"
#include "ptrec/specfun.hpp"

namespace ptrec {

namespace {

void require_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw DomainError("delta must be positive and finite, got " + std::to_string(delta));
  }
}

// P(d1 < B < d2) for B ~ Beta(p, q), taken from whichever tail is small so
// that bounds near 1 do not cancel.
double beta_mass(const IntegrationBounds& b, double p, double q) {
  if (b.d2 <= b.d1) return 0.0;
  if (b.d1 >= 0.5) {
    return reg_inc_beta_upper(b.d1, p, q) - reg_inc_beta_upper(b.d2, p, q);
  }
  return reg_inc_beta(b.d2, p, q) - reg_inc_beta(b.d1, p, q);
}

double mle_risk(const DesignPair& design) {
  const double n1 = design.n1();
  const double m1 = design.shape1();
  return ((m1 - n1) * (m1 - n1) + m1) / (n1 * n1);
}

}  // namespace

std::string_view to_string(BoundConvention convention) {
  return convention == BoundConvention::DerivedRatio ? "derived" : "paper";
}

BoundConvention parse_convention(std::string_view text) {
  if (text == "derived" || text == "DerivedRatio") return BoundConvention::DerivedRatio;
  if (text == "paper" || text == "PaperLinear") return BoundConvention::PaperLinear;
  throw InputError("unknown bound convention '" + std::string(text) + "' (expected paper|derived)");
}

IntegrationBounds d_bounds(const DesignPair& design, double delta, double c1, double c2,
                           BoundConvention convention) {
  require_delta(delta);
  if (!(c1 > 0.0) || !(c2 >= c1)) throw DomainError("critical values must satisfy 0 < c1 <= c2");
  const double n1 = design.n1();
  const double n2 = design.n2();
  IntegrationBounds b{};
  b.convention = convention;
  if (convention == BoundConvention::DerivedRatio) {
    const double s1 = c1 * n1 * delta;
    const double s2 = c2 * n1 * delta;
    b.d1 = s1 / (s1 + n2);
    b.d2 = s2 / (s2 + n2);
    b.one_minus_d1 = n2 / (s1 + n2);
    b.one_minus_d2 = n2 / (s2 + n2);
  } else {
    b.one_minus_d1 = std::clamp(n2 / (c1 * n1 * delta), 0.0, 1.0);
    b.one_minus_d2 = std::clamp(n2 / (c2 * n1 * delta), 0.0, 1.0);
    b.d1 = 1.0 - b.one_minus_d1;
    b.d2 = 1.0 - b.one_minus_d2;
  }
  return b;
}

void RiskParams::validate() const {
  require_delta(delta);
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("k must lie in [0, 1], got " + std::to_string(k));
  if (!(theta1 > 0.0) || !std::isfinite(theta1)) throw DomainError("theta1 must be positive");
}

RiskModel::RiskModel(DesignPair design, double alpha, BoundConvention convention)
    : design_(design), alpha_(alpha), convention_(convention),
      cv_(critical_values(design, alpha)) {}

// With theta1 = 1, theta1_hat = G1/n1, theta2_hat = delta G2/n2 (G_i ~ Gamma(m_i))
// and acceptance is d1 < G1/(G1+G2) < d2.  Each partial moment is a Beta mass
// with shifted shapes.
RiskModel::Terms RiskModel::terms(double delta) const {
  const IntegrationBounds b = d_bounds(design_, delta, cv_.c1, cv_.c2, convention_);
  const double n1 = design_.n1();
  const double n2 = design_.n2();
  const double m1 = design_.shape1();
  const double m2 = design_.shape2();
  Terms t{};
  t.a1 = m1 / n1 * beta_mass(b, m1 + 1, m2);
  t.a2 = delta * m2 / n2 * beta_mass(b, m1, m2 + 1);
  t.b11 = m1 * (m1 + 1) / (n1 * n1) * beta_mass(b, m1 + 2, m2);
  t.b22 = delta * delta * m2 * (m2 + 1) / (n2 * n2) * beta_mass(b, m1, m2 + 2);
  t.b12 = delta * m1 * m2 / (n1 * n2) * beta_mass(b, m1 + 1, m2 + 1);
  return t;
}

KQuadratic RiskModel::coefficients(double delta) const {
  const Terms t = terms(delta);
  const double lambda = design_.lambda();
  KQuadratic q{};
  q.h0 = mle_risk(design_);
  q.h1 = 2.0 * lambda * ((t.b12 - t.b11) + (t.a1 - t.a2));
  q.h2 = std::max(0.0, lambda * lambda * ((t.b11 + t.b22) - 2.0 * t.b12));
  return q;
}

Moments RiskModel::moments(double delta, double k, double theta1) const {
  RiskParams{design_, delta, alpha_, k, theta1, convention_}.validate();
  const Terms t = terms(delta);
  const double mu1 = static_cast<double>(design_.shape1()) / design_.n1();
  const double w = k * design_.lambda();
  const double bias = theta1 * ((mu1 - 1.0) + w * (t.a2 - t.a1));
  return {bias, theta1 * theta1 * coefficients(delta).at(k)};
}

double RiskModel::risk(double delta, double k) const {
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("k must lie in [0, 1], got " + std::to_string(k));
  return coefficients(delta).at(k);
}

Moments pt_moments(const RiskParams& params) {
  if (params.k != 1.0) throw DomainError("pt_moments requires k = 1");
  return shrink_moments(params);
}

Moments shrink_moments(const RiskParams& params) {
  params.validate();
  return RiskModel(params.design, params.alpha, params.convention)
      .moments(params.delta, params.k, params.theta1);
}

double pt_risk(const DesignPair& design, double delta, double alpha, BoundConvention convention) {
  return shrink_risk(design, delta, alpha, 1.0, convention);
}

double shrink_risk(const DesignPair& design, double delta, double alpha, double k,
                   BoundConvention convention) {
  RiskParams{design, delta, alpha, k, 1.0, convention}.validate();
  return RiskModel(design, alpha, convention).risk(delta, k);
}

BoundaryRisks boundary_risks(const DesignPair& design, double delta) {
  require_delta(delta);
  const double m1 = design.shape1();
  const double m2 = design.shape2();
  const double n = design.n1() + design.n2();
  const double shift = m1 + delta * m2 - n;
  // Single division keeps r0(1) = 1/(n1 + n2) exact for known-location designs.
  return {(m1 + delta * delta * m2 + shift * shift) / (n * n), mle_risk(design)};
}

}  // namespace ptrec
