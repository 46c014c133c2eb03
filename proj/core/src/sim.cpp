#include "ptrec/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "ptrec/errors.hpp"
#include "ptrec/estimators.hpp"
#include "ptrec/records.hpp"
#include "ptrec/rng.hpp"

namespace ptrec {

namespace {

constexpr std::int64_t kChunk = 2048;
constexpr std::uint64_t kOracleStream = 0x6f7261636c65ULL;

// Raw power sums of the errors e of one estimator, plus the cross moment with
// the MLE's squared error for the efficiency delta method.
struct Sums {
  double e = 0.0;
  double e2 = 0.0;
  double e4 = 0.0;
  double e2_mle2 = 0.0;

  void add(double err, double mle_err2) {
    const double sq = err * err;
    e += err;
    e2 += sq;
    e4 += sq * sq;
    e2_mle2 += sq * mle_err2;
  }
  void merge(const Sums& o) {
    e += o.e;
    e2 += o.e2;
    e4 += o.e4;
    e2_mle2 += o.e2_mle2;
  }
};

using ChunkSums = std::array<Sums, 3>;  // mle, pt, shrink

double sample_var(double sum, double sum_sq, double n) {
  if (n < 2) return 0.0;
  return std::max(0.0, (sum_sq - sum * sum / n) / (n - 1));
}

EstimatorStats summarize(const Sums& s, const Sums& mle, double n) {
  EstimatorStats out;
  out.bias = s.e / n;
  out.bias_se = std::sqrt(sample_var(s.e, s.e2, n) / n);
  out.mse = s.e2 / n;
  out.mse_se = std::sqrt(sample_var(s.e2, s.e4, n) / n);
  const double x = mle.e2 / n;  // MSE of theta1_hat
  const double y = out.mse;
  if (y > 0.0) {
    out.efficiency = x / y;
    const double var_x = sample_var(mle.e2, mle.e4, n);
    const double var_y = sample_var(s.e2, s.e4, n);
    const double cov = n > 1 ? (s.e2_mle2 - mle.e2 * s.e2 / n) / (n - 1) : 0.0;
    const double v = (var_x / (y * y) + x * x * var_y / (y * y * y * y) - 2.0 * x * cov / (y * y * y)) / n;
    out.efficiency_se = std::sqrt(std::max(0.0, v));
  } else {
    out.efficiency = 1.0;
    out.efficiency_se = 0.0;
  }
  return out;
}

std::int64_t chunk_count(std::int64_t replicates) { return (replicates + kChunk - 1) / kChunk; }

}  // namespace

void SimConfig::validate() const {
  if (!(theta1 > 0.0) || !std::isfinite(theta1)) throw DomainError("theta1 must be positive");
  if (theta2_grid.empty()) throw InputError("theta2 grid is empty");
  for (double t : theta2_grid) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("theta2 grid values must be positive");
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("k must lie in [0, 1]");
  if (replicates < 1) throw DomainError("replicates must be >= 1");
}

McReport mc_compare(const SimConfig& config) {
  config.validate();
  const DesignPair& design = config.design;
  const CriticalValues cv = critical_values(design, config.alpha);
  const std::int64_t chunks = chunk_count(config.replicates);
  const std::size_t grid = config.theta2_grid.size();
  std::vector<ChunkSums> partial(grid * static_cast<std::size_t>(chunks));

  detail::parallel_for(partial.size(), config.threads, [&](std::size_t task) {
    const std::size_t g = task / static_cast<std::size_t>(chunks);
    const std::int64_t c = static_cast<std::int64_t>(task % static_cast<std::size_t>(chunks));
    const double theta2 = config.theta2_grid[g];
    const std::int64_t begin = c * kChunk;
    const std::int64_t end = std::min(config.replicates, begin + kChunk);
    ChunkSums sums{};
    for (std::int64_t r = begin; r < end; ++r) {
      CounterRng rng(config.seed, g, static_cast<std::uint64_t>(r));
      const RecordSample x =
          sample_exponential_records(design.n1(), config.theta1, 0.0, rng, design.variant());
      const RecordSample y =
          sample_exponential_records(design.n2(), theta2, 0.0, rng, design.variant());
      const EstimationInput input{mle_scale(x), mle_scale(y), design};
      const double t_mle = input.theta1_hat;
      const double t_pt = preliminary_test(input, cv).value;
      const double t_s = shrinkage(input, cv, config.k).value;
      const double e_mle = (t_mle - config.theta1) / config.theta1;
      const double e_pt = (t_pt - config.theta1) / config.theta1;
      const double e_s = (t_s - config.theta1) / config.theta1;
      const double mle2 = e_mle * e_mle;
      sums[0].add(e_mle, mle2);
      sums[1].add(e_pt, mle2);
      sums[2].add(e_s, mle2);
    }
    partial[task] = sums;
  });

  McReport report{config, {}};
  const double n = static_cast<double>(config.replicates);
  for (std::size_t g = 0; g < grid; ++g) {
    ChunkSums total{};
    for (std::int64_t c = 0; c < chunks; ++c) {
      const ChunkSums& part = partial[g * static_cast<std::size_t>(chunks) + static_cast<std::size_t>(c)];
      for (std::size_t e = 0; e < 3; ++e) total[e].merge(part[e]);
    }
    McRow row{config.theta2_grid[g], {}, {}, {}};
    row.mle = summarize(total[0], total[0], n);
    row.pt = summarize(total[1], total[0], n);
    row.shrink = summarize(total[2], total[0], n);
    // Errors were taken relative to theta1; report bias and MSE in original units.
    for (EstimatorStats* s : {&row.mle, &row.pt, &row.shrink}) {
      s->bias *= config.theta1;
      s->bias_se *= config.theta1;
      s->mse *= config.theta1 * config.theta1;
      s->mse_se *= config.theta1 * config.theta1;
    }
    report.rows.push_back(row);
  }
  return report;
}

OracleEstimate mc_oracle_risk(const DesignPair& design, double delta, double alpha, double k,
                              std::int64_t replicates, std::uint64_t seed, int threads) {
  if (!(delta > 0.0) || !std::isfinite(delta)) throw DomainError("delta must be positive");
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("k must lie in [0, 1]");
  if (replicates < 1) throw DomainError("replicates must be >= 1");
  const CriticalValues cv = critical_values(design, alpha);
  const std::int64_t chunks = chunk_count(replicates);
  std::vector<std::array<double, 2>> partial(static_cast<std::size_t>(chunks));

  detail::parallel_for(partial.size(), threads, [&](std::size_t c) {
    const std::int64_t begin = static_cast<std::int64_t>(c) * kChunk;
    const std::int64_t end = std::min(replicates, begin + kChunk);
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::int64_t r = begin; r < end; ++r) {
      CounterRng rng(seed, kOracleStream, static_cast<std::uint64_t>(r));
      double g1 = 0.0;
      for (int i = 0; i < design.shape1(); ++i) g1 += rng.exponential();
      double g2 = 0.0;
      for (int i = 0; i < design.shape2(); ++i) g2 += rng.exponential();
      const EstimationInput input{g1 / design.n1(), delta * g2 / design.n2(), design};
      const double t = shrinkage(input, cv, k).value;
      const double loss = (t - 1.0) * (t - 1.0);
      s1 += loss;
      s2 += loss * loss;
    }
    partial[c] = {s1, s2};
  });

  double s1 = 0.0;
  double s2 = 0.0;
  for (const auto& p : partial) {
    s1 += p[0];
    s2 += p[1];
  }
  const double n = static_cast<double>(replicates);
  return {s1 / n, std::sqrt(sample_var(s1, s2, n) / n)};
}

}  // namespace ptrec
