#pragma once

// Seeded case generators for the property tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace ptrec::testing {

struct BetaCase {
  double x;
  double a;
  double b;
};

/// a, b log-uniform on [lo, hi]; x uniform on [0, 1].
inline std::vector<BetaCase> beta_cases(std::size_t count, std::uint64_t seed, double lo = 0.5,
                                        double hi = 50.0) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto shape = [&] { return lo * std::exp(unit(gen) * std::log(hi / lo)); };
  std::vector<BetaCase> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double a = shape();
    const double b = shape();
    out.push_back({unit(gen), a, b});
  }
  return out;
}

struct FCase {
  double p;
  double d1;
  double d2;
};

inline std::vector<FCase> f_cases(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> p(0.001, 0.999);
  std::uniform_real_distribution<double> logdf(std::log(1.0), std::log(200.0));
  std::vector<FCase> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back({p(gen), std::exp(logdf(gen)), std::exp(logdf(gen))});
  return out;
}

}  // namespace ptrec::testing
