#pragma once

#include <cstdint>
#include <limits>

namespace ptrec {

/// Counter-based generator: the state is a pure function of
/// (seed, stream, substream, draw index), so replicate r of grid point g
/// produces the same numbers regardless of which thread runs it.
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t substream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform01();

  /// Exponential with the given scale (mean), by inverse CDF.
  double exponential(double scale = 1.0);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace ptrec
