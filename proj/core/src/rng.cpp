#include "ptrec/rng.hpp"

#include <cmath>

namespace ptrec {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream)
    : key_(mix64(mix64(mix64(seed + kGolden) ^ (stream + kGolden)) ^ (substream * kGolden + 1))) {}

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double CounterRng::uniform01() {
  // (k + 0.5) / 2^53 lies strictly inside (0, 1).
  const std::uint64_t k = (*this)() >> 11;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
}

double CounterRng::exponential(double scale) { return -std::log(uniform01()) * scale; }

}  // namespace ptrec
