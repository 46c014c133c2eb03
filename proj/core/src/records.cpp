#include "ptrec/records.hpp"

#include <cmath>
#include <string>

#include "ptrec/errors.hpp"

namespace ptrec {

RecordSample::RecordSample(std::vector<double> values, Variant variant)
    : values_(std::move(values)), variant_(variant) {
  if (static_cast<int>(values_.size()) < min_records(variant_)) {
    throw InputError("record sample has " + std::to_string(values_.size()) +
                     " values; variant " + std::string(to_string(variant_)) + " needs at least " +
                     std::to_string(min_records(variant_)));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InputError("record " + std::to_string(i + 1) + " is not finite");
    }
    if (i > 0 && !(values_[i] > values_[i - 1])) {
      throw InputError("records must be strictly increasing (position " + std::to_string(i + 1) +
                       ")");
    }
  }
  if (variant_ == Variant::KnownLocation && !(values_.front() > 0.0)) {
    throw InputError("known-location records must be positive");
  }
}

RecordSample extract_upper_records(std::span<const double> stream, Variant variant) {
  if (stream.empty()) throw InputError("cannot extract records from an empty stream");
  std::vector<double> out{stream.front()};
  for (double x : stream.subspan(1)) {
    if (x > out.back()) out.push_back(x);
  }
  return RecordSample(std::move(out), variant);
}

RecordSample sample_exponential_records(int n, double scale, double location, CounterRng& rng,
                                        Variant variant) {
  if (n < 1) throw DomainError("record count must be >= 1");
  if (!(scale > 0.0)) throw DomainError("scale must be positive");
  std::vector<double> values(static_cast<std::size_t>(n));
  double level = location;
  for (double& v : values) {
    level += rng.exponential(scale);
    v = level;
  }
  return RecordSample(std::move(values), variant);
}

double mle_scale(const RecordSample& sample) {
  if (sample.variant() == Variant::KnownLocation) return sample.last() / sample.n();
  if (sample.n() < 2) throw InputError("location-scale MLE needs at least 2 records");
  return (sample.last() - sample.first()) / sample.n();
}

}  // namespace ptrec
