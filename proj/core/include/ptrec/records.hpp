#pragma once

#include <span>
#include <vector>

#include "ptrec/design.hpp"
#include "ptrec/rng.hpp"

namespace ptrec {

/// Upper record values X_U(1) < ... < X_U(n) of one series.
class RecordSample {
 public:
  /// Throws InputError unless values are strictly increasing, there are at
  /// least min_records(variant) of them, and (KnownLocation) all are > 0.
  RecordSample(std::vector<double> values, Variant variant = Variant::KnownLocation);

  const std::vector<double>& values() const { return values_; }
  int n() const { return static_cast<int>(values_.size()); }
  Variant variant() const { return variant_; }
  double first() const { return values_.front(); }
  double last() const { return values_.back(); }

 private:
  std::vector<double> values_;
  Variant variant_;
};

/// Entries strictly greater than every earlier entry; the first is always kept.
/// A repeated maximum is not a new record.  Throws InputError on empty input.
RecordSample extract_upper_records(std::span<const double> stream,
                                   Variant variant = Variant::KnownLocation);

/// n records of a location + Exp(scale) sequence, drawn as location plus
/// cumulative sums of n exponential spacings.
RecordSample sample_exponential_records(int n, double scale, double location, CounterRng& rng,
                                        Variant variant = Variant::KnownLocation);

/// Record MLE of the scale: X_U(n)/n, or (X_U(n) - X_U(1))/n for LocationScale.
double mle_scale(const RecordSample& sample);

}  // namespace ptrec
