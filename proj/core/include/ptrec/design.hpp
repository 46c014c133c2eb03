#pragma once

#include <string_view>

namespace ptrec {

/// Which exponential model the upper records come from.
///
/// KnownLocation: density exp(-x/theta)/theta on x > 0; the record MLE
/// X_U(n)/n satisfies 2 n theta_hat / theta ~ chi-square(2n).
/// LocationScale: unknown location eta; the MLE (X_U(n) - X_U(1))/n has
/// chi-square(2n - 2) law instead.
enum class Variant { KnownLocation, LocationScale };

std::string_view to_string(Variant variant);

/// Accepts "known" / "locscale" (and the enumerator names).  Throws InputError.
Variant parse_variant(std::string_view text);

/// Minimum record count for a variant (1 or 2).
int min_records(Variant variant);

/// The two record counts (n1, n2) together with the model variant.
class DesignPair {
 public:
  /// Throws InputError unless n1, n2 >= min_records(variant).
  DesignPair(int n1, int n2, Variant variant = Variant::KnownLocation);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  Variant variant() const { return variant_; }

  /// Pooling weight n2 / (n1 + n2).
  double lambda() const { return static_cast<double>(n2_) / (n1_ + n2_); }

  /// Gamma shape of n_i theta_hat_i / theta_i: n_i, or n_i - 1 for LocationScale.
  int shape1() const { return shape(n1_); }
  int shape2() const { return shape(n2_); }

  /// Chi-square degrees of freedom 2 * shape.
  double df1() const { return 2.0 * shape1(); }
  double df2() const { return 2.0 * shape2(); }

  friend bool operator==(const DesignPair&, const DesignPair&) = default;

 private:
  int shape(int n) const { return variant_ == Variant::KnownLocation ? n : n - 1; }

  int n1_;
  int n2_;
  Variant variant_;
};

}  // namespace ptrec
