#include "ptrec/design.hpp"

#include <string>

#include "ptrec/errors.hpp"

namespace ptrec {

std::string_view to_string(Variant variant) {
  return variant == Variant::KnownLocation ? "known" : "locscale";
}

Variant parse_variant(std::string_view text) {
  if (text == "known" || text == "KnownLocation") return Variant::KnownLocation;
  if (text == "locscale" || text == "LocationScale") return Variant::LocationScale;
  throw InputError("unknown variant '" + std::string(text) + "' (expected known|locscale)");
}

int min_records(Variant variant) { return variant == Variant::KnownLocation ? 1 : 2; }

DesignPair::DesignPair(int n1, int n2, Variant variant) : n1_(n1), n2_(n2), variant_(variant) {
  const int need = min_records(variant);
  if (n1 < need || n2 < need) {
    throw InputError("design (" + std::to_string(n1) + ", " + std::to_string(n2) +
                     ") needs at least " + std::to_string(need) + " records per series for variant " +
                     std::string(to_string(variant)));
  }
}

}  // namespace ptrec
