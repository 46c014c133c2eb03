#pragma once

#include <stdexcept>

namespace ptrec {

/// An argument lies outside the mathematical domain of the function
/// (non-positive shape, probability outside [0,1], alpha outside (0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or insufficient data: empty streams, too few records, bad CSV.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The pooled-estimator risk never crosses the MLE risk for this design.
class DegenerateDesignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A regret search could not bracket an interior optimum.
class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptrec
