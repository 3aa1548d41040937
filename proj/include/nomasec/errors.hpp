#pragma once

#include <stdexcept>
#include <string>

namespace nomasec {

// Scenario / spec validation failure (bad field, unknown key, missing value).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Channel-gain ordering violated where an operation requires gain_near >= gain_far > 0.
class ordering_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A parameter combination makes the requested expression undefined
// (e.g. PA bounds at beta = 1, conventional-order near-user outage at beta = 0).
class degenerate_parameter_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Grid search found no power allocation with outage probability below one.
class no_feasible_alpha_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature ran out of subdivision budget. Carries the best
// estimate reached and the corresponding error bound.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const { return estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

}  // namespace nomasec
