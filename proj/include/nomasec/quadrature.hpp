#pragma once

#include <functional>

#include "nomasec/errors.hpp"

namespace nomasec {

struct QuadratureConfig {
  double relative_tolerance = 1e-8;
  double absolute_tolerance = 1e-12;
  double tail_cutoff_mean_multiples = 30.0;  // truncation point for infinite upper limits
};

void validate(const QuadratureConfig& cfg);

/// Adaptive Gauss-Kronrod (7, 15) integration of f over [lower, upper].
///
/// An infinite upper limit is truncated at lower + tail_cutoff_mean_multiples
/// * decay_mean; the caller guarantees f is dominated by exp(-y / decay_mean)
/// there, so the dropped tail is below exp(-cutoff). Subdivision stops once
/// the accumulated error estimate falls under
/// max(absolute_tolerance, relative_tolerance * |integral|); exhausting the
/// subdivision budget throws convergence_error carrying the best estimate.
double integrate_decaying(const std::function<double(double)>& f, double lower, double upper,
                          const QuadratureConfig& cfg = {}, double decay_mean = 1.0);

}  // namespace nomasec
