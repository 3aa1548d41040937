#pragma once

#include "nomasec/types.hpp"

namespace nomasec {

/// Closed-form high-SNR outage approximations. The case boundaries are the
/// same CaseThresholds used by the exact forms, so exact and asymptotic
/// evaluations always agree on the active branch. Raw values are clamped to
/// [0, 1]; outside the high-SNR regime the approximation can stray.
/// A vanishing denominator in the exponent throws degenerate_parameter_error.
SopEstimate asy_near_d2(const SecrecyTargets& targets, double alpha, const SystemParams& params);
SopEstimate asy_far_d2(const SecrecyTargets& targets, double alpha, const SystemParams& params);
SopEstimate asy_near_d1(const SecrecyTargets& targets, double alpha, const SystemParams& params);
SopEstimate asy_far_d1(const SecrecyTargets& targets, double alpha, const SystemParams& params);

}  // namespace nomasec
