#pragma once

#include "nomasec/quadrature.hpp"
#include "nomasec/types.hpp"

namespace nomasec {

/// Case boundaries of the piecewise outage expressions.
///
/// alpha_* split the power-allocation axis into the integral and
/// certain-outage branches; t* are the corresponding gain bounds at which
/// the denominator of the inner probability changes sign. The t* fields
/// hold the raw formula values: outside the matching branch they may be
/// negative, and a vanishing denominator is reported as +/-infinity
/// (boundary-degenerate; the evaluators route to the adjacent case).
struct CaseThresholds {
  double alpha_1a = 0.0;  // near user, D2: below this the outage is certain
  double alpha_1b = 0.0;  // near user, D2: above this the gain bound disappears
  double alpha_2a = 0.0;  // far user, D2: below this the gain bound disappears
  double alpha_2b = 0.0;  // far user, D2: above this the outage is certain
  double alpha_1c = 0.0;  // near user, D1: below this the outage is certain
  double alpha_2c = 0.0;  // far user, D1 (= 1/Pi_2): above this the outage is certain
  double t1 = 0.0;        // near user, D2: far-gain bound
  double t2 = 0.0;        // far user, D2: near-gain bound
  double t1c = 0.0;       // near user, D1
  double t2c = 0.0;       // far user, D1
};

CaseThresholds case_thresholds(const SecrecyTargets& targets, double alpha,
                               const SystemParams& params);

/// Affine coefficients of the inner-probability ratio N(y)/D(y) for one
/// (user, order) outage integral: N(y) = n0 + n1 y, D(y) = d0 + d1 y, with
/// the conditional outage exp(-N / (D * exponent_mean)) integrated against
/// the exponential density of mean density_mean.
struct IntegrandCoefficients {
  double n0 = 0.0, n1 = 0.0;
  double d0 = 0.0, d1 = 0.0;
  double exponent_mean = 0.0;  // mean gain of the user whose outage is measured
  double density_mean = 0.0;   // mean gain of the integration variable
};

IntegrandCoefficients near_d2_coefficients(const SecrecyTargets&, double alpha, const SystemParams&);
IntegrandCoefficients far_d2_coefficients(const SecrecyTargets&, double alpha, const SystemParams&);
IntegrandCoefficients near_d1_coefficients(const SecrecyTargets&, double alpha, const SystemParams&);
IntegrandCoefficients far_d1_coefficients(const SecrecyTargets&, double alpha, const SystemParams&);

/// Exact secrecy outage probabilities under decoding order D2 via the
/// piecewise single-integral forms.
SopEstimate sop_near_d2(const SecrecyTargets& targets, double alpha, const SystemParams& params,
                        const QuadratureConfig& cfg = {});
SopEstimate sop_far_d2(const SecrecyTargets& targets, double alpha, const SystemParams& params,
                       const QuadratureConfig& cfg = {});

/// Exact outage probabilities under the conventional order D1. The
/// near-user form is undefined at beta = 0 (its gain bound divides by
/// beta) and throws degenerate_parameter_error there.
SopEstimate sop_near_d1(const SecrecyTargets& targets, double alpha, const SystemParams& params,
                        const QuadratureConfig& cfg = {});
SopEstimate sop_far_d1(const SecrecyTargets& targets, double alpha, const SystemParams& params,
                       const QuadratureConfig& cfg = {});

}  // namespace nomasec
