#include "nomasec/sop_asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nomasec/sop_analytic.hpp"

namespace nomasec {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("power allocation alpha must lie strictly inside (0, 1)");
}

// At high SNR the inner ratio N(y)/D(y) loses its y dependence and the
// conditional outage collapses to the constant factor exp(-n1/(d1 lam_e)).
double exponent_factor(const IntegrandCoefficients& co) {
  if (co.d1 == 0.0)
    throw degenerate_parameter_error(
        "asymptotic outage exponent is degenerate: the gain-slope coefficient vanishes");
  return std::exp(-co.n1 / (co.d1 * co.exponent_mean));
}

double bounded_case(const IntegrandCoefficients& co) {
  const double bound = co.d1 < 0.0 ? -co.d0 / co.d1 : std::numeric_limits<double>::infinity();
  const double mass = -std::expm1(-bound / co.density_mean);  // Pr{gain < bound}
  return 1.0 - mass * exponent_factor(co);
}

double unbounded_case(const IntegrandCoefficients& co) { return 1.0 - exponent_factor(co); }

SopEstimate asymptotic(double raw) { return {std::clamp(raw, 0.0, 1.0), 0.0, 0, Method::asymptotic}; }

}  // namespace

SopEstimate asy_near_d2(const SecrecyTargets& targets, double alpha, const SystemParams& params) {
  require_alpha(alpha);
  const CaseThresholds ct = case_thresholds(targets, alpha, params);
  const IntegrandCoefficients co = near_d2_coefficients(targets, alpha, params);
  if (alpha >= ct.alpha_1b) return asymptotic(unbounded_case(co));
  if (alpha >= ct.alpha_1a) return asymptotic(bounded_case(co));
  return asymptotic(1.0);
}

SopEstimate asy_far_d2(const SecrecyTargets& targets, double alpha, const SystemParams& params) {
  require_alpha(alpha);
  const CaseThresholds ct = case_thresholds(targets, alpha, params);
  const IntegrandCoefficients co = far_d2_coefficients(targets, alpha, params);
  if (alpha <= ct.alpha_2a) return asymptotic(unbounded_case(co));
  if (alpha <= ct.alpha_2b) return asymptotic(bounded_case(co));
  return asymptotic(1.0);
}

SopEstimate asy_near_d1(const SecrecyTargets& targets, double alpha, const SystemParams& params) {
  require_alpha(alpha);
  if (params.residual_interference == 0.0)
    throw degenerate_parameter_error(
        "near-user outage under D1 is undefined at beta = 0 (gain bound divides by beta)");
  const CaseThresholds ct = case_thresholds(targets, alpha, params);
  const IntegrandCoefficients co = near_d1_coefficients(targets, alpha, params);
  if (alpha >= ct.alpha_1c) return asymptotic(bounded_case(co));
  return asymptotic(1.0);
}

SopEstimate asy_far_d1(const SecrecyTargets& targets, double alpha, const SystemParams& params) {
  require_alpha(alpha);
  const CaseThresholds ct = case_thresholds(targets, alpha, params);
  const IntegrandCoefficients co = far_d1_coefficients(targets, alpha, params);
  if (alpha <= ct.alpha_2c) return asymptotic(bounded_case(co));
  return asymptotic(1.0);
}

}  // namespace nomasec
