#include "nomasec/sop_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nomasec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kExponentClamp = 700.0;          // exp(-x) treated as 0 beyond this
constexpr double kDenominatorFloor = 1e-14;       // |D| below this: limiting integrand value

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("power allocation alpha must lie strictly inside (0, 1)");
}

double divide_to_bound(double num, double den) {
  if (den == 0.0) {
    if (num > 0.0) return kInf;
    if (num < 0.0) return -kInf;
    return 0.0;
  }
  return num / den;
}

// Positive root of D(y) = d0 + d1 y when the slope is negative; the
// denominator keeps its sign on [0, inf) otherwise.
double gain_bound(const IntegrandCoefficients& co) {
  return co.d1 < 0.0 ? -co.d0 / co.d1 : kInf;
}

// Outage probability for one integral branch:
//   s = int_0^min(T, cutoff) (1 - exp(-N/(D lam_e))) f(y) dy + exp(-T / lam_d)
// where f is the exponential density of mean lam_d and T the gain bound
// (infinite for the unbounded branch, whose tail term vanishes). Beyond the
// root the conditional outage is certain, so the integrand limit is f(y).
double branch_outage(const IntegrandCoefficients& co, double bound, const QuadratureConfig& cfg) {
  const double lam_e = co.exponent_mean;
  const double lam_d = co.density_mean;
  const double cutoff = cfg.tail_cutoff_mean_multiples * lam_d;
  const double hi = std::min(bound, cutoff);

  auto integrand = [&co, lam_e, lam_d](double y) {
    const double den = co.d0 + co.d1 * y;
    double conditional;
    if (den <= kDenominatorFloor) {
      conditional = 1.0;
    } else {
      const double ratio = (co.n0 + co.n1 * y) / (den * lam_e);
      conditional = ratio >= kExponentClamp ? 1.0 : -std::expm1(-ratio);
    }
    return conditional * std::exp(-y / lam_d) / lam_d;
  };

  double s = hi > 0.0 ? integrate_decaying(integrand, 0.0, hi, cfg, lam_d) : 0.0;
  if (std::isfinite(bound)) {
    const double tail = bound / lam_d;
    s += tail >= kExponentClamp ? 0.0 : std::exp(-tail);
  }
  return std::clamp(s, 0.0, 1.0);
}

SopEstimate analytic(double value) { return {value, 0.0, 0, Method::analytic}; }

}  // namespace

CaseThresholds case_thresholds(const SecrecyTargets& targets, double alpha,
                               const SystemParams& params) {
  require_alpha(alpha);
  const double pi1 = targets.pi_near, pi2 = targets.pi_far;
  const double b = params.residual_interference;
  const double rho = params.transmit_snr;
  const double a = alpha, om = 1.0 - alpha;

  CaseThresholds ct;
  ct.alpha_1a = b * (pi1 - 1.0) / (1.0 + b * (pi1 - 1.0));
  ct.alpha_1b = divide_to_bound(b * (pi1 - 1.0), 1.0 - b);
  ct.alpha_2a = divide_to_bound(1.0 - pi2 * b, 1.0 - b);
  ct.alpha_2b = 1.0 / (1.0 + b * (pi2 - 1.0));
  ct.alpha_1c = ct.alpha_1a;
  ct.alpha_2c = 1.0 / pi2;

  ct.t1 = divide_to_bound(a - (pi1 - 1.0) * b * om,
                          om * rho * ((pi1 - 1.0) * b * om + a * pi1 * b - a));
  ct.t2 = divide_to_bound(om - (pi2 - 1.0) * b * a,
                          a * rho * ((pi2 - 1.0) * b * a + om * pi2 * b - om));
  ct.t1c = divide_to_bound(a - (pi1 - 1.0) * b * om,
                           om * rho * b * ((pi1 - 1.0) * b * om + a * (pi1 - 1.0)));
  ct.t2c = divide_to_bound(om - (pi2 - 1.0) * a,
                           a * rho * ((pi2 - 1.0) * a + om * (pi2 - 1.0)));
  return ct;
}

IntegrandCoefficients near_d2_coefficients(const SecrecyTargets& targets, double alpha,
                                           const SystemParams& params) {
  const double pi1 = targets.pi_near;
  const double b = params.residual_interference;
  const double rho = params.transmit_snr;
  const double a = alpha, om = 1.0 - alpha;
  IntegrandCoefficients co;
  co.n0 = pi1 - 1.0;
  co.n1 = (pi1 - 1.0) * om * rho + a * rho * pi1;
  co.d0 = a * rho - (pi1 - 1.0) * b * om * rho;
  co.d1 = om * rho * rho * (a - (pi1 - 1.0) * b * om - pi1 * b * a);
  co.exponent_mean = params.mean_gain_near;
  co.density_mean = params.mean_gain_far;
  return co;
}

IntegrandCoefficients far_d2_coefficients(const SecrecyTargets& targets, double alpha,
                                          const SystemParams& params) {
  const double pi2 = targets.pi_far;
  const double b = params.residual_interference;
  const double rho = params.transmit_snr;
  const double a = alpha, om = 1.0 - alpha;
  IntegrandCoefficients co;
  co.n0 = pi2 - 1.0;
  co.n1 = (pi2 - 1.0) * a * rho + om * rho * pi2;
  co.d0 = om * rho - (pi2 - 1.0) * b * a * rho;
  co.d1 = a * rho * rho * (om - (pi2 - 1.0) * b * a - pi2 * b * om);
  co.exponent_mean = params.mean_gain_far;
  co.density_mean = params.mean_gain_near;
  return co;
}

IntegrandCoefficients near_d1_coefficients(const SecrecyTargets& targets, double alpha,
                                           const SystemParams& params) {
  const double pi1 = targets.pi_near;
  const double b = params.residual_interference;
  const double rho = params.transmit_snr;
  const double a = alpha, om = 1.0 - alpha;
  IntegrandCoefficients co;
  co.n0 = pi1 - 1.0;
  co.n1 = (pi1 - 1.0) * b * om * rho + a * rho * pi1;
  co.d0 = a * rho - (pi1 - 1.0) * b * om * rho;
  co.d1 = b * om * rho * rho * (a - (pi1 - 1.0) * b * om - pi1 * a);
  co.exponent_mean = params.mean_gain_near;
  co.density_mean = params.mean_gain_far;
  return co;
}

IntegrandCoefficients far_d1_coefficients(const SecrecyTargets& targets, double alpha,
                                          const SystemParams& params) {
  const double pi2 = targets.pi_far;
  const double rho = params.transmit_snr;
  const double a = alpha, om = 1.0 - alpha;
  IntegrandCoefficients co;
  co.n0 = pi2 - 1.0;
  co.n1 = (pi2 - 1.0) * a * rho + om * rho * pi2;
  co.d0 = om * rho - (pi2 - 1.0) * a * rho;
  co.d1 = a * rho * rho * (om - (pi2 - 1.0) * a - pi2 * om);
  co.exponent_mean = params.mean_gain_far;
  co.density_mean = params.mean_gain_near;
  return co;
}

SopEstimate sop_near_d2(const SecrecyTargets& targets, double alpha, const SystemParams& params,
                        const QuadratureConfig& cfg) {
  require_alpha(alpha);
  const CaseThresholds ct = case_thresholds(targets, alpha, params);
  const IntegrandCoefficients co = near_d2_coefficients(targets, alpha, params);
  if (alpha >= ct.alpha_1b) return analytic(branch_outage(co, kInf, cfg));
  if (alpha >= ct.alpha_1a) return analytic(branch_outage(co, gain_bound(co), cfg));
  return analytic(1.0);
}

SopEstimate sop_far_d2(const SecrecyTargets& targets, double alpha, const SystemParams& params,
                       const QuadratureConfig& cfg) {
  require_alpha(alpha);
  const CaseThresholds ct = case_thresholds(targets, alpha, params);
  const IntegrandCoefficients co = far_d2_coefficients(targets, alpha, params);
  if (alpha <= ct.alpha_2a) return analytic(branch_outage(co, kInf, cfg));
  if (alpha <= ct.alpha_2b) return analytic(branch_outage(co, gain_bound(co), cfg));
  return analytic(1.0);
}

SopEstimate sop_near_d1(const SecrecyTargets& targets, double alpha, const SystemParams& params,
                        const QuadratureConfig& cfg) {
  require_alpha(alpha);
  if (params.residual_interference == 0.0)
    throw degenerate_parameter_error(
        "near-user outage under D1 is undefined at beta = 0 (gain bound divides by beta)");
  const CaseThresholds ct = case_thresholds(targets, alpha, params);
  const IntegrandCoefficients co = near_d1_coefficients(targets, alpha, params);
  if (alpha >= ct.alpha_1c) return analytic(branch_outage(co, gain_bound(co), cfg));
  return analytic(1.0);
}

SopEstimate sop_far_d1(const SecrecyTargets& targets, double alpha, const SystemParams& params,
                       const QuadratureConfig& cfg) {
  require_alpha(alpha);
  const CaseThresholds ct = case_thresholds(targets, alpha, params);
  const IntegrandCoefficients co = far_d1_coefficients(targets, alpha, params);
  if (alpha <= ct.alpha_2c) return analytic(branch_outage(co, gain_bound(co), cfg));
  return analytic(1.0);
}

}  // namespace nomasec
