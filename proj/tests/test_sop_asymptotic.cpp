#include <doctest.h>

#include <cmath>

#include "nomasec/model.hpp"
#include "nomasec/sop_analytic.hpp"
#include "nomasec/sop_asymptotic.hpp"

using namespace nomasec;

namespace {

SystemParams params_at(double rho_r_db, double beta = 0.1) {
  const double lam2 = mean_channel_gain(100.0, 1.0, 3.0);
  return SystemParams::make(1.0, 3.0, 50.0, 100.0, rho_t_from_rho_r(rho_r_db, lam2), beta);
}

}  // namespace

TEST_CASE("certain-outage branches return exactly 1") {
  const SystemParams p = params_at(40.0);
  CHECK(asy_near_d2(SecrecyTargets::make(1.0, 0.1), 0.05, p).value == 1.0);
  CHECK(asy_far_d2(SecrecyTargets::make(0.5, 1.0), 0.95, p).value == 1.0);
  CHECK(asy_far_d1(SecrecyTargets::make(0.5, 1.0), 0.6, p).value == 1.0);  // alpha mirrors 1/Pi_2
}

TEST_CASE("bounded-case value equals the written-out product form") {
  const SystemParams p = params_at(20.0);
  const SecrecyTargets t = SecrecyTargets::make(1.0, 0.1);  // Pi_1 = 2
  const double alpha = 0.1;                                 // inside (1/11, 1/9)
  const CaseThresholds ct = case_thresholds(t, alpha, p);
  REQUIRE(ct.alpha_1a < alpha);
  REQUIRE(alpha < ct.alpha_1b);

  const double pi1 = t.pi_near, b = p.residual_interference, rho = p.transmit_snr;
  const double om = 1.0 - alpha;
  const double denominator = (alpha * rho * rho * om - (pi1 - 1.0) * om * om * b * rho * rho -
                              pi1 * b * alpha * om * rho * rho) *
                             p.mean_gain_near;
  const double numerator = -((pi1 - 1.0) * om * rho + alpha * rho * pi1);
  const double expected =
      1.0 - (1.0 - std::exp(-ct.t1 / p.mean_gain_far)) * std::exp(numerator / denominator);

  CHECK(asy_near_d2(t, alpha, p).value ==
        doctest::Approx(std::clamp(expected, 0.0, 1.0)).epsilon(1e-13));
}

TEST_CASE("asymptotic matches analytic at high SNR") {
  const SystemParams p = params_at(40.0);
  SUBCASE("D2 near user") {
    const SecrecyTargets t = SecrecyTargets::make(0.5, 0.5);
    CHECK(std::abs(asy_near_d2(t, 0.5, p).value - sop_near_d2(t, 0.5, p).value) <= 1e-2);
  }
  SUBCASE("D2 far user") {
    const SecrecyTargets t = SecrecyTargets::make(0.5, 0.5);
    CHECK(std::abs(asy_far_d2(t, 0.5, p).value - sop_far_d2(t, 0.5, p).value) <= 1e-2);
  }
  SUBCASE("D1 near user (alpha = 0.3, Pi_1 = 2)") {
    const SecrecyTargets t = SecrecyTargets::make(1.0, 0.5);
    const CaseThresholds ct = case_thresholds(t, 0.3, p);
    REQUIRE(ct.alpha_1c == doctest::Approx(1.0 / 11.0).epsilon(1e-12));
    CHECK(std::abs(asy_near_d1(t, 0.3, p).value - sop_near_d1(t, 0.3, p).value) <= 1e-2);
  }
  SUBCASE("D1 far user") {
    const SecrecyTargets t = SecrecyTargets::make(0.5, 0.5);
    CHECK(std::abs(asy_far_d1(t, 0.5, p).value - sop_far_d1(t, 0.5, p).value) <= 1e-2);
  }
}

TEST_CASE("D1 near-user case boundary coincides with alpha_1a") {
  const SystemParams p = params_at(40.0);
  const CaseThresholds ct = case_thresholds(SecrecyTargets::make(1.0, 0.1), 0.5, p);
  CHECK(ct.alpha_1c == doctest::Approx(1.0 / 11.0).epsilon(1e-14));
  CHECK(ct.alpha_1c == ct.alpha_1a);
}

TEST_CASE("approximation gap shrinks when the transmit SNR doubles") {
  const SecrecyTargets t = SecrecyTargets::make(0.5, 0.5);
  SystemParams p = params_at(30.0);
  double prev_gap = 2.0;
  for (int step = 0; step < 4; ++step) {
    const double gap = std::abs(asy_far_d2(t, 0.5, p).value - sop_far_d2(t, 0.5, p).value);
    CHECK(gap <= prev_gap);
    prev_gap = gap;
    p = SystemParams::make(p.path_loss_constant, p.path_loss_exponent, p.distance_near_m,
                           p.distance_far_m, 2.0 * p.transmit_snr, p.residual_interference);
  }
}

TEST_CASE("exponent scales exactly as 1/rho_t under doubling") {
  // The closed-form exponent is -n1 / (d1 lam): n1 doubles and d1 quadruples
  // when rho_t doubles, both exactly in binary floating point, so the
  // product rho_t * exponent is invariant to machine precision.
  const SecrecyTargets t = SecrecyTargets::make(0.5, 0.5);
  const SystemParams p1 = params_at(30.0);
  const SystemParams p2 = SystemParams::make(1.0, 3.0, 50.0, 100.0, 2.0 * p1.transmit_snr, 0.1);
  for (auto make : {near_d2_coefficients, far_d2_coefficients, near_d1_coefficients,
                    far_d1_coefficients}) {
    const IntegrandCoefficients a = make(t, 0.5, p1);
    const IntegrandCoefficients b = make(t, 0.5, p2);
    const double exponent_a = -a.n1 / (a.d1 * a.exponent_mean);
    const double exponent_b = -b.n1 / (b.d1 * b.exponent_mean);
    CHECK(2.0 * exponent_b == doctest::Approx(exponent_a).epsilon(1e-15));
  }
}

TEST_CASE("raw values outside [0, 1] are clamped") {
  // Low-SNR bounded case where the product form exceeds 1.
  const SystemParams p = SystemParams::make(1.0, 3.0, 1.0, 1.0, 1.0, 0.1);
  const SecrecyTargets t = SecrecyTargets::make(1.0, 1.0);  // Pi_1 = 2
  const double alpha = 0.1;                                 // inside (1/11, 1/9)
  const SopEstimate s = asy_near_d2(t, alpha, p);
  CHECK(s.value == 0.0);
}

TEST_CASE("degenerate denominators are rejected") {
  const SystemParams p = params_at(30.0);
  const SecrecyTargets t = SecrecyTargets::make(1.0, 0.1);
  const CaseThresholds ct = case_thresholds(t, 0.5, p);
  // Exactly at alpha_1b the slope coefficient vanishes.
  CHECK_THROWS_AS(asy_near_d2(t, ct.alpha_1b, p), degenerate_parameter_error);
  // beta = 0 degenerates the D1 near-user form.
  const SystemParams p0 = params_at(30.0, 0.0);
  CHECK_THROWS_AS(asy_near_d1(t, 0.4, p0), degenerate_parameter_error);
}
