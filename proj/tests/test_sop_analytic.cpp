#include <doctest.h>

#include <cmath>
#include <random>

#include "nomasec/model.hpp"
#include "nomasec/monte_carlo.hpp"
#include "nomasec/sop_analytic.hpp"

using namespace nomasec;

namespace {

SystemParams fig2_params(double rho_r_db, double beta = 0.1) {
  const double lam2 = mean_channel_gain(100.0, 1.0, 3.0);
  return SystemParams::make(1.0, 3.0, 50.0, 100.0, rho_t_from_rho_r(rho_r_db, lam2), beta);
}

SimulationConfig mc_config(std::uint64_t samples = 1'000'000, std::uint64_t seed = 99) {
  SimulationConfig cfg;
  cfg.sample_count = samples;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("case thresholds: hand values") {
  const SystemParams p = fig2_params(10.0, 0.1);
  SUBCASE("near-user boundaries at Pi_1 = 2") {
    const CaseThresholds ct = case_thresholds(SecrecyTargets::make(1.0, 0.1), 0.5, p);
    CHECK(ct.alpha_1a == doctest::Approx(1.0 / 11.0).epsilon(1e-12));
    CHECK(ct.alpha_1b == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
    CHECK(ct.alpha_1c == doctest::Approx(ct.alpha_1a).epsilon(1e-15));
  }
  SUBCASE("far-user boundaries at Pi_2 = 2") {
    const CaseThresholds ct = case_thresholds(SecrecyTargets::make(0.5, 1.0), 0.5, p);
    CHECK(ct.alpha_2a == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    CHECK(ct.alpha_2b == doctest::Approx(1.0 / 1.1).epsilon(1e-12));
    CHECK(ct.alpha_2c == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("perfect SIC collapses the near-user boundaries") {
    const SystemParams p0 = fig2_params(10.0, 0.0);
    for (double th : {0.2, 1.0, 3.0}) {
      const CaseThresholds ct = case_thresholds(SecrecyTargets::make(th, th), 0.5, p0);
      CHECK(ct.alpha_1a == 0.0);
      CHECK(ct.alpha_1b == 0.0);
    }
  }
}

TEST_CASE("case threshold orderings over random thresholds and beta") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> beta_dist(1e-6, 1.0);
  std::uniform_real_distribution<double> rate_dist(1e-3, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const SystemParams p = fig2_params(10.0, beta_dist(rng));
    const SecrecyTargets t = SecrecyTargets::make(rate_dist(rng), rate_dist(rng));
    const CaseThresholds ct = case_thresholds(t, 0.5, p);
    CHECK(ct.alpha_1b > ct.alpha_1a);
    CHECK(ct.alpha_2b > ct.alpha_2a);
  }
}

TEST_CASE("gain-bound formula agrees with the coefficient root") {
  const SystemParams p = fig2_params(10.0);
  const SecrecyTargets t = SecrecyTargets::make(1.0, 1.0);
  const double alpha = 0.1;  // inside (alpha_1a, alpha_1b)
  const CaseThresholds ct = case_thresholds(t, alpha, p);
  const IntegrandCoefficients co = near_d2_coefficients(t, alpha, p);
  REQUIRE(co.d1 < 0.0);
  CHECK(ct.t1 == doctest::Approx(-co.d0 / co.d1).epsilon(1e-12));
  CHECK(ct.t1 > 0.0);
}

TEST_CASE("integrand coefficients: N positive, D changes sign at most once") {
  const SystemParams p = fig2_params(20.0);
  const SecrecyTargets t = SecrecyTargets::make(0.5, 0.1);
  for (double alpha : {0.05, 0.2, 0.5, 0.95}) {
    for (auto make : {near_d2_coefficients, far_d2_coefficients, near_d1_coefficients,
                      far_d1_coefficients}) {
      const IntegrandCoefficients co = make(t, alpha, p);
      CHECK(co.n0 > 0.0);
      CHECK(co.n1 > 0.0);  // N(y) > 0 for all y >= 0 when Pi > 1
      CHECK(co.exponent_mean > 0.0);
      CHECK(co.density_mean > 0.0);
    }
  }
}

TEST_CASE("certain-outage branches return exactly 1") {
  const SystemParams p = fig2_params(10.0);
  // Pi_1 = 2: alpha below alpha_1a = 1/11.
  CHECK(sop_near_d2(SecrecyTargets::make(1.0, 0.1), 0.05, p).value == 1.0);
  // Pi_2 = 2: alpha above alpha_2b = 1/1.1.
  CHECK(sop_far_d2(SecrecyTargets::make(0.5, 1.0), 0.95, p).value == 1.0);
  // D1 far user: alpha above alpha_2c = 1/Pi_2 = 0.5.
  CHECK(sop_far_d1(SecrecyTargets::make(0.5, 1.0), 0.6, p).value == 1.0);
  // D1 near user: alpha below alpha_1c.
  CHECK(sop_near_d1(SecrecyTargets::make(1.0, 0.1), 0.05, p).value == 1.0);
}

TEST_CASE("a huge threshold drives the outage to 1") {
  const SystemParams p = SystemParams::make(1.0, 3.0, 50.0, 100.0, 1e4, 0.1);
  const SecrecyTargets t = SecrecyTargets::make(20.0, 20.0);  // Pi = 2^20
  CHECK(sop_near_d2(t, 0.5, p).value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("analytic outage matches Monte Carlo (D2, threshold sweep configuration)") {
  const SecrecyTargets t = SecrecyTargets::make(0.5, 0.1);
  SUBCASE("near user at rho_r = 20 dB") {
    const SystemParams p = fig2_params(20.0);
    const SopEstimate ana = sop_near_d2(t, 0.33, p);
    const SopEstimate mc = estimate_sop(DecodingOrder::d2(), 1, t, 0.33, p, mc_config());
    CHECK(std::abs(ana.value - mc.value) <= 3.0 * mc.standard_error);
  }
  SUBCASE("far user at rho_r = 10 dB") {
    const SystemParams p = fig2_params(10.0);
    const SopEstimate ana = sop_far_d2(t, 0.33, p);
    const SopEstimate mc = estimate_sop(DecodingOrder::d2(), 2, t, 0.33, p, mc_config());
    CHECK(std::abs(ana.value - mc.value) <= 3.0 * mc.standard_error);
  }
}

TEST_CASE("analytic outage matches Monte Carlo (D1, alpha sweep configuration)") {
  const SystemParams p = fig2_params(10.0);
  const SecrecyTargets t = SecrecyTargets::make(0.5, 0.1);
  const auto mc = estimate_sop_both(DecodingOrder::d1(), t, 0.4, p, mc_config());
  const SopEstimate s1 = sop_near_d1(t, 0.4, p);
  const SopEstimate s2 = sop_far_d1(t, 0.4, p);
  CHECK(std::abs(s1.value - mc[0].value) <= 3.0 * mc[0].standard_error);
  CHECK(std::abs(s2.value - mc[1].value) <= 3.0 * mc[1].standard_error);
}

TEST_CASE("branch values agree at the case boundaries") {
  const SystemParams p = fig2_params(10.0);
  const double eps = 1e-9;
  SUBCASE("far user at alpha_2a") {
    const SecrecyTargets t = SecrecyTargets::make(0.5, 1.0);  // alpha_2a = 8/9
    const CaseThresholds ct = case_thresholds(t, 0.5, p);
    REQUIRE(ct.alpha_2a > 0.0);
    REQUIRE(ct.alpha_2a < 1.0);
    const double below = sop_far_d2(t, ct.alpha_2a - eps, p).value;
    const double above = sop_far_d2(t, ct.alpha_2a + eps, p).value;
    CHECK(std::abs(below - above) < 1e-6);
  }
  SUBCASE("near user at alpha_1b") {
    const SecrecyTargets t = SecrecyTargets::make(1.0, 0.1);  // alpha_1b = 1/9
    const CaseThresholds ct = case_thresholds(t, 0.5, p);
    const double below = sop_near_d2(t, ct.alpha_1b - eps, p).value;
    const double above = sop_near_d2(t, ct.alpha_1b + eps, p).value;
    CHECK(std::abs(below - above) < 1e-6);
  }
}

TEST_CASE("outage is non-decreasing in the threshold") {
  const SystemParams p = fig2_params(10.0);
  double prev1 = -1.0, prev2 = -1.0;
  for (int i = 0; i < 20; ++i) {
    const double th = 0.1 + i * (2.0 - 0.1) / 19.0;
    const SecrecyTargets t = SecrecyTargets::make(th, th);
    const double s1 = sop_near_d2(t, 0.33, p).value;
    const double s2 = sop_far_d2(t, 0.33, p).value;
    CHECK(s1 >= prev1 - 1e-9);
    CHECK(s2 >= prev2 - 1e-9);
    prev1 = s1;
    prev2 = s2;
  }
}

TEST_CASE("outage is non-increasing in the received SNR") {
  const SecrecyTargets t = SecrecyTargets::make(0.5, 0.1);
  double prev1 = 2.0, prev2 = 2.0;
  for (double rho_r_db : {10.0, 20.0, 30.0, 40.0}) {
    const SystemParams p = fig2_params(rho_r_db);
    const double s1 = sop_near_d2(t, 0.33, p).value;
    const double s2 = sop_far_d2(t, 0.33, p).value;
    CHECK(s1 <= prev1 + 1e-9);
    CHECK(s2 <= prev2 + 1e-9);
    prev1 = s1;
    prev2 = s2;
  }
}

TEST_CASE("all outage values stay within [0, 1]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> alpha_dist(0.01, 0.99);
  std::uniform_real_distribution<double> rate_dist(0.05, 3.0);
  std::uniform_real_distribution<double> beta_dist(0.01, 0.99);
  std::uniform_real_distribution<double> snr_dist(0.0, 40.0);
  for (int i = 0; i < 50; ++i) {
    const SystemParams p = fig2_params(snr_dist(rng), beta_dist(rng));
    const SecrecyTargets t = SecrecyTargets::make(rate_dist(rng), rate_dist(rng));
    const double alpha = alpha_dist(rng);
    for (double v : {sop_near_d2(t, alpha, p).value, sop_far_d2(t, alpha, p).value,
                     sop_near_d1(t, alpha, p).value, sop_far_d1(t, alpha, p).value}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("tolerance tightening is stable") {
  const SystemParams p = fig2_params(10.0);
  const SecrecyTargets t = SecrecyTargets::make(0.5, 0.1);
  QuadratureConfig loose;
  loose.relative_tolerance = 1e-6;
  QuadratureConfig tight;
  tight.relative_tolerance = 1e-9;
  for (double alpha : {0.1, 0.33, 0.7}) {
    CHECK(std::abs(sop_near_d2(t, alpha, p, loose).value -
                   sop_near_d2(t, alpha, p, tight).value) < 1e-6);
    CHECK(std::abs(sop_far_d2(t, alpha, p, loose).value -
                   sop_far_d2(t, alpha, p, tight).value) < 1e-6);
  }
}

TEST_CASE("D1 near-user outage is degenerate at beta = 0") {
  const SystemParams p = fig2_params(10.0, 0.0);
  const SecrecyTargets t = SecrecyTargets::make(0.5, 0.1);
  CHECK_THROWS_AS(sop_near_d1(t, 0.4, p), degenerate_parameter_error);
  CHECK_NOTHROW(sop_far_d1(t, 0.4, p));  // the far-user form carries no beta
}

TEST_CASE("alpha preconditions") {
  const SystemParams p = fig2_params(10.0);
  const SecrecyTargets t = SecrecyTargets::make(0.5, 0.1);
  CHECK_THROWS_AS(sop_near_d2(t, 0.0, p), std::domain_error);
  CHECK_THROWS_AS(sop_far_d2(t, 1.0, p), std::domain_error);
  CHECK_THROWS_AS(case_thresholds(t, -0.2, p), std::domain_error);
}
