#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nomasec/monte_carlo.hpp"
#include "nomasec/quadrature.hpp"
#include "nomasec/types.hpp"

namespace nomasec {

enum class SweepAxis { threshold, rho_r, alpha, d2 };

std::string to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(std::string_view name);

enum class SnrForm { transmit_db, received_db, power_noise_dbm };

/// Scenario description that remembers how the SNR was specified, so sweeps
/// over distance or received SNR re-derive the transmit SNR correctly.
struct ScenarioTemplate {
  double path_loss_constant = 1.0;
  double path_loss_exponent = 3.0;
  double distance_near_m = 50.0;
  double distance_far_m = 100.0;
  double residual_interference = 0.1;
  SnrForm snr_form = SnrForm::received_db;
  double snr_db = 10.0;                // transmit_db / received_db forms
  double transmit_power_dbm = -20.0;   // power_noise_dbm form
  double noise_power_dbm = -90.0;
  SecrecyTargets targets = SecrecyTargets::make(0.5, 0.1);
  SimulationConfig simulation;

  double rho_t_linear() const;
  SystemParams materialize() const;
};

struct SweepSpec {
  ScenarioTemplate scenario;
  SweepAxis axis = SweepAxis::threshold;
  std::vector<double> grid;                 // strictly increasing, non-empty
  std::vector<double> rho_r_db_values;      // optional secondary axis (not with axis == rho_r)
  double alpha = 0.33;                      // fixed PA unless axis == alpha
  std::vector<Method> methods;
  std::vector<int> orders;                  // 1..4
  std::vector<int> users;                   // 1, 2
};

void validate(const SweepSpec& spec);

struct SweepCell {
  Method method;
  int order;
  int user;
  SopEstimate estimate;
};

struct SweepRow {
  double alpha = 0.0;
  double rho_r_db = 0.0;
  double rho_t_db = 0.0;
  double threshold_near = 0.0;
  double threshold_far = 0.0;
  double beta = 0.0;
  double distance_near_m = 0.0;
  double distance_far_m = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<SweepCell> cells;  // canonical (method, order, user) order

  const SopEstimate& cell(Method method, int order, int user) const;
};

/// Evaluates every requested (method, order, user) combination at every grid
/// point. Rows are ordered by secondary value (when present), then by grid
/// value. Deterministic for a fixed spec.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const QuadratureConfig& qcfg = {});

/// d2 sweep at fixed alpha; every grid entry must exceed the near distance.
std::vector<SweepRow> distance_sensitivity(const SweepSpec& spec, const QuadratureConfig& qcfg = {});

struct OptimalAlpha {
  double alpha_star = 0.0;
  SopEstimate sop_star;
};

/// Grid search over alpha in (0, 1) for the analytic outage minimum.
/// user 1 or 2 selects that user's outage; user 0 minimizes max(s1, s2).
/// Orders D1 and D2 only (no analytic form exists for D3/D4). Ties break
/// toward smaller alpha; an all-ones grid throws no_feasible_alpha_error.
OptimalAlpha optimal_alpha(const DecodingOrder& order, int user, const SecrecyTargets& targets,
                           const SystemParams& params, int grid_resolution,
                           const QuadratureConfig& qcfg = {});

/// CSV rendering; full-precision cells, fixed header, deterministic order.
std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);

struct ValidationCell {
  double alpha = 0.0;
  double rho_r_db = 0.0;
  double beta = 0.0;
  int order = 0;
  int user = 0;
  double analytic = 0.0;
  double asymptotic = 0.0;
  SopEstimate mc;
  double envelope = 0.0;  // max(3 * stderr, 2e-3)
  bool pass = false;      // |analytic - mc| <= envelope
};

struct ValidationReport {
  std::vector<ValidationCell> cells;
  bool all_pass = false;
};

/// Cross-validation grid (alpha x rho_r x beta, orders D1/D2, both users):
/// the analytic value must match Monte Carlo within max(3 stderr, 2e-3) in
/// every cell. Asymptotic values are reported alongside for reference.
ValidationReport run_validation_grid(const ScenarioTemplate& scenario,
                                     const QuadratureConfig& qcfg = {});

std::string validation_csv(const ValidationReport& report);

}  // namespace nomasec
