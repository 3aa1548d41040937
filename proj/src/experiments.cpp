#include "nomasec/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "nomasec/model.hpp"
#include "nomasec/sop_analytic.hpp"
#include "nomasec/sop_asymptotic.hpp"

namespace nomasec {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double analytic_sop(int order, int user, const SecrecyTargets& t, double alpha,
                    const SystemParams& p, const QuadratureConfig& qcfg) {
  if (order == 2) return (user == 1 ? sop_near_d2(t, alpha, p, qcfg) : sop_far_d2(t, alpha, p, qcfg)).value;
  if (order == 1) return (user == 1 ? sop_near_d1(t, alpha, p, qcfg) : sop_far_d1(t, alpha, p, qcfg)).value;
  throw validation_error("analytic outage is unavailable for D" + std::to_string(order));
}

double asymptotic_sop(int order, int user, const SecrecyTargets& t, double alpha,
                      const SystemParams& p) {
  if (order == 2) return (user == 1 ? asy_near_d2(t, alpha, p) : asy_far_d2(t, alpha, p)).value;
  if (order == 1) return (user == 1 ? asy_near_d1(t, alpha, p) : asy_far_d1(t, alpha, p)).value;
  throw validation_error("asymptotic outage is unavailable for D" + std::to_string(order));
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }
bool contains(const std::vector<Method>& v, Method m) {
  return std::find(v.begin(), v.end(), m) != v.end();
}

// Canonical cell ordering used by rows and the CSV header.
std::vector<std::tuple<Method, int, int>> cell_layout(const SweepSpec& spec) {
  std::vector<std::tuple<Method, int, int>> layout;
  for (Method m : {Method::analytic, Method::asymptotic, Method::monte_carlo}) {
    if (!contains(spec.methods, m)) continue;
    for (int o = 1; o <= 4; ++o) {
      if (!contains(spec.orders, o)) continue;
      for (int u : {1, 2}) {
        if (!contains(spec.users, u)) continue;
        layout.emplace_back(m, o, u);
      }
    }
  }
  return layout;
}

SweepRow evaluate_row(const SweepSpec& spec, const ScenarioTemplate& scenario, double alpha,
                      const QuadratureConfig& qcfg) {
  const SystemParams params = scenario.materialize();
  SweepRow row;
  row.alpha = alpha;
  row.rho_t_db = 10.0 * std::log10(params.transmit_snr);
  row.rho_r_db = 10.0 * std::log10(params.received_snr());
  row.threshold_near = scenario.targets.threshold_near;
  row.threshold_far = scenario.targets.threshold_far;
  row.beta = params.residual_interference;
  row.distance_near_m = params.distance_near_m;
  row.distance_far_m = params.distance_far_m;
  row.samples = scenario.simulation.sample_count;
  row.seed = scenario.simulation.seed;

  std::map<int, std::array<SopEstimate, 2>> mc_cache;  // one stream per order
  for (const auto& [method, order, user] : cell_layout(spec)) {
    SopEstimate est;
    switch (method) {
      case Method::analytic:
        est = {analytic_sop(order, user, scenario.targets, alpha, params, qcfg), 0.0, 0,
               Method::analytic};
        break;
      case Method::asymptotic:
        est = {asymptotic_sop(order, user, scenario.targets, alpha, params), 0.0, 0,
               Method::asymptotic};
        break;
      case Method::monte_carlo: {
        auto it = mc_cache.find(order);
        if (it == mc_cache.end())
          it = mc_cache
                   .emplace(order, estimate_sop_both(DecodingOrder::from_index(order),
                                                     scenario.targets, alpha, params,
                                                     scenario.simulation))
                   .first;
        est = it->second[user - 1];
        break;
      }
    }
    row.cells.push_back({method, order, user, est});
  }
  return row;
}

}  // namespace

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::threshold: return "threshold";
    case SweepAxis::rho_r: return "rho_r";
    case SweepAxis::alpha: return "alpha";
    case SweepAxis::d2: return "d2";
  }
  return "unknown";
}

SweepAxis sweep_axis_from_string(std::string_view name) {
  if (name == "threshold") return SweepAxis::threshold;
  if (name == "rho_r") return SweepAxis::rho_r;
  if (name == "alpha") return SweepAxis::alpha;
  if (name == "d2") return SweepAxis::d2;
  throw validation_error("unknown sweep axis '" + std::string(name) +
                         "' (expected threshold|rho_r|alpha|d2)");
}

double ScenarioTemplate::rho_t_linear() const {
  switch (snr_form) {
    case SnrForm::transmit_db:
      return std::pow(10.0, snr_db / 10.0);
    case SnrForm::received_db:
      return rho_t_from_rho_r(
          snr_db, mean_channel_gain(distance_far_m, path_loss_constant, path_loss_exponent));
    case SnrForm::power_noise_dbm:
      return std::pow(10.0, (transmit_power_dbm - noise_power_dbm) / 10.0);
  }
  throw validation_error("unknown SNR form");
}

SystemParams ScenarioTemplate::materialize() const {
  return SystemParams::make(path_loss_constant, path_loss_exponent, distance_near_m,
                            distance_far_m, rho_t_linear(), residual_interference);
}

void validate(const SweepSpec& spec) {
  if (spec.grid.empty()) throw validation_error("sweep grid must not be empty");
  for (std::size_t i = 1; i < spec.grid.size(); ++i)
    if (!(spec.grid[i] > spec.grid[i - 1]))
      throw validation_error("sweep grid must be strictly increasing");
  if (spec.methods.empty()) throw validation_error("sweep needs at least one method");
  if (spec.orders.empty()) throw validation_error("sweep needs at least one decoding order");
  if (spec.users.empty()) throw validation_error("sweep needs at least one user");
  for (int o : spec.orders)
    if (o < 1 || o > 4) throw validation_error("decoding order index must be in 1..4");
  for (int u : spec.users)
    if (u != 1 && u != 2) throw validation_error("user index must be 1 or 2");
  const bool closed_form =
      contains(spec.methods, Method::analytic) || contains(spec.methods, Method::asymptotic);
  if (closed_form && (contains(spec.orders, 3) || contains(spec.orders, 4)))
    throw validation_error("analytic/asymptotic outage is unavailable for D3 and D4");
  if (spec.axis != SweepAxis::alpha && !(spec.alpha > 0.0 && spec.alpha < 1.0))
    throw validation_error("sweep alpha must lie strictly inside (0, 1)");
  if (!spec.rho_r_db_values.empty() && spec.axis == SweepAxis::rho_r)
    throw validation_error("secondary rho_r values cannot be combined with a rho_r axis");
  if (spec.axis == SweepAxis::d2)
    for (double d : spec.grid)
      if (!(d > spec.scenario.distance_near_m))
        throw validation_error("d2 sweep entries must exceed the near-user distance");
  if (spec.axis == SweepAxis::alpha)
    for (double a : spec.grid)
      if (!(a > 0.0 && a < 1.0))
        throw validation_error("alpha sweep entries must lie strictly inside (0, 1)");
}

const SopEstimate& SweepRow::cell(Method method, int order, int user) const {
  for (const SweepCell& c : cells)
    if (c.method == method && c.order == order && c.user == user) return c.estimate;
  throw std::out_of_range("no such sweep cell");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const QuadratureConfig& qcfg) {
  validate(spec);
  std::vector<SweepRow> rows;
  const std::vector<double> outer =
      spec.rho_r_db_values.empty() ? std::vector<double>{0.0} : spec.rho_r_db_values;
  for (double rho_r_db : outer) {
    ScenarioTemplate scenario = spec.scenario;
    if (!spec.rho_r_db_values.empty()) {
      scenario.snr_form = SnrForm::received_db;
      scenario.snr_db = rho_r_db;
    }
    for (double v : spec.grid) {
      ScenarioTemplate point = scenario;
      double alpha = spec.alpha;
      switch (spec.axis) {
        case SweepAxis::threshold: point.targets = SecrecyTargets::make(v, v); break;
        case SweepAxis::rho_r:
          point.snr_form = SnrForm::received_db;
          point.snr_db = v;
          break;
        case SweepAxis::alpha: alpha = v; break;
        case SweepAxis::d2: point.distance_far_m = v; break;
      }
      rows.push_back(evaluate_row(spec, point, alpha, qcfg));
    }
  }
  return rows;
}

std::vector<SweepRow> distance_sensitivity(const SweepSpec& spec, const QuadratureConfig& qcfg) {
  if (spec.axis != SweepAxis::d2)
    throw validation_error("distance sensitivity requires a d2 sweep axis");
  return run_sweep(spec, qcfg);
}

OptimalAlpha optimal_alpha(const DecodingOrder& order, int user, const SecrecyTargets& targets,
                           const SystemParams& params, int grid_resolution,
                           const QuadratureConfig& qcfg) {
  if (grid_resolution < 11) throw std::domain_error("alpha grid resolution must be at least 11");
  if (user != 0 && user != 1 && user != 2)
    throw std::domain_error("user selector must be 1, 2, or 0 for both");
  const int o = order.index();
  if (o != 1 && o != 2)
    throw validation_error("analytic outage is unavailable for D" + std::to_string(o));

  OptimalAlpha best{0.0, SopEstimate{2.0, 0.0, 0, Method::analytic}};
  for (int i = 1; i <= grid_resolution; ++i) {
    const double alpha = static_cast<double>(i) / (grid_resolution + 1);
    double value;
    if (user == 0)
      value = std::max(analytic_sop(o, 1, targets, alpha, params, qcfg),
                       analytic_sop(o, 2, targets, alpha, params, qcfg));
    else
      value = analytic_sop(o, user, targets, alpha, params, qcfg);
    if (value < best.sop_star.value) best = {alpha, {value, 0.0, 0, Method::analytic}};
  }
  if (best.sop_star.value >= 1.0)
    throw no_feasible_alpha_error("outage probability is 1 across the whole alpha grid");
  return best;
}

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "alpha,rho_r_db,rho_t_db,threshold_near,threshold_far,beta,d1_m,d2_m,samples,seed";
  for (const auto& [m, o, u] : cell_layout(spec)) {
    out << ",sop_" << to_string(m) << "_D" << o << "_u" << u;
    if (m == Method::monte_carlo) out << ",stderr_mc_D" << o << "_u" << u;
  }
  out << "\n";
  for (const SweepRow& row : rows) {
    out << format_double(row.alpha) << ',' << format_double(row.rho_r_db) << ','
        << format_double(row.rho_t_db) << ',' << format_double(row.threshold_near) << ','
        << format_double(row.threshold_far) << ',' << format_double(row.beta) << ','
        << format_double(row.distance_near_m) << ',' << format_double(row.distance_far_m) << ','
        << row.samples << ',' << row.seed;
    for (const SweepCell& c : row.cells) {
      out << ',' << format_double(c.estimate.value);
      if (c.method == Method::monte_carlo) out << ',' << format_double(c.estimate.standard_error);
    }
    out << "\n";
  }
  return out.str();
}

ValidationReport run_validation_grid(const ScenarioTemplate& scenario,
                                     const QuadratureConfig& qcfg) {
  // beta = 0 is excluded: the D1 near-user closed form is degenerate there.
  const double alphas[] = {0.15, 0.33, 0.5, 0.7, 0.9};
  const double rho_r_dbs[] = {10.0, 15.0, 20.0, 30.0, 40.0};
  const double betas[] = {0.05, 0.1, 0.3};

  ValidationReport report;
  report.all_pass = true;
  for (double beta : betas) {
    for (double rho_r_db : rho_r_dbs) {
      ScenarioTemplate point = scenario;
      point.residual_interference = beta;
      point.snr_form = SnrForm::received_db;
      point.snr_db = rho_r_db;
      const SystemParams params = point.materialize();
      for (double alpha : alphas) {
        for (int order : {1, 2}) {
          const auto mc = estimate_sop_both(DecodingOrder::from_index(order), point.targets,
                                            alpha, params, point.simulation);
          for (int user : {1, 2}) {
            ValidationCell cell;
            cell.alpha = alpha;
            cell.rho_r_db = rho_r_db;
            cell.beta = beta;
            cell.order = order;
            cell.user = user;
            cell.analytic = analytic_sop(order, user, point.targets, alpha, params, qcfg);
            cell.asymptotic = asymptotic_sop(order, user, point.targets, alpha, params);
            cell.mc = mc[user - 1];
            cell.envelope = std::max(3.0 * cell.mc.standard_error, 2e-3);
            cell.pass = std::abs(cell.analytic - cell.mc.value) <= cell.envelope;
            report.all_pass = report.all_pass && cell.pass;
            report.cells.push_back(cell);
          }
        }
      }
    }
  }
  return report;
}

std::string validation_csv(const ValidationReport& report) {
  std::ostringstream out;
  out << "alpha,rho_r_db,beta,order,user,analytic,asymptotic,mc,mc_stderr,envelope,abs_diff,pass\n";
  for (const ValidationCell& c : report.cells) {
    out << format_double(c.alpha) << ',' << format_double(c.rho_r_db) << ','
        << format_double(c.beta) << ",D" << c.order << ',' << c.user << ','
        << format_double(c.analytic) << ',' << format_double(c.asymptotic) << ','
        << format_double(c.mc.value) << ',' << format_double(c.mc.standard_error) << ','
        << format_double(c.envelope) << ',' << format_double(std::abs(c.analytic - c.mc.value))
        << ',' << (c.pass ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace nomasec
