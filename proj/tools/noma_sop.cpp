// Command-line front end for the two-user untrusted-NOMA secrecy toolkit:
// single-point queries, parameter sweeps, and analytic-vs-simulation
// validation runs with CSV output.
//
// Exit codes: 0 success, 1 validation/input error, 2 quadrature convergence
// error, 3 validation-envelope failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nomasec/experiments.hpp"
#include "nomasec/model.hpp"
#include "nomasec/monte_carlo.hpp"
#include "nomasec/scenario.hpp"
#include "nomasec/sop_analytic.hpp"
#include "nomasec/sop_asymptotic.hpp"

namespace {

using namespace nomasec;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConvergence = 2;
constexpr int kExitEnvelope = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// All-or-nothing file write: the target appears only after the content is
// fully rendered.
void write_file_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw validation_error("cannot open output file '" + tmp + "'");
    out << content;
    if (!out) throw validation_error("failed writing output file '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

struct CommonArgs {
  std::string scenario_path;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::string out_path;
};

void apply_overrides(ScenarioTemplate& scenario, const CommonArgs& args) {
  if (args.samples) scenario.simulation.sample_count = *args.samples;
  if (args.seed) scenario.simulation.seed = *args.seed;
  validate(scenario.simulation);
}

bool method_selected(const std::string& method, const char* name) {
  return method == "all" || method == name;
}

int cmd_point(const CommonArgs& args, const std::string& order_name, double alpha,
              const std::string& method, bool show_realization) {
  ScenarioFile file = load_scenario(args.scenario_path);
  apply_overrides(file.scenario, args);
  const DecodingOrder order = DecodingOrder::from_string(order_name);
  const SystemParams params = file.scenario.materialize();
  const SecrecyTargets& targets = file.scenario.targets;
  const bool closed_form_order = order.index() == 1 || order.index() == 2;
  if (!closed_form_order &&
      (method == "analytic" || method == "asymptotic"))
    throw validation_error(method + " outage is unavailable for " + order.name());

  std::ostream& os = std::cout;
  os << "scenario: d1=" << fmt(params.distance_near_m) << " m, d2=" << fmt(params.distance_far_m)
     << " m, beta=" << fmt(params.residual_interference)
     << ", rho_t=" << fmt(10.0 * std::log10(params.transmit_snr))
     << " dB, rho_r=" << fmt(10.0 * std::log10(params.received_snr())) << " dB\n";
  os << "targets: R_s1_th=" << fmt(targets.threshold_near)
     << " bits, R_s2_th=" << fmt(targets.threshold_far) << " bits\n";
  os << "order=" << order.name() << " alpha=" << fmt(alpha) << "\n";

  const CaseThresholds ct = case_thresholds(targets, alpha, params);
  os << "case thresholds:\n";
  os << "  alpha_1a=" << fmt(ct.alpha_1a) << " alpha_1b=" << fmt(ct.alpha_1b)
     << " alpha_2a=" << fmt(ct.alpha_2a) << " alpha_2b=" << fmt(ct.alpha_2b) << "\n";
  os << "  alpha_1c=" << fmt(ct.alpha_1c) << " alpha_2c=" << fmt(ct.alpha_2c) << "\n";
  os << "  t1=" << fmt(ct.t1) << " t2=" << fmt(ct.t2) << " t1c=" << fmt(ct.t1c)
     << " t2c=" << fmt(ct.t2c) << "\n";

  if (show_realization) {
    CounterRng rng(file.scenario.simulation.seed, 0);
    const ChannelRealization ch = sample_channels(params, rng);
    const SinrSet sinrs = sinr_set(order, ch, alpha, params);
    const SecrecyRates rates = secrecy_rates(sinrs);
    os << "sampled realization (seed " << file.scenario.simulation.seed << "):\n";
    os << "  gain_near=" << fmt(ch.gain_near) << " gain_far=" << fmt(ch.gain_far) << "\n";
    os << "  Gamma_11=" << fmt(sinrs.g11()) << " Gamma_12=" << fmt(sinrs.g12())
       << " Gamma_21=" << fmt(sinrs.g21()) << " Gamma_22=" << fmt(sinrs.g22()) << "\n";
    os << "  R_s1=" << fmt(rates.rate_near) << " R_s2=" << fmt(rates.rate_far) << "\n";
    try {
      const PaBounds pb = pa_bounds(ch, params);
      os << "  pa_bounds: (" << fmt(pb.lower) << ", " << fmt(pb.upper) << ")\n";
    } catch (const std::domain_error& e) {
      os << "  pa_bounds: unavailable (" << e.what() << ")\n";
    }
  }

  os << "secrecy outage probability:\n";
  if (closed_form_order && method_selected(method, "analytic")) {
    const SopEstimate s1 = order.index() == 2 ? sop_near_d2(targets, alpha, params)
                                              : sop_near_d1(targets, alpha, params);
    const SopEstimate s2 = order.index() == 2 ? sop_far_d2(targets, alpha, params)
                                              : sop_far_d1(targets, alpha, params);
    os << "  analytic:   s1=" << fmt(s1.value) << " s2=" << fmt(s2.value) << "\n";
  }
  if (closed_form_order && method_selected(method, "asymptotic")) {
    const SopEstimate s1 = order.index() == 2 ? asy_near_d2(targets, alpha, params)
                                              : asy_near_d1(targets, alpha, params);
    const SopEstimate s2 = order.index() == 2 ? asy_far_d2(targets, alpha, params)
                                              : asy_far_d1(targets, alpha, params);
    os << "  asymptotic: s1=" << fmt(s1.value) << " s2=" << fmt(s2.value) << "\n";
  }
  if (method_selected(method, "mc")) {
    const auto mc = estimate_sop_both(order, targets, alpha, params, file.scenario.simulation);
    os << "  mc:         s1=" << fmt(mc[0].value) << " (stderr " << fmt(mc[0].standard_error)
       << ") s2=" << fmt(mc[1].value) << " (stderr " << fmt(mc[1].standard_error) << "), n="
       << mc[0].sample_count << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const CommonArgs& args) {
  ScenarioFile file = load_scenario(args.scenario_path);
  apply_overrides(file.scenario, args);
  if (!file.sweep) throw validation_error("scenario has no 'sweep' section");
  SweepSpec spec = *file.sweep;
  spec.scenario = file.scenario;
  const std::vector<SweepRow> rows = run_sweep(spec);
  const std::string csv = sweep_csv(spec, rows);
  if (args.out_path.empty()) {
    std::cout << csv;
  } else {
    write_file_atomically(args.out_path, csv);
    std::cerr << "wrote " << rows.size() << " rows to " << args.out_path << "\n";
  }
  return kExitOk;
}

int cmd_validate(const CommonArgs& args) {
  ScenarioFile file = load_scenario(args.scenario_path);
  apply_overrides(file.scenario, args);
  const ValidationReport report = run_validation_grid(file.scenario);
  const std::string csv = validation_csv(report);
  if (args.out_path.empty()) {
    std::cout << csv;
  } else {
    write_file_atomically(args.out_path, csv);
  }
  if (!report.all_pass) {
    std::cerr << "validation envelope failures:\n";
    std::cerr << "alpha\trho_r_db\tbeta\torder\tuser\tanalytic\tmc\tenvelope\n";
    for (const ValidationCell& c : report.cells)
      if (!c.pass)
        std::cerr << fmt(c.alpha) << '\t' << fmt(c.rho_r_db) << '\t' << fmt(c.beta) << "\tD"
                  << c.order << '\t' << c.user << '\t' << fmt(c.analytic) << '\t'
                  << fmt(c.mc.value) << '\t' << fmt(c.envelope) << "\n";
    return kExitEnvelope;
  }
  std::cerr << "all " << report.cells.size() << " validation cells within envelope\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy outage analysis for a two-user downlink untrusted-NOMA system"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string order_name = "D2";
  std::string method = "all";
  double alpha = 0.0;
  bool show_realization = false;

  CLI::App* point = app.add_subcommand(
      "point", "Case thresholds and outage probabilities at one (alpha, order)");
  point->add_option("--scenario", args.scenario_path, "Scenario JSON file")->required();
  point->add_option("--order", order_name, "Decoding order (D1..D4)");
  point->add_option("--alpha", alpha, "Power allocation for the near user")->required();
  point->add_option("--method", method, "analytic|asymptotic|mc|all");
  point->add_option("--samples", args.samples, "Monte Carlo sample count override");
  point->add_option("--seed", args.seed, "RNG seed override");
  point->add_flag("--realization", show_realization,
                  "Also print one sampled realization (SINRs, rates, PA bounds)");

  CLI::App* sweep = app.add_subcommand("sweep", "Run the scenario's sweep and emit CSV");
  sweep->add_option("--scenario", args.scenario_path, "Scenario JSON file with a sweep section")
      ->required();
  sweep->add_option("--out", args.out_path, "Output CSV path (stdout when omitted)");
  sweep->add_option("--samples", args.samples, "Monte Carlo sample count override");
  sweep->add_option("--seed", args.seed, "RNG seed override");

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "Cross-validate analytic vs Monte Carlo on a parameter grid");
  validate_cmd->add_option("--scenario", args.scenario_path, "Scenario JSON file")->required();
  validate_cmd->add_option("--out", args.out_path, "Output CSV path (stdout when omitted)");
  validate_cmd->add_option("--samples", args.samples, "Monte Carlo sample count override");
  validate_cmd->add_option("--seed", args.seed, "RNG seed override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (point->parsed()) return cmd_point(args, order_name, alpha, method, show_realization);
    if (sweep->parsed()) return cmd_sweep(args);
    return cmd_validate(args);
  } catch (const convergence_error& e) {
    std::cerr << "error: " << e.what() << " (estimate " << fmt(e.estimate()) << ", bound "
              << fmt(e.error_bound()) << ")\n";
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
