#include "nomasec/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace nomasec {

namespace {

using json = nlohmann::ordered_json;

void expect_keys(const json& obj, const std::string& section,
                 std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) throw validation_error("unknown key '" + section + "." + key + "'");
  }
}

double require_number(const json& obj, const std::string& section, const char* key) {
  if (!obj.contains(key)) throw validation_error("missing key '" + section + "." + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) throw validation_error("'" + section + "." + key + "' must be a number");
  return v.get<double>();
}

double number_or(const json& obj, const std::string& section, const char* key, double fallback) {
  return obj.contains(key) ? require_number(obj, section, key) : fallback;
}

std::uint64_t require_unsigned(const json& obj, const std::string& section, const char* key,
                               std::uint64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_unsigned())
    throw validation_error("'" + section + "." + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

ScenarioTemplate parse_template(const json& root) {
  ScenarioTemplate t;

  if (!root.contains("system")) throw validation_error("missing 'system' section");
  const json& sys = root.at("system");
  expect_keys(sys, "system",
              {"path_loss_constant", "path_loss_exponent", "distance_near_m", "distance_far_m",
               "residual_interference", "transmit_snr_db", "received_snr_db",
               "transmit_power_dbm", "noise_power_dbm"});
  t.path_loss_constant = number_or(sys, "system", "path_loss_constant", 1.0);
  t.path_loss_exponent = number_or(sys, "system", "path_loss_exponent", 3.0);
  t.distance_near_m = require_number(sys, "system", "distance_near_m");
  t.distance_far_m = require_number(sys, "system", "distance_far_m");
  t.residual_interference = require_number(sys, "system", "residual_interference");

  const bool has_tx = sys.contains("transmit_snr_db");
  const bool has_rx = sys.contains("received_snr_db");
  const bool has_dbm = sys.contains("transmit_power_dbm") || sys.contains("noise_power_dbm");
  const int forms = (has_tx ? 1 : 0) + (has_rx ? 1 : 0) + (has_dbm ? 1 : 0);
  if (forms != 1)
    throw validation_error(
        "exactly one SNR form is required: transmit_snr_db, received_snr_db, or the "
        "transmit_power_dbm/noise_power_dbm pair");
  if (has_tx) {
    t.snr_form = SnrForm::transmit_db;
    t.snr_db = require_number(sys, "system", "transmit_snr_db");
  } else if (has_rx) {
    t.snr_form = SnrForm::received_db;
    t.snr_db = require_number(sys, "system", "received_snr_db");
  } else {
    t.snr_form = SnrForm::power_noise_dbm;
    t.transmit_power_dbm = require_number(sys, "system", "transmit_power_dbm");
    t.noise_power_dbm = require_number(sys, "system", "noise_power_dbm");
  }

  if (!root.contains("targets")) throw validation_error("missing 'targets' section");
  const json& tg = root.at("targets");
  expect_keys(tg, "targets", {"threshold_near_bits", "threshold_far_bits"});
  try {
    t.targets = SecrecyTargets::make(require_number(tg, "targets", "threshold_near_bits"),
                                     require_number(tg, "targets", "threshold_far_bits"));
  } catch (const std::domain_error& e) {
    throw validation_error(std::string("targets: ") + e.what());
  }

  if (root.contains("simulation")) {
    const json& sim = root.at("simulation");
    expect_keys(sim, "simulation", {"samples", "seed", "partitions"});
    t.simulation.sample_count = require_unsigned(sim, "simulation", "samples", 1'000'000);
    t.simulation.seed = require_unsigned(sim, "simulation", "seed", 424242);
    const std::uint64_t parts = require_unsigned(sim, "simulation", "partitions", 64);
    if (parts == 0 || parts > 0xffffffffull)
      throw validation_error("'simulation.partitions' must be in 1..2^32-1");
    t.simulation.partition_count = static_cast<std::uint32_t>(parts);
  }

  try {
    validate(t.simulation);
    t.materialize();  // runs the SystemParams invariants
  } catch (const std::domain_error& e) {
    throw validation_error(std::string("system: ") + e.what());
  }
  return t;
}

std::vector<double> parse_grid(const json& sweep) {
  if (!sweep.contains("grid")) throw validation_error("missing key 'sweep.grid'");
  const json& g = sweep.at("grid");
  std::vector<double> grid;
  if (g.is_array()) {
    for (const json& v : g) {
      if (!v.is_number()) throw validation_error("'sweep.grid' entries must be numbers");
      grid.push_back(v.get<double>());
    }
  } else if (g.is_object()) {
    expect_keys(g, "sweep.grid", {"from", "to", "points"});
    const double from = require_number(g, "sweep.grid", "from");
    const double to = require_number(g, "sweep.grid", "to");
    const std::uint64_t points = require_unsigned(g, "sweep.grid", "points", 0);
    if (points < 1) throw validation_error("'sweep.grid.points' must be at least 1");
    if (points == 1) {
      grid.push_back(from);
    } else {
      for (std::uint64_t i = 0; i < points; ++i)
        grid.push_back(from + (to - from) * static_cast<double>(i) /
                                  static_cast<double>(points - 1));
    }
  } else {
    throw validation_error("'sweep.grid' must be an array or a from/to/points object");
  }
  return grid;
}

SweepSpec parse_sweep(const json& sweep, const ScenarioTemplate& scenario) {
  expect_keys(sweep, "sweep",
              {"axis", "grid", "alpha", "rho_r_db_values", "methods", "orders", "users"});
  SweepSpec spec;
  spec.scenario = scenario;
  if (!sweep.contains("axis") || !sweep.at("axis").is_string())
    throw validation_error("'sweep.axis' must be a string");
  spec.axis = sweep_axis_from_string(sweep.at("axis").get<std::string>());
  spec.grid = parse_grid(sweep);
  spec.alpha = number_or(sweep, "sweep", "alpha", 0.33);
  if (sweep.contains("rho_r_db_values")) {
    const json& rr = sweep.at("rho_r_db_values");
    if (!rr.is_array()) throw validation_error("'sweep.rho_r_db_values' must be an array");
    for (const json& v : rr) {
      if (!v.is_number())
        throw validation_error("'sweep.rho_r_db_values' entries must be numbers");
      spec.rho_r_db_values.push_back(v.get<double>());
    }
  }
  if (!sweep.contains("methods") || !sweep.at("methods").is_array())
    throw validation_error("'sweep.methods' must be an array");
  for (const json& v : sweep.at("methods"))
    spec.methods.push_back(method_from_string(v.get<std::string>()));
  if (!sweep.contains("orders") || !sweep.at("orders").is_array())
    throw validation_error("'sweep.orders' must be an array");
  for (const json& v : sweep.at("orders"))
    spec.orders.push_back(DecodingOrder::from_string(v.get<std::string>()).index());
  if (sweep.contains("users")) {
    if (!sweep.at("users").is_array()) throw validation_error("'sweep.users' must be an array");
    for (const json& v : sweep.at("users")) {
      if (!v.is_number_integer()) throw validation_error("'sweep.users' entries must be integers");
      spec.users.push_back(v.get<int>());
    }
  } else {
    spec.users = {1, 2};
  }
  try {
    validate(spec);
  } catch (const validation_error&) {
    throw;
  } catch (const std::exception& e) {
    throw validation_error(std::string("sweep: ") + e.what());
  }
  return spec;
}

}  // namespace

ScenarioFile parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw validation_error("scenario root must be a JSON object");
  expect_keys(root, "scenario", {"system", "targets", "simulation", "sweep"});

  ScenarioFile file;
  file.scenario = parse_template(root);
  if (root.contains("sweep")) file.sweep = parse_sweep(root.at("sweep"), file.scenario);
  return file;
}

ScenarioFile load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open scenario file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

std::string serialize_scenario(const ScenarioFile& file) {
  const ScenarioTemplate& t = file.scenario;
  json sys;
  sys["path_loss_constant"] = t.path_loss_constant;
  sys["path_loss_exponent"] = t.path_loss_exponent;
  sys["distance_near_m"] = t.distance_near_m;
  sys["distance_far_m"] = t.distance_far_m;
  sys["residual_interference"] = t.residual_interference;
  switch (t.snr_form) {
    case SnrForm::transmit_db: sys["transmit_snr_db"] = t.snr_db; break;
    case SnrForm::received_db: sys["received_snr_db"] = t.snr_db; break;
    case SnrForm::power_noise_dbm:
      sys["transmit_power_dbm"] = t.transmit_power_dbm;
      sys["noise_power_dbm"] = t.noise_power_dbm;
      break;
  }

  json root;
  root["system"] = sys;
  root["targets"] = {{"threshold_near_bits", t.targets.threshold_near},
                     {"threshold_far_bits", t.targets.threshold_far}};
  root["simulation"] = {{"samples", t.simulation.sample_count},
                        {"seed", t.simulation.seed},
                        {"partitions", t.simulation.partition_count}};
  if (file.sweep) {
    const SweepSpec& s = *file.sweep;
    json sweep;
    sweep["axis"] = to_string(s.axis);
    sweep["grid"] = s.grid;
    sweep["alpha"] = s.alpha;
    if (!s.rho_r_db_values.empty()) sweep["rho_r_db_values"] = s.rho_r_db_values;
    json methods = json::array();
    for (Method m : s.methods) methods.push_back(to_string(m));
    sweep["methods"] = methods;
    json orders = json::array();
    for (int o : s.orders) orders.push_back("D" + std::to_string(o));
    sweep["orders"] = orders;
    sweep["users"] = s.users;
    root["sweep"] = sweep;
  }
  return root.dump(2) + "\n";
}

}  // namespace nomasec
